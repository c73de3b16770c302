"""
Shared command-line plumbing for the experiment management commands.

Usage errors (bad flag values, unreadable inputs, parameters out of range)
end with exit code 2, an exhausted construction or a failed verification with
exit code 1.
"""
from __future__ import annotations

import argparse
import logging
from typing import Any

from django.core.management.base import BaseCommand, CommandError

from ....lib.config import get_default_cap_epsilon, get_setting, get_worker_count
from ....lib.rationals import as_fraction
from ..concentration.exceptions import ConcentrationError
from ..constructions.data import Phi
from ..constructions.exceptions import ConstructionError
from ..densities.exceptions import DensityError
from ..grid_measures.exceptions import GridMeasureError
from ..metrics.exceptions import MetricError
from . import api as experiments_api
from .data import Command, RunConfig
from .formats import ReportFormat

logger = logging.getLogger(__name__)

USAGE_ERROR = 2

_FORMATS = {"json": ReportFormat.JSON, "csv": ReportFormat.CSV}

_USAGE_ERRORS = (
    ConstructionError,
    ConcentrationError,
    DensityError,
    GridMeasureError,
    MetricError,
    OSError,
    ValueError,
)


def odd_order(value: str) -> int:
    """
    argparse type for a grid order: an odd integer >= 3.
    """
    try:
        n = int(value)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"invalid grid order {value!r}") from err
    if n % 2 == 0:
        raise argparse.ArgumentTypeError(f"n must be odd, got {n}")
    if n < 3:
        raise argparse.ArgumentTypeError(f"n must be at least 3, got {n}")
    return n


def rational(value: str):
    """Parse ``p/q`` or a decimal into a ``Fraction``."""
    try:
        return as_fraction(value)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not a rational number: {value!r}") from err


def add_construction_arguments(parser) -> None:
    """Options shared by every command that builds or checks a measure."""
    parser.add_argument("--gamma", type=float, default=0.6, help="Exponent of the point count N = floor(n^gamma).")
    parser.add_argument("--epsilon", type=float, default=1.0, help="Scale of the flatness bound.")
    parser.add_argument(
        "--phi",
        choices=[phi.value for phi in Phi],
        default=None,
        help="Slack sequence phi(n) of the flatness bound (default: FLATCONV['DEFAULT_PHI']).",
    )
    parser.add_argument(
        "--cap-epsilon",
        type=rational,
        default=None,
        help="Failure probability the multiplicity cap is sized for (default: FLATCONV['DEFAULT_CAP_EPSILON']).",
    )
    parser.add_argument("--seed", type=int, default=0, help="Seed of the run.")


def add_output_arguments(parser, default_format: str) -> None:
    """Add ``--output`` and ``--format``."""
    parser.add_argument("--output", default=".", help="Directory the artifacts are written to.")
    parser.add_argument("--format", choices=sorted(_FORMATS), default=default_format, help="Artifact format.")


class RunCommand(BaseCommand):
    """
    Base class of the experiment commands

    Subclasses set ``command`` and ``default_format``, add their own flags in
    ``add_command_arguments`` and map options to RunConfig fields in
    ``config_fields``.
    """

    command: Command
    default_format = "json"

    def add_arguments(self, parser):
        """Add the shared options, then the command's own."""
        self.add_command_arguments(parser)
        add_output_arguments(parser, self.default_format)

    def add_command_arguments(self, parser) -> None:
        """Add options specific to one command."""
        raise NotImplementedError

    def config_fields(self, options: dict[str, Any]) -> dict[str, Any]:
        """Return ``RunConfig`` fields taken from ``options``."""
        raise NotImplementedError

    def build_config(self, options: dict[str, Any]) -> RunConfig:
        """Build and validate the run configuration."""
        fields = self.config_fields(options)
        if "phi" in fields and fields["phi"] is None:
            fields["phi"] = get_setting("DEFAULT_PHI")
        if "cap_epsilon" in fields and fields["cap_epsilon"] is None:
            fields["cap_epsilon"] = get_default_cap_epsilon()
        return RunConfig(
            command=self.command,
            output=options["output"],
            output_format=_FORMATS[options["format"]],
            **fields,
        )

    def handle(self, *args, **options):
        """Run the command and map errors onto exit codes."""
        try:
            cfg = self.build_config(options)
            result = experiments_api.run(cfg)
            written = experiments_api.write_artifacts(result, cfg.output)
        except _USAGE_ERRORS as err:
            raise CommandError(str(err), returncode=USAGE_ERROR) from err

        logger.debug("%s ran on %d worker(s)", cfg.command, get_worker_count())
        for path in written:
            self.stdout.write(f"Wrote {path}")
        if result.status:
            raise CommandError(result.summary, returncode=result.status)
        self.stdout.write(result.summary)
