"""
Management command to construct one measure with a nearly flat autoconvolution.

Writes report.json, measure.json and density.csv to the output directory.
Exits with code 1 when no attempt passes (the best attempt is written anyway).
"""
from ...arguments import RunCommand, add_construction_arguments, odd_order
from ...data import Command as RunCommandName


class Command(RunCommand):
    help = "Construct a symmetric grid measure whose autoconvolution is nearly flat"

    command = RunCommandName.CONSTRUCT

    def add_command_arguments(self, parser):
        """Add the construction options."""
        parser.add_argument("--n", type=odd_order, required=True, help="Odd grid order.")
        add_construction_arguments(parser)
        parser.add_argument("--max-attempts", type=int, default=64, help="Attempts before giving up.")

    def config_fields(self, options):
        """Map options onto ``RunConfig`` fields."""
        return {
            "n_values": [options["n"]],
            "gamma": options["gamma"],
            "epsilon": options["epsilon"],
            "phi": options["phi"],
            "cap_epsilon": options["cap_epsilon"],
            "seed": options["seed"],
            "max_attempts": options["max_attempts"],
        }
