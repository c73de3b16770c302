"""
Management command to re-check a saved measure from scratch.
"""
from ...arguments import RunCommand, add_construction_arguments
from ...data import Command as RunCommandName


class Command(RunCommand):
    help = "Verify a measure.json: acceptance checks plus the exact identities between computation paths"

    command = RunCommandName.VERIFY

    def add_command_arguments(self, parser):
        """Add the measure path and construction options."""
        parser.add_argument("measure", help="Path of a measure.json written by construct.")
        add_construction_arguments(parser)

    def config_fields(self, options):
        """Map options onto ``RunConfig`` fields."""
        return {
            "inputs": [options["measure"]],
            "gamma": options["gamma"],
            "epsilon": options["epsilon"],
            "phi": options["phi"],
            "cap_epsilon": options["cap_epsilon"],
            "seed": options["seed"],
        }
