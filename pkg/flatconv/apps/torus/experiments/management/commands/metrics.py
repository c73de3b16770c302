"""
Management command to compare two saved measures.
"""
from ...arguments import RunCommand, rational
from ...data import Command as RunCommandName


class Command(RunCommand):
    help = "Distances between two measures, with covering and dimension figures for the first one"

    command = RunCommandName.METRICS

    def add_command_arguments(self, parser):
        """Add the two measure paths and metric options."""
        parser.add_argument("first", help="Path of the first measure.json.")
        parser.add_argument("second", help="Path of the second measure.json.")
        parser.add_argument("--alpha", type=float, default=0.5)
        parser.add_argument("--m-index", type=int, default=2)
        parser.add_argument("--width", type=rational, default=None, help="Arc width (default: 1/n^2).")

    def config_fields(self, options):
        """Map options onto ``RunConfig`` fields."""
        return {
            "inputs": [options["first"], options["second"]],
            "alpha": options["alpha"],
            "m_index": options["m_index"],
            "width": options["width"],
        }
