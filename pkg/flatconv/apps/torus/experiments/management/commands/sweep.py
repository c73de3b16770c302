"""
Management command to measure single-attempt success rates over grid orders.
"""
from ...arguments import RunCommand, add_construction_arguments, odd_order
from ...data import Command as RunCommandName


class Command(RunCommand):
    help = "Sweep grid orders and seeds, reporting success rates and the empirical n0"

    command = RunCommandName.SWEEP
    default_format = "csv"

    def add_command_arguments(self, parser):
        """Add the sweep options."""
        parser.add_argument("--n-values", type=odd_order, nargs="+", required=True, help="Odd grid orders.")
        add_construction_arguments(parser)
        parser.add_argument("--trials", type=int, default=100, help="Seeds per grid order (seed, seed+1, ...).")
        parser.add_argument(
            "--threshold", type=float, default=0.5, help="Success rate that locates n0.",
        )

    def config_fields(self, options):
        """Map options onto ``RunConfig`` fields."""
        return {
            "n_values": options["n_values"],
            "gamma": options["gamma"],
            "epsilon": options["epsilon"],
            "phi": options["phi"],
            "cap_epsilon": options["cap_epsilon"],
            "seed": options["seed"],
            "trials": options["trials"],
            "threshold": options["threshold"],
        }
