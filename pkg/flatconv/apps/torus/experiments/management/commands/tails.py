"""
Management command to compare empirical deviation tails with the Azuma bound.

The deviation threshold x* = epsilon N phi(n) sqrt(ln n) / sqrt(n) is always
one of the x values of a pair-count run.
"""
from ...arguments import RunCommand, add_construction_arguments, odd_order
from ...data import Command as RunCommandName


class Command(RunCommand):
    help = "Run a tail experiment for the pair-count deviation (or for bounded random walks)"

    command = RunCommandName.TAILS
    default_format = "csv"

    def add_command_arguments(self, parser):
        """Add the tail experiment options."""
        parser.add_argument("--n", type=odd_order, default=101, help="Odd grid order.")
        parser.add_argument("--N", dest="pair_count", type=int, default=None, help="Points per trial.")
        add_construction_arguments(parser)
        parser.add_argument("--trials", type=int, default=2000)
        parser.add_argument("--points", type=int, default=17, help="Number of x values.")
        parser.add_argument(
            "--walk-steps", type=int, default=None, help="Simulate +-c random walks of this length instead.",
        )
        parser.add_argument("--step-size", type=float, default=1.0, help="Step size c of the random walks.")

    def config_fields(self, options):
        """Map options onto ``RunConfig`` fields."""
        return {
            "n_values": [options["n"]],
            "pair_count": options["pair_count"],
            "gamma": options["gamma"],
            "epsilon": options["epsilon"],
            "phi": options["phi"],
            "cap_epsilon": options["cap_epsilon"],
            "trials": options["trials"],
            "seed": options["seed"],
            "points": options["points"],
            "walk_steps": options["walk_steps"],
            "step_size": options["step_size"],
        }
