import sys
from typing import List, Optional

from reward_route.errors import RewardRouteError

from .parser import build_parser

EXIT_ERROR = 1


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one command. Exit status 0 on success, 2 when `plan` finds no feasible sequence and 1 when the
    arguments, the scenario or a file operation fail. Other exceptions are bugs and propagate.
    """
    try:
        args = build_parser().parse_args(argv)
        return args.command(args)
    except (RewardRouteError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
