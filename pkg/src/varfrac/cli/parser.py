"""
Command-line argument parsing module.
"""

import argparse
from typing import List, Optional, Tuple

COMMANDS = ('exact', 'oracle', 'approx', 'compare', 'fde', 'varmin')
OPERATORS = ('ileft', 'iright', 'dleft-rl', 'dright-rl', 'dleft-marchaud', 'dright-marchaud')


def parse_grid(text: str) -> Tuple[float, float, int]:
    """
    Parse MIN:MAX:POINTS.

    Raises:
        argparse.ArgumentTypeError: If the text is malformed
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be MIN:MAX:POINTS, got '{text}'")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be MIN:MAX:POINTS with numeric fields, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='varfrac',
        description='Variable-order fractional operators: expansions, reference values and solvers',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py exact --op dleft-rl                   # Closed form on the default grid
  python main.py compare --op ileft --n 2 --N 3 5      # Error norms of two truncations
  python main.py approx --op dright-marchaud --case power4-const --out approx.csv
  python main.py fde --N 3 --out fde.csv               # Reduced ODE solution
  python main.py varmin --N 2                          # Pontryagin shooting solution
  python main.py compare --op dleft-marchaud --profile quick
        """
    )

    parser.add_argument('command', choices=COMMANDS, help='What to compute')
    parser.add_argument('--op', dest='operator', choices=OPERATORS, default='dleft-rl',
                        help='Operator for exact/oracle/approx/compare (default: dleft-rl)')
    parser.add_argument('--n', type=int, default=None,
                        help='Integer derivatives kept in the expansion')
    parser.add_argument('--N', dest='sizes', type=int, nargs='+', default=None,
                        help='Truncation size(s); fde/varmin use the first one')
    parser.add_argument('--grid', type=parse_grid, default=None, metavar='MIN:MAX:POINTS',
                        help='Evaluation grid')
    parser.add_argument('--eps', type=float, default=None,
                        help='Offset of the first integration point from a (fde/varmin)')
    parser.add_argument('--delta', type=float, default=None,
                        help='Error norm is taken over t >= a + delta (compare)')
    parser.add_argument('--step', type=float, default=None,
                        help='Fixed RK4 step (fde/varmin)')
    parser.add_argument('--out', default=None, help='CSV output file (default: stdout)')
    parser.add_argument('--case', default=None,
                        help='Named test case (default depends on the command)')
    parser.add_argument('--profile', default=None,
                        help="Configuration profile (e.g. 'quick' loads config/profiles/quick.yaml)")
    parser.add_argument('--config-dir', default='config', help='Configuration directory')
    parser.add_argument('--workers', type=int, default=None,
                        help='Worker threads for grid evaluation (overrides parallel config)')
    parser.add_argument('--verbose', action='store_true', help='Debug logging on stderr')
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command line arguments.

    Args:
        argv: Argument list; defaults to sys.argv[1:]

    Returns:
        argparse.Namespace: Parsed arguments
    """
    return build_parser().parse_args(argv)
