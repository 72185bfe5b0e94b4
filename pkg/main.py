#!/usr/bin/env python3
"""
Variable-order fractional calculus toolkit.
Run: python main.py compare --op dleft-rl --N 3 5
Help: python main.py --help
"""

import sys
import logging
from pathlib import Path

# Logs go to stderr; stdout carries only results
logging.basicConfig(
    level=logging.WARNING,
    format='%(levelname)s:%(name)s:%(message)s',
    stream=sys.stderr,
)

# Add src directory to Python path for imports
src_path = Path(__file__).parent / 'src'
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from varfrac.cli import run


def main() -> int:
    """Main entry point."""
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
