"""
Command-line entry point.
"""
import argparse
import logging
import sys
from typing import List, Optional
from config import get_config


def create_parser() -> argparse.ArgumentParser:
    """Parser factory: every subcommand registers itself"""
    config = get_config()
    parser = argparse.ArgumentParser(
        prog='eca-lz',
        description='Elementary cellular automata and their LZ78 complexity'
    )
    parser.add_argument(
        '--log-level',
        default=config.LOG_LEVEL,
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='log verbosity on stderr'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    from commands import analyze, cts, ether, evolve, lz, plot, reproduce_paper

    evolve.register(subparsers)
    lz.register(subparsers)
    cts.register(subparsers)
    analyze.register(subparsers)
    ether.register(subparsers)
    plot.register(subparsers)
    reproduce_paper.register(subparsers)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, configure logging and run the selected command.

    Returns:
        int: Exit code (0 success, 2 usage, 3 data, 4 capability)
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )

    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())
