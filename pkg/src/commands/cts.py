"""
CTS command: run a cyclic tag system from a description file or inline words.
"""
import json
import logging
from argparse import Namespace
from errors import UsageError
from schemas.result_schemas import CtsTraceSchema
from services.cts_service import EMPTY_APPENDANT, cts_service
from utils.error_handler import handle_errors

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser('cts', help='cyclic tag systems')
    actions = parser.add_subparsers(dest='cts_action', required=True)

    run = actions.add_parser('run', help='run a system and print its words')
    run.add_argument('description', nargs='?', help='CTS description file')
    run.add_argument('--word', help='initial word (instead of a file)')
    run.add_argument('--appendant', action='append', help=f"appendant, repeatable ('{EMPTY_APPENDANT}' for empty)")
    run.add_argument('--max-steps', type=int, help='step limit')
    run.add_argument('--cap', type=int, help='symbols stored verbatim before keeping lengths only')
    run.add_argument('--lengths', action='store_true', help='print word lengths instead of words')
    run.add_argument('--json', action='store_true', help='print the trace as JSON')
    run.set_defaults(handler=cts_run)


@handle_errors
def cts_run(args: Namespace) -> int:
    """Print one word (or length) per step; a halt is reported on the last line"""
    if args.description and args.word:
        raise UsageError("Give a description file or --word, not both")
    if args.description:
        initial, system = cts_service.load_description(args.description)
    elif args.word and args.appendant:
        text = '\n'.join([args.word] + args.appendant) + '\n'
        initial, system = cts_service.parse_description(text, source='<arguments>')
    else:
        raise UsageError("Give a description file, or --word with at least one --appendant")

    trace = cts_service.cts_run(initial, system, max_steps=args.max_steps, symbol_cap=args.cap)

    if args.json:
        print(json.dumps(CtsTraceSchema().dump(trace), sort_keys=True))
        return 0

    if args.lengths:
        for length in trace.lengths:
            print(length)
    else:
        for word in trace.words:
            print(word)
        if trace.words_truncated:
            logger.warning(
                f"Symbol cap reached after {len(trace.words)} of {len(trace.lengths)} words; use --lengths for the rest"
            )

    if trace.halted:
        print(f"halted at step {trace.halted_at}")
    return 0
