"""
LZ command: LZ78 phrase count of a binary string or a .cfg file.
"""
import sys
from argparse import Namespace
from errors import UsageError
from services.file_service import file_service
from services.lz78_service import lz78_service
from utils.error_handler import handle_errors


def register(subparsers) -> None:
    parser = subparsers.add_parser('lz', help='LZ78 complexity of a binary string')
    source = parser.add_mutually_exclusive_group()
    source.add_argument('string', nargs='?', help="string of 0/1 symbols ('-' reads stdin)")
    source.add_argument('--file', help='.cfg file to measure')
    parser.add_argument('--phrases', action='store_true', help='print the phrases, one per line, before the count')
    parser.add_argument('--oracle', action='store_true', help='use the naive reference parser')
    parser.set_defaults(handler=lz)


@handle_errors
def lz(args: Namespace) -> int:
    if args.file:
        text = file_service.load_configuration(args.file).to_string()
    elif args.string == '-':
        text = sys.stdin.read().strip()
    elif args.string is not None:
        text = args.string
    else:
        raise UsageError("Give a string, '-' for stdin, or --file")

    if args.oracle:
        phrases = lz78_service.naive_lz78_parse(text)
    elif args.phrases:
        phrases = lz78_service.lz78_parse(text).phrases
    else:
        print(lz78_service.lz78_phrase_count(text))
        return 0

    if args.phrases:
        for phrase in phrases:
            print(phrase)
    print(len(phrases))
    return 0
