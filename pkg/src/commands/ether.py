"""
Ether command: search a rule's periodic background and optionally measure its coverage of a row.
"""
import json
from argparse import Namespace
from schemas.result_schemas import EtherTileSchema
from services.automaton_service import automaton_service
from services.ether_service import ether_service
from services.file_service import file_service
from utils.error_handler import handle_errors


def register(subparsers) -> None:
    parser = subparsers.add_parser('ether', help='find an ether tile')
    parser.add_argument('--rule', type=int, default=automaton_service.config.DEFAULT_RULE, help='ECA rule number 0-255')
    parser.add_argument('--spatial', type=int, default=14, help='spatial period in cells')
    parser.add_argument('--temporal', type=int, default=7, help='temporal period in steps')
    parser.add_argument('--coverage', metavar='CFG', help='report the ether coverage of a .cfg row')
    parser.add_argument('--json', action='store_true', help='print the tile as JSON')
    parser.set_defaults(handler=ether)


@handle_errors
def ether(args: Namespace) -> int:
    rule = automaton_service.make_rule_table(args.rule)
    tile = ether_service.find_ether_tile(rule, args.spatial, args.temporal)
    if tile is None:
        print("no tile found")
        return 0

    if args.json:
        print(json.dumps(EtherTileSchema().dump(tile), sort_keys=True))
    else:
        print(f"# rule {tile.rule_number}, {tile.spatial_period} cells x {tile.temporal_period} steps, "
              f"shift {tile.shift_per_period}")
        for row in tile.rows:
            print(row)

    if args.coverage:
        row = file_service.load_configuration(args.coverage)
        print(f"coverage {ether_service.ether_coverage(row, tile):.6f}")
    return 0
