"""
Evolve command: simulate a rule and optionally save the final row, the space-time history or its image.
"""
from typing import Any, Dict
from errors import RangeError
from models.region import Region
from services.automaton_service import automaton_service
from services.file_service import file_service
from services.image_service import image_service
from services.lz78_service import lz78_service
from schemas.experiment_schemas import EvolveRequestSchema
from utils.error_handler import handle_errors
from utils.validators import validate_arguments


def add_source_arguments(parser) -> None:
    """Flags selecting the rule and the initial configuration"""
    parser.add_argument('--rule', type=int, help='ECA rule number 0-255')
    parser.add_argument('--width', type=int, help='cells of a random start')
    parser.add_argument('--density', type=float, help='probability of a 1 cell in a random start')
    parser.add_argument('--seed', type=int, help='seed of the random start')
    parser.add_argument('--config', help='.cfg file with the initial configuration')
    parser.add_argument('--steps', type=int, help='number of steps to simulate')
    parser.add_argument('--stride', type=int, help='steps between recorded rows')


def register(subparsers) -> None:
    parser = subparsers.add_parser('evolve', help='evolve a configuration')
    add_source_arguments(parser)
    parser.add_argument('--out', help='write the final configuration as .cfg')
    parser.add_argument('--spacetime', help='write every recorded row, one per line')
    parser.add_argument('--image', help='draw the recorded rows as a .png or .pbm space-time image')
    parser.add_argument('--image-region', dest='image_region', metavar='START:LEN', help='cells drawn in --image (default: the whole row)')
    parser.add_argument('--from', dest='from_step', type=int, help='first step drawn in --image')
    parser.add_argument('--to', dest='to_step', type=int, help='last step drawn in --image')
    parser.set_defaults(handler=evolve)


@handle_errors
@validate_arguments(EvolveRequestSchema)
def evolve(validated_data: Dict[str, Any]) -> int:
    """
    Evolve and report, per recorded step, the density and LZ complexity.

    Output lines: step,density,lz
    """
    rule = automaton_service.make_rule_table(validated_data['rule'])
    if validated_data['config']:
        initial = file_service.load_configuration(validated_data['config'])
    else:
        width = validated_data['width'] or automaton_service.config.DEFAULT_WIDTH
        initial = automaton_service.random_configuration(width, validated_data['density'], validated_data['seed'])

    if validated_data['image_region']:
        image_region = Region.parse(validated_data['image_region'])
    else:
        image_region = Region(0, initial.width)
    first_drawn = validated_data['from_step'] or 0
    last_drawn = validated_data['steps'] if validated_data['to_step'] is None else validated_data['to_step']
    draw = validated_data['image'] is not None
    if draw and not image_region.fits(initial.width):
        raise RangeError(f"Image region {image_region} does not fit width {initial.width}")

    keep_rows = validated_data['spacetime'] is not None
    rows = []
    scanlines = []
    final = initial
    print('step,density,lz')
    for step, row in automaton_service.iter_evolution(initial, rule, validated_data['steps'], validated_data['stride']):
        print(f"{step},{row.density():.4f},{lz78_service.lz78_phrase_count(row.to_string())}")
        if keep_rows:
            rows.append(row)
        if draw and first_drawn <= step <= last_drawn:
            scanlines.append(image_service.scanline(row, image_region))
        final = row

    if validated_data['out']:
        file_service.save_configuration(final, validated_data['out'])
    if keep_rows:
        file_service.save_spacetime(rows, validated_data['spacetime'])
    if draw:
        image_service.emit_spacetime(scanlines, image_region.length, validated_data['image'], metadata=[
            f"rule_number: {rule.rule_number}",
            f"region: {image_region}",
            f"steps: {first_drawn}..{last_drawn}"
        ])
    return 0
