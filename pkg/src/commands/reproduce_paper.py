"""
Reproduce-paper command: the full CTS-emulation pipeline on a supplied 65,900-cell configuration.
"""
from typing import Any, Dict
from schemas.experiment_schemas import ReproduceRequestSchema
from services.experiment_service import experiment_service
from utils.error_handler import handle_errors
from utils.validators import validate_arguments


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        'reproduce-paper',
        help='whole-row, smoothed, per-section and detail-region series of a CTS-emulating start'
    )
    parser.add_argument('config', help='.cfg file with the CTS-emulating configuration')
    parser.add_argument('--out', help='output directory (cts/ and random/ are created inside)')
    parser.add_argument('--rule', type=int, help='ECA rule number 0-255')
    parser.add_argument('--steps', type=int, help='number of steps to simulate')
    parser.add_argument('--stride', type=int, help='steps between recorded rows')
    parser.add_argument('--period', type=int, help='moving-average period')
    parser.add_argument('--sections', type=int, help='number of sections')
    parser.add_argument('--region', action='append', metavar='START:LEN', help='detail region (repeatable)')
    parser.add_argument('--from', dest='from_step', type=int, help='first step of the detail window')
    parser.add_argument('--to', dest='to_step', type=int, help='last step of the detail window')
    parser.add_argument('--seed', type=int, help='seed of the random-start companion run')
    parser.add_argument('--density', type=float, help='density of the random-start companion run')
    parser.add_argument('--min-drop', dest='min_drop', type=float, help='drop threshold as a fraction of the series range')
    parser.add_argument('--skip-random', dest='skip_random', action='store_true', help='skip the random-start companion run')
    parser.add_argument('--no-timestamp', dest='no_timestamp', action='store_true', help='omit the generation timestamp')
    parser.add_argument('--gnuplot', action='store_true', help='also write gnuplot scripts')
    parser.add_argument('--images', action='store_true', help='also draw each detail region over the window as a PNG')
    parser.add_argument('--workers', type=int, help='processes used for phrase counting')
    parser.set_defaults(handler=reproduce_paper)


@handle_errors
@validate_arguments(ReproduceRequestSchema)
def reproduce_paper(validated_data: Dict[str, Any]) -> int:
    """Print the written artifact paths, one per line"""
    written = experiment_service.reproduce_paper(
        config_path=validated_data['config'],
        output_dir=validated_data['out'],
        rule_number=validated_data['rule'],
        steps=validated_data['steps'],
        stride=validated_data['stride'],
        period=validated_data['period'],
        n_sections=validated_data['sections'],
        detail_regions=validated_data['region'],
        detail_from=validated_data['from_step'],
        detail_to=validated_data['to_step'],
        seed=validated_data['seed'],
        density=validated_data['density'],
        min_drop=validated_data['min_drop'],
        skip_random=validated_data['skip_random'],
        timestamp=not validated_data['no_timestamp'],
        gnuplot=validated_data['gnuplot'],
        workers=validated_data['workers'],
        images=validated_data['images']
    )
    for path in written:
        print(path)
    return 0
