"""
Analyze command: run one experiment and write its CSV/SVG artifacts.
"""
from commands.evolve import add_source_arguments
from models.experiment_spec import ExperimentSpec
from schemas.experiment_schemas import AnalyzeRequestSchema
from services.experiment_service import experiment_service
from utils.error_handler import handle_errors
from utils.validators import validate_arguments


def register(subparsers) -> None:
    parser = subparsers.add_parser('analyze', help='LZ complexity series of an evolution')
    add_source_arguments(parser)
    parser.add_argument('--sections', type=int, help='also measure N contiguous sections')
    parser.add_argument('--region', action='append', metavar='START:LEN', help='also measure a region (repeatable)')
    parser.add_argument('--period', type=int, help='moving-average period for the smoothed series')
    parser.add_argument('--min-drop', dest='min_drop', type=float, help='drop threshold as a fraction of the series range')
    parser.add_argument('--from', dest='from_step', type=int, help='first step measured')
    parser.add_argument('--to', dest='to_step', type=int, help='last step measured')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--no-timestamp', dest='no_timestamp', action='store_true', help='omit the generation timestamp')
    parser.add_argument('--no-plot', dest='no_plot', action='store_true', help='skip the SVG charts')
    parser.add_argument('--gnuplot', action='store_true', help='also write gnuplot scripts')
    parser.add_argument('--images', action='store_true', help='draw every --region over the window as a PNG')
    parser.add_argument('--workers', type=int, help='processes used for phrase counting')
    parser.set_defaults(handler=analyze)


@handle_errors
@validate_arguments(AnalyzeRequestSchema)
def analyze(spec: ExperimentSpec) -> int:
    """Print the written artifact paths, one per line"""
    for path in experiment_service.run_experiment(spec):
        print(path)
    return 0
