"""
Plot command: render series CSVs as one SVG chart.
"""
from argparse import Namespace
from pathlib import Path
from services.file_service import file_service
from services.plot_service import plot_service
from utils.error_handler import handle_errors


def register(subparsers) -> None:
    parser = subparsers.add_parser('plot', help='SVG chart of series CSVs')
    parser.add_argument('csv', nargs='+', help='series CSV files')
    parser.add_argument('--out', required=True, help='destination .svg')
    parser.add_argument('--title', default='LZ complexity', help='chart title')
    parser.add_argument('--gnuplot', action='store_true', help='also write a gnuplot script next to each CSV')
    parser.set_defaults(handler=plot)


@handle_errors
def plot(args: Namespace) -> int:
    series = []
    for path in args.csv:
        loaded = file_service.read_series_csv(path)
        if len(args.csv) > 1 and len(loaded) == 1:
            loaded[0].label = Path(path).stem
        series.extend(loaded)
        if args.gnuplot:
            columns = [item.label for item in loaded] if len(loaded) > 1 else ['value']
            plot_service.emit_gnuplot_script(path, columns, str(Path(path).with_suffix('.gp')), title=args.title)

    print(plot_service.emit_plot(series, args.out, title=args.title, metadata=[f"source: {path}" for path in args.csv]))
    return 0
