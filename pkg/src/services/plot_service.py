"""
Self-contained SVG line charts of complexity series, plus optional gnuplot scripts.
"""
import logging
from html import escape
from pathlib import Path
from typing import List, Optional, Sequence, Tuple
import numpy as np
from config import get_config
from errors import UsageError
from models.complexity_series import ComplexitySeries
from services.file_service import file_service

logger = logging.getLogger(__name__)

COLORS = [
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
]

WIDTH = 1024
HEIGHT = 640
MARGIN_LEFT = 90
MARGIN_RIGHT = 200
MARGIN_TOP = 70
MARGIN_BOTTOM = 90
X_LABEL = "step"
Y_LABEL = "LZ complexity"


def _format_tick(value: float) -> str:
    if abs(value) >= 100:
        return f"{value:.0f}"
    if abs(value) >= 10:
        return f"{value:.1f}"
    return f"{value:.2f}"


class PlotService:
    """Service for rendering complexity series"""

    def __init__(self):
        self.config = get_config()

    def decimate(
        self,
        steps: Sequence[int],
        values: Sequence[float],
        max_segments: Optional[int] = None
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Reduce a polyline to at most max_segments segments, keeping its envelope.

        The points are split into max_segments // 2 consecutive buckets;
        each bucket contributes its minimum and its maximum in time order,
        so the min/max of every bucket (and of the whole series) survive.

        Args:
            steps: x coordinates, increasing
            values: y coordinates
            max_segments: Segment budget (defaults to PLOT_MAX_SEGMENTS)

        Returns:
            Tuple[np.ndarray, np.ndarray]: Kept steps and values

        Raises:
            UsageError: If max_segments is below 2
        """
        max_segments = self.config.PLOT_MAX_SEGMENTS if max_segments is None else max_segments
        if max_segments < 2:
            raise UsageError(f"Plot segment budget must be at least 2, got {max_segments}")

        x = np.asarray(steps)
        y = np.asarray(values, dtype=float)
        if len(y) <= max_segments + 1:
            return x, y

        keep: List[int] = []
        for bucket in np.array_split(np.arange(len(y)), max_segments // 2):
            low = int(bucket[np.argmin(y[bucket])])
            high = int(bucket[np.argmax(y[bucket])])
            keep.extend(sorted({low, high}))

        index = np.asarray(keep)
        return x[index], y[index]

    def render_svg(
        self,
        series: Sequence[ComplexitySeries],
        title: str,
        metadata: Sequence[str] = ()
    ) -> str:
        """
        Render series as one SVG document.

        Args:
            series: Non-empty list of series
            title: Chart title
            metadata: Lines embedded as XML comments

        Returns:
            str: SVG text

        Raises:
            UsageError: If there is nothing to plot
        """
        if not series or all(len(item) == 0 for item in series):
            raise UsageError("Cannot plot an empty series set")

        plot_left = MARGIN_LEFT
        plot_right = WIDTH - MARGIN_RIGHT
        plot_top = MARGIN_TOP
        plot_bottom = HEIGHT - MARGIN_BOTTOM

        lines_data = [self.decimate(item.steps, item.values) for item in series if len(item)]
        x_min = min(float(x[0]) for x, _ in lines_data)
        x_max = max(float(x[-1]) for x, _ in lines_data)
        y_min = min(float(y.min()) for _, y in lines_data)
        y_max = max(float(y.max()) for _, y in lines_data)
        if x_max <= x_min:
            x_min -= 1.0
            x_max += 1.0
        if y_min > 0:
            y_min = 0.0
        if y_max <= y_min:
            y_max = y_min + 1.0
        y_max *= 1.10

        def x_to_px(value: float) -> float:
            return plot_left + (value - x_min) / (x_max - x_min) * (plot_right - plot_left)

        def y_to_px(value: float) -> float:
            return plot_bottom - (value - y_min) / (y_max - y_min) * (plot_bottom - plot_top)

        out: List[str] = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">'
        ]
        for line in metadata:
            out.append(f"<!-- {line.replace('--', '- -')} -->")
        out.append('<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>')
        out.append(
            f'<text x="{WIDTH / 2:.1f}" y="36" text-anchor="middle" font-size="22" font-family="Arial">{escape(title)}</text>'
        )

        ticks = 6
        for i in range(ticks + 1):
            value = y_min + (y_max - y_min) * i / ticks
            y = y_to_px(value)
            out.append(f'<line x1="{plot_left}" y1="{y:.2f}" x2="{plot_right}" y2="{y:.2f}" stroke="#d9d9d9" stroke-width="1"/>')
            out.append(
                f'<text x="{plot_left - 10}" y="{y + 5:.2f}" text-anchor="end" font-size="13" font-family="Arial">{_format_tick(value)}</text>'
            )
        for i in range(ticks + 1):
            value = x_min + (x_max - x_min) * i / ticks
            x = x_to_px(value)
            out.append(f'<line x1="{x:.2f}" y1="{plot_bottom}" x2="{x:.2f}" y2="{plot_bottom + 6}" stroke="#000000" stroke-width="1"/>')
            out.append(
                f'<text x="{x:.2f}" y="{plot_bottom + 26}" text-anchor="middle" font-size="13" font-family="Arial">{_format_tick(value)}</text>'
            )

        out.append(f'<line x1="{plot_left}" y1="{plot_bottom}" x2="{plot_right}" y2="{plot_bottom}" stroke="#000000" stroke-width="2"/>')
        out.append(f'<line x1="{plot_left}" y1="{plot_top}" x2="{plot_left}" y2="{plot_bottom}" stroke="#000000" stroke-width="2"/>')

        legend_x = plot_right + 20
        for index, ((xs, ys), item) in enumerate(zip(lines_data, [s for s in series if len(s)])):
            color = COLORS[index % len(COLORS)]
            points = " ".join(f"{x_to_px(float(x)):.2f},{y_to_px(float(y)):.2f}" for x, y in zip(xs, ys))
            out.append(
                f'<polyline class="series" data-label="{escape(item.label)}" fill="none" '
                f'stroke="{color}" stroke-width="1.5" points="{points}"/>'
            )
            if len(lines_data) > 1:
                ly = plot_top + 20 + index * 22
                out.append(f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 26}" y2="{ly}" stroke="{color}" stroke-width="3"/>')
                out.append(
                    f'<text class="legend" x="{legend_x + 34}" y="{ly + 5}" font-size="13" font-family="Arial">{escape(item.label)}</text>'
                )

        out.append(
            f'<text x="{(plot_left + plot_right) / 2:.1f}" y="{HEIGHT - 25}" text-anchor="middle" font-size="16" font-family="Arial">{X_LABEL}</text>'
        )
        middle = (plot_top + plot_bottom) / 2
        out.append(
            f'<text x="28" y="{middle:.1f}" text-anchor="middle" font-size="16" font-family="Arial" '
            f'transform="rotate(-90 28 {middle:.1f})">{Y_LABEL}</text>'
        )
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def emit_plot(
        self,
        series: Sequence[ComplexitySeries],
        path: str,
        title: str = "LZ complexity",
        metadata: Sequence[str] = ()
    ) -> str:
        """
        Write an SVG line chart: one polyline per series, a legend when there are several.

        Args:
            series: Non-empty list of series
            path: Destination .svg path
            title: Chart title
            metadata: Spec lines embedded as comments

        Returns:
            str: The written path

        Raises:
            UsageError: If there is nothing to plot
        """
        document = self.render_svg(series, title, metadata)
        with file_service.atomic_writer(path) as handle:
            handle.write(document)
        logger.info(f"Wrote plot {path} ({len(series)} series)")
        return str(path)

    def emit_gnuplot_script(self, csv_path: str, columns: Sequence[str], path: str, title: str = "LZ complexity") -> str:
        """
        Write a gnuplot script that plots a series CSV to PNG.

        Args:
            csv_path: CSV the script reads
            columns: Value column names, in CSV order
            path: Destination .gp path
            title: Plot title

        Returns:
            str: The written path
        """
        data = Path(csv_path).name
        image = Path(csv_path).with_suffix('.png').name
        plots = ", \\\n     ".join(
            f"'{data}' using 1:{index + 2} with lines title '{column}'"
            for index, column in enumerate(columns)
        )
        script = (
            "set datafile separator ','\n"
            "set datafile commentschars '#'\n"
            "set key autotitle columnhead\n"
            "set terminal pngcairo size 1024,640\n"
            f"set output '{image}'\n"
            f"set title '{title}'\n"
            f"set xlabel '{X_LABEL}'\n"
            f"set ylabel '{Y_LABEL}'\n"
            f"plot {plots}\n"
        )
        with file_service.atomic_writer(path) as handle:
            handle.write(script)
        return str(path)


# Global plot service instance
plot_service = PlotService()
