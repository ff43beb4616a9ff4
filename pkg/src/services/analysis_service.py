"""
Complexity observables of space-time recordings.
"""
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import repeat
from typing import List, Optional, Sequence, Tuple
import numpy as np
import pandas as pd
from config import get_config
from errors import RangeError, UsageError
from models.complexity_series import ComplexitySeries
from models.drop_event import DropEvent
from models.region import Region
from models.spacetime_recording import SpacetimeRecording
from services.lz78_service import lz78_service

logger = logging.getLogger(__name__)

Span = Tuple[int, int]


def _count_spans(row: str, spans: Sequence[Span]) -> List[int]:
    """Phrase counts of several slices of one row"""
    return [lz78_service.lz78_phrase_count(row[start:end]) for start, end in spans]


class AnalysisService:
    """Service for LZ complexity series, smoothing and drop detection"""

    def __init__(self):
        self.config = get_config()

    def count_rows(
        self,
        rows: Sequence[str],
        regions: Sequence[Optional[Region]],
        workers: Optional[int] = None,
        executor: Optional[Executor] = None
    ) -> List[List[int]]:
        """
        Phrase counts of every region of every row.

        Rows are independent, so with workers > 1 they are spread over a
        process pool. Callers that count many batches pass their own
        executor, which is used as is and left running.

        Args:
            rows: Rows as '0'/'1' strings, all the same width
            regions: Regions to measure; None stands for the whole row
            workers: Process count (defaults to WORKERS)
            executor: Pool to map over instead of a fresh one

        Returns:
            List[List[int]]: counts[i][j] for row i and region j

        Raises:
            RangeError: If a region does not fit the row width
        """
        workers = self.config.WORKERS if workers is None else workers
        if not rows:
            return []

        width = len(rows[0])
        spans: List[Span] = []
        for region in regions:
            if region is None:
                spans.append((0, width))
                continue
            if not region.fits(width):
                raise RangeError(f"Region {region} does not fit width {width}")
            spans.append((region.start_x, region.end_x))

        if len(rows) == 1 or (executor is None and workers <= 1):
            return [_count_spans(row, spans) for row in rows]

        chunksize = max(1, len(rows) // (max(workers, 2) * 4))
        if executor is not None:
            return list(executor.map(_count_spans, rows, repeat(spans), chunksize=chunksize))
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(_count_spans, rows, repeat(spans), chunksize=chunksize))

    def complexity_series(
        self,
        recording: SpacetimeRecording,
        region: Optional[Region] = None,
        workers: Optional[int] = None
    ) -> ComplexitySeries:
        """
        LZ complexity of a region of every recorded row.

        Args:
            recording: Space-time recording
            region: Region read in increasing x; None measures the whole row
            workers: Process count for the row counts

        Returns:
            ComplexitySeries: values[i] = phrase count of the region in row i

        Raises:
            RangeError: If the region does not fit the recording width
        """
        if region is not None and not region.fits(recording.width):
            raise RangeError(f"Region {region} does not fit width {recording.width}")

        rows = [row.to_string() for row in recording.rows]
        counts = self.count_rows(rows, [region], workers)
        return ComplexitySeries(
            start_step=recording.start_step,
            stride=recording.stride,
            values=[row_counts[0] for row_counts in counts],
            region=region,
            label=region.label if region else 'value'
        )

    def section_boundaries(self, width: int, n_sections: int) -> List[Region]:
        """
        Split a row into contiguous sections, left to right.

        When width is not divisible, the first (width mod n_sections)
        sections get one extra cell.

        Args:
            width: Row width
            n_sections: Number of sections (1 <= n_sections <= width)

        Returns:
            List[Region]: Non-overlapping sections covering the row

        Raises:
            UsageError: If n_sections is outside [1, width]
        """
        if not 1 <= n_sections <= width:
            raise UsageError(f"Section count must be within [1, {width}], got {n_sections}")

        base, extra = divmod(width, n_sections)
        regions = []
        start = 0
        for index in range(n_sections):
            length = base + (1 if index < extra else 0)
            regions.append(Region(start_x=start, length=length))
            start += length
        return regions

    def moving_average(self, series: ComplexitySeries, period: int) -> ComplexitySeries:
        """
        Trailing simple moving average.

        Args:
            series: Series to smooth
            period: Window length (1 <= period <= len(series))

        Returns:
            ComplexitySeries: output[i] = mean(values[i .. i+period-1]), starting
            (period - 1) strides later

        Raises:
            UsageError: If period is outside [1, len(series)]
        """
        if not 1 <= period <= len(series):
            raise UsageError(f"Moving-average period must be within [1, {len(series)}], got {period}")

        smoothed = pd.Series(series.values, dtype=float).rolling(window=period).mean()
        values = smoothed.to_numpy()[period - 1:]
        return ComplexitySeries(
            start_step=series.step_at(period - 1),
            stride=series.stride,
            values=[float(value) for value in values],
            region=series.region,
            label=series.label
        )

    def detect_drops(
        self,
        series: ComplexitySeries,
        window: Optional[int] = None,
        min_drop: Optional[float] = None
    ) -> List[DropEvent]:
        """
        Find significant declines of a smoothed complexity series.

        The series is smoothed with a trailing moving average of period
        window; a drop is a maximal run of strictly decreasing values
        (flat or rising steps end it) whose total fall is at least
        min_drop * (max - min) of the smoothed series.

        Args:
            series: Complexity series
            window: Smoothing period (defaults to SMOOTHING_PERIOD, capped at the series length)
            min_drop: Threshold as a fraction of the series range (defaults to MIN_DROP)

        Returns:
            List[DropEvent]: Declines in time order

        Raises:
            UsageError: If window < 1 or min_drop is outside (0, 1)
        """
        window = self.config.SMOOTHING_PERIOD if window is None else window
        min_drop = self.config.MIN_DROP if min_drop is None else min_drop
        if window < 1:
            raise UsageError(f"Drop window must be at least 1, got {window}")
        if not 0.0 < min_drop < 1.0:
            raise UsageError(f"min_drop must be within (0, 1), got {min_drop}")
        if len(series) < 2:
            return []

        smoothed = self.moving_average(series, min(window, len(series)))
        values = np.asarray(smoothed.values, dtype=float)
        span = float(values.max() - values.min())
        if span <= 0.0:
            return []
        threshold = min_drop * span

        events: List[DropEvent] = []
        falling = np.diff(values) < 0
        index = 0
        while index < len(falling):
            if not falling[index]:
                index += 1
                continue
            start = index
            while index < len(falling) and falling[index]:
                index += 1
            magnitude = float(values[start] - values[index])
            if magnitude >= threshold:
                events.append(DropEvent(
                    start_step=smoothed.step_at(start),
                    end_step=smoothed.step_at(index),
                    magnitude=magnitude
                ))

        logger.debug(f"Detected {len(events)} drops above {threshold:.3f}")
        return events


# Global analysis service instance
analysis_service = AnalysisService()
