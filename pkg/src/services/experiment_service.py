"""
Experiment orchestration: evolve once, measure every requested analysis, write artifacts.
"""
import json
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from contextlib import ExitStack
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Sequence
from config import get_config
from errors import RangeError, UsageError
from models.analysis_kind import AnalysisKind, InitialKind
from models.complexity_series import ComplexitySeries
from models.configuration import Configuration
from models.experiment_spec import AnalysisSpec, ExperimentSpec, InitialSource
from models.region import Region
from schemas.experiment_schemas import ExperimentSpecSchema
from schemas.result_schemas import DropEventSchema
from services.analysis_service import analysis_service
from services.automaton_service import automaton_service
from services.file_service import file_service
from services.image_service import image_service
from services.plot_service import plot_service

logger = logging.getLogger(__name__)

DROP_COLUMNS = ('start_step', 'end_step', 'magnitude')


@dataclass
class _Collector:
    """Values gathered for one analysis while the run streams by"""
    analysis: AnalysisSpec
    regions: List[Optional[Region]]
    labels: List[str]
    from_step: int
    to_step: int
    first_step: Optional[int] = None
    values: List[List[int]] = field(default_factory=list)
    # One list of image rows per region, when images are drawn
    scanlines: Optional[List[List[bytes]]] = None

    def wants(self, step: int) -> bool:
        return self.from_step <= step <= self.to_step


class ExperimentService:
    """Service for running experiments end to end"""

    def __init__(self):
        self.config = get_config()

    def initial_configuration(self, spec: ExperimentSpec) -> Configuration:
        """
        Build the starting row of an experiment.

        Args:
            spec: Experiment spec

        Returns:
            Configuration: Loaded from file, or drawn from the seeded generator

        Raises:
            RangeError: If a file start disagrees with an explicit width
        """
        source = spec.initial
        if source.kind == InitialKind.FILE:
            config = file_service.load_configuration(source.path)
            if spec.width is not None and spec.width != config.width:
                raise RangeError(f"{source.path} has {config.width} cells, spec asks for {spec.width}")
            return config

        width = self.config.DEFAULT_WIDTH if spec.width is None else spec.width
        return automaton_service.random_configuration(width, source.density, source.seed)

    def metadata_lines(self, spec: ExperimentSpec, width: int, extra: Optional[Dict] = None) -> List[str]:
        """
        Comment lines that tie an artifact to its spec.

        Keys are sorted and values JSON-encoded so identical specs give
        identical lines; the timestamp line is appended only when enabled.
        """
        metadata = ExperimentSpecSchema().dump(spec)
        metadata['effective_width'] = width
        metadata.update(extra or {})
        lines = [f"{key}: {json.dumps(metadata[key], sort_keys=True)}" for key in sorted(metadata)]
        if spec.timestamp:
            lines.append(f"generated: {datetime.now(timezone.utc).isoformat(timespec='seconds')}")
        return lines

    def _collector(self, analysis: AnalysisSpec, width: int, steps: int, images: bool = False) -> _Collector:
        if analysis.kind == AnalysisKind.WHOLE:
            regions: List[Optional[Region]] = [None]
            labels = ['value']
        elif analysis.kind == AnalysisKind.SECTIONS:
            regions = list(analysis_service.section_boundaries(width, analysis.n_sections))
            labels = [f"section_{index}" for index in range(len(regions))]
        else:
            for region in analysis.regions:
                if not region.fits(width):
                    raise RangeError(f"Region {region} does not fit width {width}")
            regions = list(analysis.regions)
            labels = [region.label for region in analysis.regions]

        from_step = analysis.from_step or 0
        to_step = steps if analysis.to_step is None else analysis.to_step
        if from_step > to_step or to_step > steps:
            raise UsageError(f"Analysis '{analysis.name}' window {from_step}..{to_step} is outside 0..{steps}")
        collector = _Collector(analysis, regions, labels, from_step, to_step)
        if images and analysis.kind == AnalysisKind.REGIONS:
            collector.scanlines = [[] for _ in regions]
        return collector

    def _flush(self, batch: List[tuple], collectors: Sequence[_Collector], executor: Optional[Executor]) -> None:
        for collector in collectors:
            selected = [(step, row, text) for step, row, text in batch if collector.wants(step)]
            if not selected:
                continue
            if collector.first_step is None:
                collector.first_step = selected[0][0]
            counts = analysis_service.count_rows(
                [text for _, _, text in selected], collector.regions, workers=1, executor=executor
            )
            collector.values.extend(counts)
            if collector.scanlines is not None:
                for lines, region in zip(collector.scanlines, collector.regions):
                    lines.extend(image_service.scanline(row, region) for _, row, _ in selected)
        batch.clear()

    def _series(self, collector: _Collector, stride: int) -> List[ComplexitySeries]:
        if collector.first_step is None:
            raise UsageError(f"Analysis '{collector.analysis.name}' recorded no rows; check --stride against --from/--to")
        return [
            ComplexitySeries(
                start_step=collector.first_step,
                stride=stride,
                values=[row[index] for row in collector.values],
                region=region,
                label=label
            )
            for index, (region, label) in enumerate(zip(collector.regions, collector.labels))
        ]

    def _write(
        self,
        spec: ExperimentSpec,
        name: str,
        series: List[ComplexitySeries],
        comments: List[str],
        written: List[str],
        title: str
    ) -> None:
        out = Path(spec.output_dir)
        csv_path = str(out / f"{name}.csv")
        written.append(csv_path)
        file_service.write_series_csv(csv_path, series, comments)
        if spec.plot:
            svg_path = str(out / f"{name}.svg")
            written.append(svg_path)
            plot_service.emit_plot(series, svg_path, title=title, metadata=comments)
        if spec.gnuplot:
            gp_path = str(out / f"{name}.gp")
            written.append(gp_path)
            columns = ['value'] if len(series) == 1 else [item.label for item in series]
            plot_service.emit_gnuplot_script(csv_path, columns, gp_path, title=title)

    def run_experiment(self, spec: ExperimentSpec) -> List[str]:
        """
        Evolve once and write the CSV, SVG and drop artifacts of every analysis.

        Rows stream through in batches of ROW_BATCH_SIZE, so memory stays
        bounded for any number of steps; only image rows, cropped to their
        region and window, are kept. With workers > 1 one process pool
        serves every batch. When anything fails, every artifact already
        written by this run is removed.

        Args:
            spec: Experiment spec

        Returns:
            List[str]: Paths of the written artifacts

        Raises:
            marshmallow.ValidationError: If the spec is invalid
            UsageError: If an analysis window or smoothing period does not fit the run
            DataError: If the initial configuration cannot be loaded
        """
        spec = ExperimentSpecSchema().load(ExperimentSpecSchema().dump(spec))
        if not spec.analyses:
            raise UsageError("An experiment needs at least one analysis")

        written: List[str] = []
        try:
            rule = automaton_service.make_rule_table(spec.rule_number)
            initial = self.initial_configuration(spec)
            collectors = [
                self._collector(analysis, initial.width, spec.steps, spec.images) for analysis in spec.analyses
            ]
            logger.info(
                f"Experiment: rule {spec.rule_number}, width {initial.width}, {spec.steps} steps, "
                f"analyses {[analysis.name for analysis in spec.analyses]}"
            )

            with ExitStack() as stack:
                executor = None
                if spec.workers > 1:
                    executor = stack.enter_context(ProcessPoolExecutor(max_workers=spec.workers))
                batch: List[tuple] = []
                for step, row in automaton_service.iter_evolution(initial, rule, spec.steps, spec.stride):
                    batch.append((step, row, row.to_string()))
                    if len(batch) >= self.config.ROW_BATCH_SIZE:
                        self._flush(batch, collectors, executor)
                self._flush(batch, collectors, executor)

            for collector in collectors:
                name = collector.analysis.name
                series = self._series(collector, spec.stride)
                comments = self.metadata_lines(spec, initial.width, {
                    'analysis': collector.analysis.to_dict(),
                    'series': 'raw'
                })
                self._write(spec, name, series, comments, written, title=f"LZ complexity ({name})")
                if collector.scanlines is not None:
                    self._write_images(spec, collector, comments, written)

                if spec.smoothing_period:
                    smoothed = [analysis_service.moving_average(item, spec.smoothing_period) for item in series]
                    comments = self.metadata_lines(spec, initial.width, {
                        'analysis': collector.analysis.to_dict(),
                        'series': f"moving average, period {spec.smoothing_period}"
                    })
                    self._write(spec, f"{name}_smoothed", smoothed, comments, written,
                                title=f"LZ complexity ({name}, moving average {spec.smoothing_period})")

                if collector.analysis.kind == AnalysisKind.WHOLE:
                    self._write_drops(spec, series[0], initial.width, collector.analysis, written)

        except BaseException:
            file_service.remove_quietly(written)
            raise

        logger.info(f"Experiment wrote {len(written)} artifacts to {spec.output_dir}")
        return written

    def _write_images(self, spec: ExperimentSpec, collector: _Collector, comments: List[str], written: List[str]) -> None:
        for region, label, lines in zip(collector.regions, collector.labels, collector.scanlines):
            path = str(Path(spec.output_dir) / f"{collector.analysis.name}_{label}.png")
            written.append(path)
            image_service.emit_spacetime(lines, region.length, path, metadata=comments)

    def _write_drops(self, spec: ExperimentSpec, series: ComplexitySeries, width: int, analysis: AnalysisSpec, written: List[str]) -> None:
        window = spec.smoothing_period or self.config.SMOOTHING_PERIOD
        events = analysis_service.detect_drops(series, window=window, min_drop=spec.min_drop)
        comments = self.metadata_lines(spec, width, {
            'analysis': analysis.to_dict(),
            'series': f"drops of the moving average, period {min(window, len(series))}"
        })
        path = str(Path(spec.output_dir) / 'drops.csv')
        written.append(path)
        file_service.write_table_csv(path, DropEventSchema(many=True).dump(events), DROP_COLUMNS, comments)

    def reproduce_paper(
        self,
        config_path: str,
        output_dir: str,
        rule_number: Optional[int] = None,
        steps: Optional[int] = None,
        stride: Optional[int] = None,
        period: Optional[int] = None,
        n_sections: Optional[int] = None,
        detail_regions: Optional[Sequence[Region]] = None,
        detail_from: Optional[int] = None,
        detail_to: Optional[int] = None,
        seed: Optional[int] = None,
        density: Optional[float] = None,
        min_drop: Optional[float] = None,
        skip_random: bool = False,
        timestamp: bool = True,
        gnuplot: bool = False,
        workers: Optional[int] = None,
        images: bool = False
    ) -> List[str]:
        """
        Run the CTS-emulation pipeline and its random-start companion.

        The configuration file run (into OUT/cts) measures the whole row,
        its moving average, n_sections sections and the detail regions
        over [detail_from, detail_to]; unset ends fall back to the configured
        window cut at the last step, starting at step 0 when the run ends
        before that window begins. The companion (into OUT/random)
        starts from a seeded random row of the same width and measures
        the whole row only.

        Args:
            config_path: .cfg file with the CTS-emulating configuration
            output_dir: Root output directory
            rule_number .. workers: Overrides of the configured defaults
            images: Also draw each detail region over the window as a PNG

        Returns:
            List[str]: Paths of all written artifacts
        """
        config = self.config
        steps = config.REPRODUCE_STEPS if steps is None else steps
        period = config.SMOOTHING_PERIOD if period is None else period
        detail_to = min(config.DETAIL_TO, steps) if detail_to is None else detail_to
        if detail_from is None:
            detail_from = config.DETAIL_FROM if config.DETAIL_FROM <= detail_to else 0
        if detail_regions is None:
            detail_regions = [Region.parse(text) for text in config.DETAIL_REGIONS.split(',')]

        common = dict(
            rule_number=config.DEFAULT_RULE if rule_number is None else rule_number,
            steps=steps,
            stride=config.DEFAULT_STRIDE if stride is None else stride,
            smoothing_period=period,
            min_drop=config.MIN_DROP if min_drop is None else min_drop,
            timestamp=timestamp,
            gnuplot=gnuplot,
            workers=config.WORKERS if workers is None else workers
        )

        cts_spec = ExperimentSpec(
            initial=InitialSource(kind=InitialKind.FILE, path=config_path),
            analyses=[
                AnalysisSpec(kind=AnalysisKind.WHOLE),
                AnalysisSpec(kind=AnalysisKind.SECTIONS, n_sections=config.REPRODUCE_SECTIONS if n_sections is None else n_sections),
                AnalysisSpec(kind=AnalysisKind.REGIONS, regions=list(detail_regions),
                             from_step=detail_from, to_step=detail_to)
            ],
            output_dir=str(Path(output_dir) / 'cts'),
            images=images,
            **common
        )
        written = self.run_experiment(cts_spec)

        if skip_random:
            return written

        width = file_service.load_configuration(config_path).width
        random_spec = ExperimentSpec(
            initial=InitialSource(
                kind=InitialKind.RANDOM,
                density=config.DEFAULT_DENSITY if density is None else density,
                seed=config.DEFAULT_SEED if seed is None else seed
            ),
            width=width,
            analyses=[AnalysisSpec(kind=AnalysisKind.WHOLE)],
            output_dir=str(Path(output_dir) / 'random'),
            **common
        )
        try:
            written.extend(self.run_experiment(random_spec))
        except BaseException:
            file_service.remove_quietly(written)
            raise
        return written


# Global experiment service instance
experiment_service = ExperimentService()
