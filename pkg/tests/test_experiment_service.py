import importlib
import os
from concurrent.futures import ThreadPoolExecutor
import numpy as np
import pytest
from PIL import Image
from marshmallow import ValidationError
from errors import RangeError, UsageError
from models.analysis_kind import AnalysisKind, InitialKind
from models.experiment_spec import AnalysisSpec, ExperimentSpec, InitialSource
from models.region import Region
from services.automaton_service import automaton_service
from services.experiment_service import experiment_service
from services.file_service import file_service
from services.lz78_service import lz78_service


def make_spec(output_dir, analyses=None, **overrides):
    values = dict(
        rule_number=110,
        initial=InitialSource(kind=InitialKind.RANDOM, density=0.5, seed=7),
        steps=40,
        width=200,
        analyses=analyses if analyses is not None else [AnalysisSpec(kind=AnalysisKind.WHOLE)],
        output_dir=str(output_dir),
        timestamp=False
    )
    values.update(overrides)
    return ExperimentSpec(**values)


def data_lines(path):
    return [line for line in open(path).read().splitlines() if not line.startswith('#')]


def comment_lines(path):
    return [line for line in open(path).read().splitlines() if line.startswith('#')]


def test_run_experiment_writes_every_analysis(tmp_path):
    """Test whole, sections and regions with smoothing write their CSV, SVG and drop files"""
    spec = make_spec(tmp_path, analyses=[
        AnalysisSpec(kind=AnalysisKind.WHOLE),
        AnalysisSpec(kind=AnalysisKind.SECTIONS, n_sections=4),
        AnalysisSpec(kind=AnalysisKind.REGIONS, regions=[Region(0, 50), Region(50, 50)])
    ], smoothing_period=10)

    written = experiment_service.run_experiment(spec)

    names = sorted(os.path.basename(path) for path in written)
    assert names == sorted([
        'whole.csv', 'whole.svg', 'whole_smoothed.csv', 'whole_smoothed.svg', 'drops.csv',
        'sections.csv', 'sections.svg', 'sections_smoothed.csv', 'sections_smoothed.svg',
        'regions.csv', 'regions.svg', 'regions_smoothed.csv', 'regions_smoothed.svg'
    ])
    assert all(os.path.exists(path) for path in written)

    whole = data_lines(tmp_path / 'whole.csv')
    assert whole[0] == 'step,value'
    assert len(whole) == 1 + 41
    assert data_lines(tmp_path / 'sections.csv')[0] == 'step,section_0,section_1,section_2,section_3'
    assert data_lines(tmp_path / 'regions.csv')[0] == 'step,region_0_50,region_50_50'
    assert data_lines(tmp_path / 'drops.csv')[0] == 'start_step,end_step,magnitude'

    smoothed = data_lines(tmp_path / 'whole_smoothed.csv')
    assert len(smoothed) == 1 + 32
    assert smoothed[1].startswith('9,')


def test_whole_row_values_match_phrase_counts(tmp_path, rule_110):
    """Test CSV values against an independent evolve-and-count"""
    spec = make_spec(tmp_path, steps=12, stride=3)
    experiment_service.run_experiment(spec)

    series = file_service.read_series_csv(str(tmp_path / 'whole.csv'))[0]
    initial = automaton_service.random_configuration(200, 0.5, 7)
    recording = automaton_service.evolve(initial, rule_110, 12, 3)

    assert series.steps == [0, 3, 6, 9, 12]
    assert series.values == [lz78_service.lz78_phrase_count(row.to_string()) for row in recording.rows]


def test_file_start_takes_width_from_file(tmp_path, write_cfg):
    """Test a .cfg start: its width, its step-0 complexity"""
    initial = automaton_service.random_configuration(150, 0.3, 11)
    spec = make_spec(
        tmp_path / 'out',
        initial=InitialSource(kind=InitialKind.FILE, path=write_cfg(initial)),
        width=None,
        steps=5
    )

    experiment_service.run_experiment(spec)

    first = data_lines(tmp_path / 'out' / 'whole.csv')[1]
    assert first == f"0,{lz78_service.lz78_phrase_count(initial.to_string())}"
    assert '# effective_width: 150' in comment_lines(tmp_path / 'out' / 'whole.csv')


def test_file_start_width_mismatch(tmp_path, write_cfg):
    """Test an explicit width that disagrees with the file"""
    spec = make_spec(
        tmp_path,
        initial=InitialSource(kind=InitialKind.FILE, path=write_cfg("0110" * 10)),
        width=41
    )
    try:
        experiment_service.run_experiment(spec)
        assert False, "Should have raised RangeError"
    except RangeError as e:
        assert "40 cells" in str(e)


def test_region_window(tmp_path):
    """Test a regions analysis restricted to steps 20..40"""
    spec = make_spec(tmp_path, analyses=[
        AnalysisSpec(kind=AnalysisKind.REGIONS, regions=[Region(100, 60)], from_step=20, to_step=40)
    ], plot=False)

    written = experiment_service.run_experiment(spec)

    assert [os.path.basename(path) for path in written] == ['regions.csv']
    lines = data_lines(tmp_path / 'regions.csv')
    assert lines[0] == 'step,value'
    assert lines[1].startswith('20,')
    assert lines[-1].startswith('40,')
    assert len(lines) == 1 + 21


def test_metadata_comments(tmp_path):
    """Test every artifact names its rule, seed and series kind"""
    experiment_service.run_experiment(make_spec(tmp_path, timestamp=True, plot=False))

    comments = comment_lines(tmp_path / 'whole.csv')

    assert '# rule_number: 110' in comments
    assert '# series: "raw"' in comments
    assert any(line.startswith('# initial: ') and '"seed": 7' in line for line in comments)
    assert comments[-1].startswith('# generated: ')


def test_runs_are_deterministic(tmp_path):
    """Test identical specs without timestamps produce identical bytes"""
    spec = make_spec(tmp_path, analyses=[
        AnalysisSpec(kind=AnalysisKind.WHOLE),
        AnalysisSpec(kind=AnalysisKind.SECTIONS, n_sections=3)
    ], smoothing_period=5)

    first = {path: open(path, 'rb').read() for path in experiment_service.run_experiment(spec)}
    second = {path: open(path, 'rb').read() for path in experiment_service.run_experiment(spec)}

    assert first == second


def test_failure_removes_partial_outputs(tmp_path):
    """Test a smoothing period longer than the run leaves no artifacts behind"""
    spec = make_spec(tmp_path / 'out', smoothing_period=100)
    try:
        experiment_service.run_experiment(spec)
        assert False, "Should have raised UsageError"
    except UsageError as e:
        assert "period" in str(e)

    assert list((tmp_path / 'out').iterdir()) == []


def test_experiment_needs_an_analysis(tmp_path):
    """Test that an empty analysis list is rejected"""
    try:
        experiment_service.run_experiment(make_spec(tmp_path, analyses=[]))
        assert False, "Should have raised UsageError"
    except UsageError:
        pass


def test_invalid_spec_is_validation_error(tmp_path):
    """Test out-of-range fields and windows past the last step"""
    bad_specs = [
        make_spec(tmp_path, rule_number=300),
        make_spec(tmp_path, analyses=[AnalysisSpec(kind=AnalysisKind.WHOLE, to_step=41)]),
        make_spec(tmp_path, analyses=[AnalysisSpec(kind=AnalysisKind.REGIONS, regions=[Region(190, 20)])]),
        make_spec(tmp_path, min_drop=1.5)
    ]
    for spec in bad_specs:
        try:
            experiment_service.run_experiment(spec)
            assert False, "Should have raised ValidationError"
        except ValidationError:
            pass


def test_reproduce_paper_pipeline(tmp_path, write_cfg):
    """Test the CTS run and its random companion at small scale"""
    initial = automaton_service.random_configuration(200, 0.5, 3)

    written = experiment_service.reproduce_paper(
        write_cfg(initial), str(tmp_path / 'out'),
        steps=60, period=10, n_sections=4,
        detail_regions=[Region(0, 50), Region(50, 50)], detail_from=20, detail_to=60,
        timestamp=False
    )

    cts = tmp_path / 'out' / 'cts'
    random = tmp_path / 'out' / 'random'
    for name in ('whole.csv', 'whole_smoothed.csv', 'sections.csv', 'regions.csv', 'regions_smoothed.csv', 'drops.csv'):
        assert str(cts / name) in written
    assert str(random / 'whole.csv') in written
    assert not (random / 'sections.csv').exists()

    assert len(data_lines(cts / 'whole.csv')) == 1 + 61
    assert data_lines(cts / 'regions.csv')[1].startswith('20,')
    assert '# effective_width: 200' in comment_lines(random / 'whole.csv')


def test_reproduce_paper_skip_random(tmp_path, write_cfg):
    """Test that --skip-random writes only the CTS run"""
    path = write_cfg(automaton_service.random_configuration(120, 0.5, 5))

    experiment_service.reproduce_paper(
        path, str(tmp_path), steps=20, period=5, n_sections=2,
        detail_regions=[Region(0, 60)], detail_from=0, detail_to=20, skip_random=True
    )

    assert (tmp_path / 'cts' / 'whole.csv').exists()
    assert not (tmp_path / 'random').exists()


def test_reproduce_paper_default_window_fits_short_run(tmp_path, write_cfg):
    """Test the configured detail window is cut back to a run that ends before it"""
    path = write_cfg(automaton_service.random_configuration(120, 0.5, 6))

    experiment_service.reproduce_paper(
        path, str(tmp_path), steps=30, period=5, n_sections=2,
        detail_regions=[Region(0, 60)], skip_random=True, timestamp=False
    )

    lines = data_lines(tmp_path / 'cts' / 'regions.csv')
    assert lines[1].startswith('0,')
    assert lines[-1].startswith('30,')


@pytest.mark.slow
def test_full_width_whole_row_run(tmp_path):
    """Test 2000 steps at 65,900 cells give 2001 rows starting near 6068"""
    spec = make_spec(
        tmp_path,
        initial=InitialSource(kind=InitialKind.RANDOM, density=0.5, seed=20120601),
        width=65900,
        steps=2000,
        plot=False
    )

    experiment_service.run_experiment(spec)

    series = file_service.read_series_csv(str(tmp_path / 'whole.csv'))[0]
    assert len(series) == 2001
    assert 5500 <= series.values[0] <= 6700
    assert series.values[-1] < series.values[0]


def test_one_process_pool_per_run(tmp_path, monkeypatch):
    """Test that every batch of a parallel run shares one pool and matches a sequential run"""
    experiment_module = importlib.import_module('services.experiment_service')
    created = []

    class RecordingPool(ThreadPoolExecutor):
        def __init__(self, max_workers=None):
            created.append(max_workers)
            super().__init__(max_workers=max_workers)

    monkeypatch.setattr(experiment_module, 'ProcessPoolExecutor', RecordingPool)
    monkeypatch.setattr(experiment_service.config, 'ROW_BATCH_SIZE', 4)
    analyses = [
        AnalysisSpec(kind=AnalysisKind.WHOLE),
        AnalysisSpec(kind=AnalysisKind.SECTIONS, n_sections=3)
    ]

    experiment_service.run_experiment(make_spec(tmp_path / 'parallel', analyses=analyses, plot=False, workers=2))
    experiment_service.run_experiment(make_spec(tmp_path / 'sequential', analyses=analyses, plot=False))

    assert created == [2]
    for name in ('whole.csv', 'sections.csv'):
        assert data_lines(tmp_path / 'parallel' / name) == data_lines(tmp_path / 'sequential' / name)


def test_region_images(tmp_path, rule_110):
    """Test one PNG per region, cropped to the region and the step window"""
    spec = make_spec(tmp_path, analyses=[
        AnalysisSpec(kind=AnalysisKind.REGIONS, regions=[Region(0, 30), Region(120, 45)], from_step=10, to_step=25)
    ], plot=False, images=True)

    written = experiment_service.run_experiment(spec)

    assert str(tmp_path / 'regions_region_0_30.png') in written
    assert str(tmp_path / 'regions_region_120_45.png') in written
    image = Image.open(tmp_path / 'regions_region_120_45.png')
    assert image.size == (45, 16)

    initial = automaton_service.random_configuration(200, 0.5, 7)
    row = automaton_service.evolve(initial, rule_110, 10).rows[-1]
    top = np.array(image.convert('L'))[0]
    assert list(top == 0) == [cell == 1 for cell in row.to_array()[120:165]]


def test_images_without_regions_write_no_png(tmp_path):
    """Test images only apply to regions analyses"""
    written = experiment_service.run_experiment(make_spec(tmp_path, plot=False, images=True))

    assert not any(path.endswith('.png') for path in written)
