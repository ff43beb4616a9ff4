import os
import numpy as np
from PIL import Image
from models.complexity_series import ComplexitySeries
from services.automaton_service import automaton_service
from services.ether_service import ether_service
from services.file_service import file_service


def test_lz_prints_count(run_cli, capsys):
    """Test the phrase count of an inline string"""
    assert run_cli('lz', '0110') == 0

    assert capsys.readouterr().out == "3\n"


def test_lz_prints_phrases(run_cli, capsys):
    """Test --phrases lists phrases before the count"""
    assert run_cli('lz', '1011010100010', '--phrases') == 0

    assert capsys.readouterr().out.split() == ["1", "0", "11", "01", "010", "00", "10", "7"]


def test_lz_oracle_agrees(run_cli, capsys):
    """Test --oracle gives the same count"""
    run_cli('lz', '0000000000')
    fast = capsys.readouterr().out
    run_cli('lz', '0000000000', '--oracle')

    assert capsys.readouterr().out == fast == "4\n"


def test_lz_of_file(run_cli, capsys, write_cfg):
    """Test --file reads a .cfg"""
    assert run_cli('lz', '--file', write_cfg("0 1 1\n0")) == 0

    assert capsys.readouterr().out == "3\n"


def test_lz_illegal_symbol_is_data_error(run_cli, capsys):
    """Test exit 3 with a message naming the offset"""
    assert run_cli('lz', '012') == 3

    assert "byte 2" in capsys.readouterr().err


def test_lz_needs_input(run_cli):
    """Test exit 2 without a string or file"""
    assert run_cli('lz') == 2


def test_evolve_writes_outputs(run_cli, capsys, tmp_path, rule_110):
    """Test per-step lines, the final .cfg and the space-time file"""
    final = tmp_path / 'final.cfg'
    history = tmp_path / 'history.txt'

    code = run_cli('evolve', '--width', 50, '--seed', 1, '--steps', 3,
                   '--out', final, '--spacetime', history)

    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'step,density,lz'
    assert [line.split(',')[0] for line in lines[1:]] == ['0', '1', '2', '3']

    initial = automaton_service.random_configuration(50, None, 1)
    expected = automaton_service.evolve(initial, rule_110, 3)
    assert file_service.load_configuration(str(final)) == expected.rows[-1]
    assert open(history).read().splitlines() == [row.to_string() for row in expected.rows]


def test_evolve_invalid_rule(run_cli, capsys):
    """Test rule 300 exits 2"""
    assert run_cli('evolve', '--rule', 300, '--width', 10, '--steps', 1) == 2
    assert "rule" in capsys.readouterr().err


def test_evolve_two_initial_sources(run_cli, write_cfg):
    """Test --config together with --seed exits 2"""
    assert run_cli('evolve', '--config', write_cfg("0110"), '--seed', 3, '--steps', 1) == 2


def test_evolve_missing_config(run_cli, tmp_path):
    """Test a missing .cfg exits 3"""
    assert run_cli('evolve', '--config', tmp_path / 'missing.cfg', '--steps', 1) == 3


def test_cts_run_golden(run_cli, capsys):
    """Test the worked trace printed one word per line"""
    code = run_cli('cts', 'run', '--word', '1', '--appendant', '1', '--appendant', '101', '--max-steps', 6)

    assert code == 0
    assert capsys.readouterr().out.splitlines() == ["1", "1", "101", "011", "11", "11", "1101"]


def test_cts_run_reports_halt(run_cli, capsys, tmp_path):
    """Test a description file whose run halts"""
    description = tmp_path / 'halt.cts'
    description.write_text("# halts at once\n0\n1\n")

    assert run_cli('cts', 'run', description, '--lengths') == 0
    assert capsys.readouterr().out.splitlines() == ["1", "halted at step 1"]


def test_cts_run_without_system(run_cli):
    """Test exit 2 when neither a file nor --word is given"""
    assert run_cli('cts', 'run') == 2


def test_ether_prints_tile(run_cli, capsys):
    """Test the rule 110 tile header and its seven rows"""
    assert run_cli('ether', '--rule', 110, '--spatial', 14, '--temporal', 7) == 0

    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith('# rule 110, 14 cells x 7 steps')
    assert len(lines) == 8
    assert all(len(row) == 14 and set(row) <= {'0', '1'} for row in lines[1:])


def test_ether_coverage(run_cli, capsys, write_cfg, ether_tile):
    """Test --coverage of a pure ether row"""
    path = write_cfg(ether_service.tile_configuration(ether_tile, 14 * 20))

    assert run_cli('ether', '--coverage', path) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "coverage 1.000000"


def test_ether_none_found(run_cli, capsys):
    """Test a rule without a tile still exits 0"""
    assert run_cli('ether', '--rule', 0, '--spatial', 4, '--temporal', 2) == 0
    assert capsys.readouterr().out == "no tile found\n"


def test_ether_beyond_search_bound(run_cli):
    """Test exit 4 past the exhaustive search bound"""
    assert run_cli('ether', '--spatial', 21) == 4


def test_analyze_writes_artifacts(run_cli, capsys, tmp_path):
    """Test analyze prints paths that exist"""
    out = tmp_path / 'analysis'
    code = run_cli('analyze', '--width', 100, '--seed', 2, '--steps', 20,
                   '--sections', 2, '--region', '0:30', '--region', '30:30',
                   '--period', 5, '--out', out, '--no-timestamp')

    assert code == 0
    paths = capsys.readouterr().out.splitlines()
    assert str(out / 'whole.csv') in paths
    assert str(out / 'regions_smoothed.svg') in paths
    assert all(os.path.exists(path) for path in paths)


def test_analyze_rejects_bad_arguments(run_cli, tmp_path):
    """Test malformed regions, regions past the row and windows past the run"""
    common = ('--width', 100, '--steps', 20, '--out', tmp_path)

    assert run_cli('analyze', *common, '--region', 'abc') == 2
    assert run_cli('analyze', *common, '--region', '90:20') == 2
    assert run_cli('analyze', *common, '--to', 30) == 2
    assert run_cli('analyze', *common, '--period', 50) == 2
    assert list(tmp_path.iterdir()) == []


def test_plot_several_csvs(run_cli, capsys, tmp_path):
    """Test one polyline per CSV, labelled by file name"""
    for name, values in (('cts', [10, 8, 6]), ('random', [10, 10, 9])):
        series = ComplexitySeries(start_step=0, stride=1, values=values)
        file_service.write_series_csv(str(tmp_path / f"{name}.csv"), [series], [])

    code = run_cli('plot', tmp_path / 'cts.csv', tmp_path / 'random.csv', '--out', tmp_path / 'both.svg', '--gnuplot')

    assert code == 0
    assert capsys.readouterr().out.strip() == str(tmp_path / 'both.svg')
    svg = (tmp_path / 'both.svg').read_text()
    assert svg.count('<polyline') == 2
    assert 'data-label="random"' in svg
    assert (tmp_path / 'cts.gp').exists()


def test_plot_missing_csv(run_cli, tmp_path):
    """Test exit 3 for a missing CSV"""
    assert run_cli('plot', tmp_path / 'none.csv', '--out', tmp_path / 'x.svg') == 3


def test_reproduce_paper_small(run_cli, capsys, tmp_path, write_cfg):
    """Test the pipeline end to end at small scale"""
    path = write_cfg(automaton_service.random_configuration(100, 0.5, 9))
    out = tmp_path / 'out'

    code = run_cli('reproduce-paper', path, '--out', out, '--steps', 60, '--period', 10,
                   '--sections', 4, '--region', '0:50', '--region', '50:50',
                   '--from', 20, '--to', 60, '--no-timestamp')

    assert code == 0
    paths = capsys.readouterr().out.splitlines()
    assert str(out / 'cts' / 'sections_smoothed.csv') in paths
    assert str(out / 'random' / 'whole.csv') in paths
    assert all(os.path.exists(p) for p in paths)


def test_reproduce_paper_window_past_run(run_cli, write_cfg, tmp_path):
    """Test --to beyond --steps exits 2"""
    path = write_cfg("01" * 50)

    assert run_cli('reproduce-paper', path, '--out', tmp_path, '--steps', 60, '--from', 20, '--to', 80) == 2


def test_reproduce_paper_short_run_default_window(run_cli, capsys, write_cfg, tmp_path):
    """Test a run shorter than the configured detail window succeeds without --from/--to"""
    path = write_cfg(automaton_service.random_configuration(100, 0.5, 4))
    out = tmp_path / 'short'

    code = run_cli('reproduce-paper', path, '--out', out, '--steps', 40, '--period', 10,
                   '--sections', 2, '--region', '0:50', '--skip-random', '--no-timestamp')

    assert code == 0
    regions = file_service.read_series_csv(str(out / 'cts' / 'regions.csv'))[0]
    assert regions.steps[0] == 0
    assert regions.steps[-1] == 40


def test_evolve_draws_cropped_image(run_cli, capsys, tmp_path, rule_110):
    """Test --image crops to --image-region and the --from/--to window"""
    image_path = tmp_path / 'detail.png'

    code = run_cli('evolve', '--width', 80, '--seed', 5, '--steps', 12,
                   '--image', image_path, '--image-region', '20:40', '--from', 2, '--to', 9)

    assert code == 0
    image = Image.open(image_path)
    assert image.size == (40, 8)
    initial = automaton_service.random_configuration(80, None, 5)
    expected = automaton_service.evolve(initial, rule_110, 9).rows[2:]
    pixels = np.array(image.convert('L')) == 0
    assert np.array_equal(pixels, np.array([row.to_array()[20:60] == 1 for row in expected]))


def test_evolve_image_arguments(run_cli, tmp_path):
    """Test unsupported suffixes, regions past the row and windows past the run exit 2"""
    common = ('--width', 50, '--steps', 5)

    assert run_cli('evolve', *common, '--image', tmp_path / 'x.jpg') == 2
    assert run_cli('evolve', *common, '--image', tmp_path / 'x.png', '--image-region', '40:20') == 2
    assert run_cli('evolve', *common, '--image', tmp_path / 'x.png', '--to', 6) == 2
    assert not (tmp_path / 'x.png').exists()


def test_analyze_images(run_cli, capsys, tmp_path):
    """Test --images adds one PNG per region"""
    out = tmp_path / 'analysis'
    code = run_cli('analyze', '--width', 100, '--seed', 2, '--steps', 10,
                   '--region', '0:30', '--out', out, '--no-plot', '--images', '--no-timestamp')

    assert code == 0
    assert str(out / 'regions_region_0_30.png') in capsys.readouterr().out.splitlines()
    assert Image.open(out / 'regions_region_0_30.png').size == (30, 11)
