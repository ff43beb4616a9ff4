import re
import numpy as np
from errors import UsageError
from models.complexity_series import ComplexitySeries
from services.plot_service import plot_service


def polylines(svg):
    return [
        [tuple(float(v) for v in point.split(',')) for point in points.split()]
        for points in re.findall(r'<polyline[^>]* points="([^"]+)"', svg)
    ]


def test_constant_series_is_horizontal_line(tmp_path):
    """Test one constant series renders as one horizontal polyline"""
    series = ComplexitySeries(start_step=0, stride=1, values=[7] * 20)
    path = plot_service.emit_plot([series], str(tmp_path / "whole.svg"))

    svg = open(path).read()
    lines = polylines(svg)

    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
    assert len(lines) == 1
    assert len({y for _, y in lines[0]}) == 1
    assert 'class="legend"' not in svg
    assert '>step</text>' in svg
    assert '>LZ complexity</text>' in svg


def test_three_series_have_legend(tmp_path):
    """Test three polylines with a legend entry each"""
    series = [
        ComplexitySeries(start_step=0, stride=1, values=[i, i + 1, i + 2], label=f"region_{i}_1100")
        for i in range(3)
    ]
    svg = open(plot_service.emit_plot(series, str(tmp_path / "regions.svg"))).read()

    assert len(polylines(svg)) == 3
    assert len(re.findall(r'class="legend"', svg)) == 3
    assert "region_2_1100" in svg


def test_metadata_is_embedded(tmp_path):
    """Test metadata lines appear as comments"""
    series = ComplexitySeries(start_step=0, stride=1, values=[1, 2])
    svg = plot_service.render_svg([series], "t", metadata=["rule_number: 110", "a -- b"])

    assert "<!-- rule_number: 110 -->" in svg
    assert "--" not in svg.split("<!-- a")[1].split("-->")[0]


def test_decimation_bounds_segments_and_keeps_envelope():
    """Test 50,000 points become at most 4,000 segments with the same min/max"""
    rng = np.random.default_rng(4)
    values = np.cumsum(rng.normal(size=50000))
    steps = np.arange(50000)

    kept_steps, kept_values = plot_service.decimate(steps, values, 4000)

    assert len(kept_values) - 1 <= 4000
    assert kept_values.min() == values.min()
    assert kept_values.max() == values.max()
    assert np.all(np.diff(kept_steps) > 0)

    buckets = np.array_split(np.arange(50000), 2000)
    for bucket in buckets[::97]:
        inside = (kept_steps >= bucket[0]) & (kept_steps <= bucket[-1])
        assert kept_values[inside].max() == values[bucket].max()
        assert kept_values[inside].min() == values[bucket].min()


def test_large_series_plot_is_decimated(tmp_path):
    """Test that a rendered 50,000-point series stays within the segment budget"""
    series = ComplexitySeries(start_step=0, stride=1, values=list(range(50000)))
    svg = open(plot_service.emit_plot([series], str(tmp_path / "big.svg"))).read()

    assert len(polylines(svg)[0]) - 1 <= 4000


def test_short_series_is_not_decimated():
    """Test series within budget are kept whole"""
    steps, values = plot_service.decimate([0, 1, 2], [3, 1, 2], 4000)

    assert list(steps) == [0, 1, 2]
    assert list(values) == [3, 1, 2]


def test_empty_input_is_rejected(tmp_path):
    """Test that there must be something to plot"""
    for series in ([], [ComplexitySeries(start_step=0, stride=1, values=[])]):
        try:
            plot_service.emit_plot(series, str(tmp_path / "empty.svg"))
            assert False, "Should have raised UsageError"
        except UsageError:
            pass
    assert not (tmp_path / "empty.svg").exists()


def test_gnuplot_script(tmp_path):
    """Test the gnuplot script reads the CSV's columns"""
    path = plot_service.emit_gnuplot_script(
        str(tmp_path / "sections.csv"), ["section_0", "section_1"], str(tmp_path / "sections.gp")
    )
    script = open(path).read()

    assert "set datafile separator ','" in script
    assert "'sections.csv' using 1:2" in script
    assert "'sections.csv' using 1:3" in script
    assert "set xlabel 'step'" in script
