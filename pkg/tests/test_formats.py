from fractions import Fraction

import numpy as np
import pytest

from curvespace import (
    AngleConversion,
    AngleProfile,
    CurveStyle,
    ElementaryComponent,
    FormatError,
    GridLayout,
    LogRadiusProfile,
    elementary,
    normalize,
    read_angle,
    read_curve_csv,
    read_profile,
    read_samples_csv,
    render,
    unit_circle,
    write_angle,
    write_curve_csv,
    write_profile,
    write_svg,
)
from curvespace.profiles import TWO_PI


# -- profile documents --------------------------------------------------


def test_profile_document_round_trip_is_exact():
    p = LogRadiusProfile(
        constant=0.1234567890123456789,
        slope=-0.037,
        components=(
            ElementaryComponent(Fraction(7, 3), 0.2345678901234567, 1.9876543210987654),
            ElementaryComponent(0.7321, -0.5, 0.1),
        ),
        domain=(-1.5, 11.5),
    )
    assert read_profile(write_profile(p)) == p


def test_profile_document_shape():
    text = write_profile(elementary(Fraction(3, 2), 0.3))
    lines = text.splitlines()
    assert lines[0] == "curvespace-profile 1"
    assert lines[1].startswith("constant ")
    assert lines[4] == "components 1"
    assert lines[5].startswith("component rational 3 2 ")


def test_profile_document_blank_lines_tolerated():
    text = write_profile(unit_circle()).replace("\n", "\n\n")
    assert read_profile(text) == unit_circle()


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "missing"),
        ("something-else 1\n", "not a curvespace-profile"),
        ("curvespace-profile 2\nconstant 0\n", "version 2"),
        ("curvespace-profile 1\nslope 0\n", "expected 'constant'"),
        ("curvespace-profile 1\nconstant a\n", "not a number"),
        (
            "curvespace-profile 1\nconstant 0\nslope 0\ndomain 0 6\ncomponents 2\n"
            "component rational 3 1 0.1 0\n",
            "missing 'component'",
        ),
        (
            "curvespace-profile 1\nconstant 0\nslope 0\ndomain 0 6\ncomponents 1\n"
            "component rational 3 0 0.1 0\n",
            "denominator",
        ),
        (
            "curvespace-profile 1\nconstant 0\nslope 0\ndomain 0 6\ncomponents 1\n"
            "component rational -3 1 0.1 0\n",
            "positive",
        ),
        (
            "curvespace-profile 1\nconstant 0\nslope 0\ndomain 0 6\ncomponents 1\n"
            "component odd 3 1 0.1 0\n",
            "kind",
        ),
        (
            "curvespace-profile 1\nconstant 0\nslope 0\ndomain 6 0\ncomponents 0\n",
            "domain",
        ),
        (
            "curvespace-profile 1\nconstant 0\nslope 0\ndomain 0 6\ncomponents 0\nleftover\n",
            "extra line",
        ),
        (
            "curvespace-profile 1\nconstant 0 0\nslope 0\ndomain 0 6\ncomponents 0\n",
            "needs 1 value",
        ),
    ],
)
def test_profile_document_errors(text, fragment):
    with pytest.raises(FormatError) as err:
        read_profile(text)
    assert fragment in str(err.value)


def test_format_error_carries_line_number():
    bad = "curvespace-profile 1\nconstant 0\nslope zzz\n"
    with pytest.raises(FormatError) as err:
        read_profile(bad)
    assert err.value.line_number == 3
    assert "line 3" in str(err.value)


# -- angle documents ----------------------------------------------------


def test_angle_document_round_trip_is_exact():
    conv = AngleConversion(
        AngleProfile(2 * TWO_PI, ((2, 0.12345678901234567, -0.3), (7, 0.0, 1e-9))),
        log_scale=1.8362718927,
        angle_offset=-0.0555,
    )
    assert read_angle(write_angle(conv)) == conv


def test_angle_document_errors():
    with pytest.raises(FormatError):
        read_angle("curvespace-profile 1\n")
    bad_turn = (
        "curvespace-angle 1\ntotal_turn -1\nlog_scale 0\nangle_offset 0\ndescriptors 0\n"
    )
    with pytest.raises(FormatError) as err:
        read_angle(bad_turn)
    assert "total turn" in str(err.value)
    bad_k = (
        "curvespace-angle 1\ntotal_turn 6.28\nlog_scale 0\nangle_offset 0\n"
        "descriptors 1\ndescriptor 0 0.1 0\n"
    )
    with pytest.raises(FormatError):
        read_angle(bad_k)


# -- curve CSV ----------------------------------------------------------


def test_curve_csv_round_trip():
    c = render(elementary(2, 0.3), 128)
    c2 = read_curve_csv(write_curve_csv(c))
    assert np.array_equal(c.points, c2.points)
    assert np.array_equal(c.params, c2.params)
    assert np.array_equal(c.arc_lengths, c2.arc_lengths)
    assert c2.closed == c.closed


def test_curve_csv_errors():
    with pytest.raises(FormatError):
        read_curve_csv("x,y\n0,0\n")
    with pytest.raises(FormatError):
        read_curve_csv("theta,s,x,y\n0,0,0\n")
    with pytest.raises(FormatError):
        read_curve_csv("theta,s,x,y\n")
    # non-monotone parameter column is structural, not lexical
    bad = "theta,s,x,y\n0,0,0,0\n1,1,1,0\n0.5,2,2,0\n"
    with pytest.raises(FormatError):
        read_curve_csv(bad)


# -- samples CSV --------------------------------------------------------


def test_samples_csv_uniform_grid():
    n = 64
    theta = TWO_PI * np.arange(n) / n
    text = "theta,l\n" + "".join(
        f"{t:.17g},{v:.17g}\n" for t, v in zip(theta, np.sin(theta))
    )
    vals, period = read_samples_csv(text)
    assert vals.shape == (n,)
    assert period == pytest.approx(TWO_PI, rel=1e-12)


def test_samples_csv_rejects_nonuniform():
    text = "theta,l\n0,0\n1,0\n2.5,0\n"
    with pytest.raises(FormatError):
        read_samples_csv(text)


def test_samples_csv_rejects_too_few():
    with pytest.raises(FormatError):
        read_samples_csv("theta,l\n0,0\n1,0\n")


# -- SVG ----------------------------------------------------------------


def _panels(n):
    base = normalize(render(elementary(2, 0.3), 64))
    return [(base, CurveStyle(label=f"panel {i}")) for i in range(n)]


def test_svg_is_deterministic():
    layout = GridLayout(2, 2)
    a = write_svg(_panels(3), layout)
    b = write_svg(_panels(3), layout)
    assert a == b


def test_svg_structure():
    svg = write_svg(_panels(3), GridLayout(1, 3))
    assert svg.startswith('<?xml version="1.0"')
    assert svg.count("<polyline") == 3
    assert svg.count("<text") == 3
    assert svg.rstrip().endswith("</svg>")


def test_svg_overflow_rejected():
    with pytest.raises(ValueError):
        write_svg(_panels(5), GridLayout(2, 2))


def test_grid_layout_validation():
    with pytest.raises(ValueError):
        GridLayout(0, 3)
    with pytest.raises(ValueError):
        GridLayout(1, 1, cell=10.0, pad=6.0)


def test_svg_y_axis_points_up():
    # the topmost curve point must get the smallest SVG y coordinate
    curve = normalize(render(elementary(2, 0.3), 64))
    svg = write_svg([(curve, CurveStyle())], GridLayout(1, 1, cell=200.0, pad=10.0))
    pts = svg.split('points="')[1].split('"')[0].split()
    ys = [float(p.split(",")[1]) for p in pts]
    top_idx = int(np.argmax(curve.points[:, 1]))
    assert ys[top_idx] == min(ys)
