import math
from fractions import Fraction

import numpy as np
import pytest

from curvespace import (
    AngleConversion,
    AngleProfile,
    ConvexityError,
    DomainError,
    ElementaryComponent,
    LogRadiusProfile,
    add_angle_profiles,
    angle_to_logradius,
    closure_gap,
    convexity_margin,
    decompose,
    elementary,
    evaluate_angle,
    logradius_to_angle,
    reconstruct,
    render_from_angle,
    single_component,
    spiral_limit_profile,
    turning_rate,
)
from curvespace.angle import _solve_increasing, angle_start
from curvespace.errors import AperiodicProfileError
from curvespace.profiles import TWO_PI


# -- profile basics -----------------------------------------------------


def test_evaluate_angle_single_cosine():
    p = single_component(3, 0.25)
    s = np.linspace(0.0, 1.0, 33)
    expect = TWO_PI * s + 0.25 * np.cos(3 * TWO_PI * s)
    assert np.abs(evaluate_angle(p, s) - expect).max() < 1e-14


def test_turning_rate_is_derivative():
    p = AngleProfile(TWO_PI, ((2, 0.1, -0.05), (5, 0.0, 0.08)))
    s = np.linspace(0.0, 1.0, 1001)
    ds = 1e-6
    inner = s[1:-1]
    numeric = (evaluate_angle(p, inner + ds) - evaluate_angle(p, inner - ds)) / (2 * ds)
    assert np.abs(turning_rate(p, inner) - numeric).max() < 1e-4


def test_angle_domain_is_unit_interval():
    p = single_component(2, 0.1)
    with pytest.raises(DomainError):
        evaluate_angle(p, 1.2)
    with pytest.raises(DomainError):
        turning_rate(p, -0.2)
    evaluate_angle(p, 0.0)
    evaluate_angle(p, 1.0)


def test_descriptor_canonicalisation():
    p = AngleProfile(TWO_PI, ((5, 0.1, 0.0), (2, 0.2, 0.3), (5, -0.1, 0.1)))
    assert p.descriptors == ((2, 0.2, 0.3), (5, 0.0, 0.1))


def test_angle_profile_validation():
    with pytest.raises(ValueError):
        AngleProfile(0.0)
    with pytest.raises(ValueError):
        AngleProfile(-TWO_PI)
    with pytest.raises(ValueError):
        AngleProfile(TWO_PI, ((0, 0.1, 0.0),))
    with pytest.raises(ValueError):
        AngleProfile(TWO_PI, ((2, float("nan"), 0.0),))


def test_add_angle_profiles_merges_descriptors():
    p = single_component(2, 0.4)
    q = single_component(5, 0.3)
    s = add_angle_profiles(p, q)
    assert s.descriptors == ((2, 0.4, 0.0), (5, 0.3, 0.0))
    with pytest.raises(ValueError):
        add_angle_profiles(p, AngleProfile(2 * TWO_PI, ((2, 0.1, 0.0),)))


def test_convexity_margin_formula():
    # single cosine: minimum turning rate is Theta * (1 - |a k|)
    for k, a in [(1, 0.5), (2, 0.3), (4, 0.2), (3, 0.5)]:
        got = convexity_margin(single_component(k, a))
        assert got == pytest.approx(TWO_PI * (1.0 - a * k), abs=1e-4)


def test_margin_positive_below_boundary_negative_above():
    assert convexity_margin(single_component(4, 0.2)) > 0.0
    assert convexity_margin(single_component(4, 0.3)) < 0.0


# -- rendering ----------------------------------------------------------


def test_render_pure_trend_is_circle_of_unit_length():
    c = render_from_angle(AngleProfile(TWO_PI))
    s = c.params
    exact = np.column_stack(
        [np.sin(TWO_PI * s) / TWO_PI, (1.0 - np.cos(TWO_PI * s)) / TWO_PI]
    )
    assert np.abs(c.points - exact).max() < 1e-12
    assert c.closed
    assert c.arc_lengths[-1] == 1.0


def test_convex_single_component_closes():
    c = render_from_angle(single_component(3, 0.2))
    assert c.closed
    assert closure_gap(c) < 1e-6


def test_first_descriptor_breaks_closure():
    # index 1 resonates with the trend: the curve drifts instead of closing
    c = render_from_angle(single_component(1, 0.5))
    assert not c.closed
    assert closure_gap(c) > 1e-2


def test_nonconvex_profile_still_renders():
    c = render_from_angle(single_component(3, 0.6))
    assert len(c) > 0  # pathological shapes are viewable, just not convex


# -- conversions --------------------------------------------------------


def test_solver_batch_cube_roots():
    targets = np.linspace(-8.0, 8.0, 21)

    def f(x):
        return x**3 - targets, 3.0 * x**2

    roots = _solve_increasing(f, -2.0, 2.0, np.zeros_like(targets), 1e-14, max_iter=200)
    assert np.abs(roots - np.cbrt(targets)).max() < 1e-10


def test_circle_profile_round_trip_constants():
    # unit circle: length 2 pi, no descriptors, log-radius identically 0
    conv = logradius_to_angle(LogRadiusProfile(), 1024)
    assert conv.profile.descriptors == ()
    assert conv.profile.total_turn == pytest.approx(TWO_PI, rel=1e-15)
    assert conv.log_scale == pytest.approx(math.log(TWO_PI), abs=1e-12)
    assert conv.angle_offset == pytest.approx(0.0, abs=1e-12)
    vals, period = angle_to_logradius(
        conv.profile, 1024, log_scale=conv.log_scale, angle_offset=conv.angle_offset
    )
    assert period == pytest.approx(TWO_PI, rel=1e-15)
    assert np.abs(vals).max() < 1e-12


def test_unit_length_circle_has_log_radius_of_inverse_turn():
    # the angle profile with no descriptors and unit length: r = 1/(2 pi)
    vals, _ = angle_to_logradius(AngleProfile(TWO_PI), 512)
    assert np.abs(vals + math.log(TWO_PI)).max() < 1e-12


def test_logradius_angle_round_trip_small_deformation():
    p = LogRadiusProfile(
        constant=0.2,
        components=(
            ElementaryComponent(2, 0.15, 0.4),
            ElementaryComponent(5, 0.04, 1.7),
        ),
    )
    conv = logradius_to_angle(p, 2048, 32)
    vals, period = angle_to_logradius(
        conv.profile, 2048, log_scale=conv.log_scale, angle_offset=conv.angle_offset
    )
    n = vals.size
    grid = angle_start(conv.profile, conv.angle_offset) + period * np.arange(n) / n
    assert np.abs(vals - p.evaluate(grid, extend=True)).max() < 1e-5


def test_angle_round_trip_through_logradius():
    ap = AngleProfile(TWO_PI, ((2, 0.15, 0.0), (3, 0.0, 0.08)))
    vals, period = angle_to_logradius(ap, 4096)
    rec = reconstruct(decompose(vals, period, 32))
    back = logradius_to_angle(rec, 4096, 32)
    assert back.profile.total_turn == pytest.approx(TWO_PI, rel=1e-15)
    d_in = {k: (a, b) for k, a, b in ap.descriptors}
    d_out = {k: (a, b) for k, a, b in back.profile.descriptors}
    for k in d_in:
        assert d_out[k][0] == pytest.approx(d_in[k][0], abs=1e-5)
        assert d_out[k][1] == pytest.approx(d_in[k][1], abs=1e-5)
    # the defaults gave a unit-length curve, so no scale reappears, and
    # the recovered offset is the tangent direction of the first sample
    # (the log-radius intermediate measures theta from that direction)
    assert back.log_scale == pytest.approx(0.0, abs=1e-6)
    assert back.angle_offset == pytest.approx(-angle_start(ap), abs=1e-4)


def test_conversion_requires_periodic_profile():
    with pytest.raises(AperiodicProfileError):
        logradius_to_angle(spiral_limit_profile(0.1))


def test_conversion_rejects_nonconvex_angle_profile():
    wild = single_component(3, 0.5)
    with pytest.raises(ConvexityError) as err:
        angle_to_logradius(wild)
    assert "margin" in str(err.value) or "turning rate" in str(err.value)


def test_multi_turn_angle_basis_misses_fractional_content():
    # over a double turn the descriptor basis only reaches every second
    # harmonic of s, while a frequency-3/2 profile keeps its dominant
    # content in the odd harmonics: the conversion is a lossy projection
    p = elementary(Fraction(3, 2), 0.3)
    conv = logradius_to_angle(p, 2048, 32)
    assert conv.profile.total_turn == pytest.approx(2 * TWO_PI, rel=1e-15)
    vals, period = angle_to_logradius(
        conv.profile, 2048, log_scale=conv.log_scale, angle_offset=conv.angle_offset
    )
    n = vals.size
    grid = angle_start(conv.profile, conv.angle_offset) + period * np.arange(n) / n
    err = np.abs(vals - p.evaluate(grid, extend=True)).max()
    assert err > 1e-2  # the dominant wave cannot be represented


def test_angle_conversion_record_validation():
    with pytest.raises(ValueError):
        AngleConversion(AngleProfile(TWO_PI), float("inf"), 0.0)
