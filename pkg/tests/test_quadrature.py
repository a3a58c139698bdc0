import numpy as np
import pytest
from hypothesis import given, strategies as st

from curvespace.quadrature import (
    composite_simpson,
    cumulative_simpson,
    even_panel_count,
    gauss5,
)


def test_even_panel_count_rounds_up_to_even():
    assert even_panel_count(2 * np.pi, 4096) == 4096
    assert even_panel_count(4 * np.pi, 4096) == 8192
    assert even_panel_count(2 * np.pi, 100) == 100
    assert even_panel_count(1.0, 100) == 16  # ceil(100/(2 pi)) = 16
    assert even_panel_count(1.05, 100) == 18  # ceil = 17, bumped to even
    assert even_panel_count(1e-6, 100) == 2  # floor at the minimum


def test_even_panel_count_rejects_bad_args():
    with pytest.raises(ValueError):
        even_panel_count(0.0, 100)
    with pytest.raises(ValueError):
        even_panel_count(1.0, 0)


def test_simpson_exact_on_cubics():
    # Simpson integrates cubics exactly; only rounding remains.
    x = np.linspace(0.0, 1.0, 9)
    val = composite_simpson(x**3 - 2.0 * x**2 + 0.5, x[1] - x[0])
    exact = 1.0 / 4.0 - 2.0 / 3.0 + 0.5
    assert abs(val - exact) < 1e-15


def test_simpson_fourth_order_convergence():
    # integral of exp over [0, 2]: e^2 - 1
    exact = np.exp(2.0) - 1.0
    errs = []
    for n in (8, 16, 32):
        x = np.linspace(0.0, 2.0, n + 1)
        errs.append(abs(composite_simpson(np.exp(x), x[1] - x[0]) - exact))
    assert errs[0] / errs[1] > 8.0
    assert errs[1] / errs[2] > 8.0


def test_simpson_rejects_even_length():
    with pytest.raises(ValueError):
        composite_simpson(np.zeros(8), 0.1)
    with pytest.raises(ValueError):
        composite_simpson(np.zeros((3, 3)), 0.1)


def test_cumulative_simpson_matches_antiderivative_everywhere():
    # against exp, whose antiderivative is itself
    for n in (16, 64):
        x = np.linspace(-1.0, 1.5, n + 1)
        h = x[1] - x[0]
        out = cumulative_simpson(np.exp(x), h)
        exact = np.exp(x) - np.exp(x[0])
        # fourth order at every grid point, odd indices included
        assert np.abs(out - exact).max() < 20.0 * h**4


def test_cumulative_simpson_odd_points_fourth_order():
    errs = []
    for n in (16, 32, 64):
        x = np.linspace(0.0, 2.0, n + 1)
        h = x[1] - x[0]
        out = cumulative_simpson(np.exp(x), h)
        exact = np.exp(x) - 1.0
        errs.append(np.abs((out - exact)[1::2]).max())
    assert errs[0] / errs[1] > 8.0
    assert errs[1] / errs[2] > 8.0


def test_cumulative_simpson_starts_at_zero():
    out = cumulative_simpson(np.ones(5), 0.25)
    assert out[0] == 0.0
    assert np.allclose(out, [0.0, 0.25, 0.5, 0.75, 1.0])


@given(
    st.integers(min_value=1, max_value=20),
    st.floats(min_value=0.01, max_value=2.0),
)
def test_cumulative_endpoint_agrees_with_composite(half_panels, h):
    rng = np.random.default_rng(half_panels)
    y = rng.standard_normal(2 * half_panels + 1)
    total = composite_simpson(y, h)
    running = cumulative_simpson(y, h)
    scale = 1.0 + np.abs(y).sum() * h
    assert abs(running[-1] - total) < 1e-12 * scale


def test_gauss5_exact_to_degree_nine():
    coeff = np.array([0.3, -1.0, 0.2, 0.0, 1.5, 0.0, 0.0, -0.7, 0.0, 2.0])

    def poly(x):
        return sum(c * x**k for k, c in enumerate(coeff))

    exact = sum(c / (k + 1) * (1.3 ** (k + 1) - 0.2 ** (k + 1)) for k, c in enumerate(coeff))
    assert abs(gauss5(poly, 0.2, 1.3) - exact) < 1e-13


def test_gauss5_zero_width_interval():
    assert gauss5(np.exp, 0.7, 0.7) == 0.0
