"""Fixed-grid quadrature helpers.

Everything in this module works on uniformly spaced samples with an even
number of panels (odd number of points), which keeps composite Simpson
rules applicable end to end.  The cumulative rule fills odd-index points
with the half-panel Simpson increment so the running integral is fourth
order accurate at every grid point, not just the even ones.
"""

import numpy as np

__all__ = [
    "even_panel_count",
    "composite_simpson",
    "cumulative_simpson",
    "gauss5",
    "GAUSS5_NODES",
    "GAUSS5_WEIGHTS",
]

# 5-point Gauss-Legendre nodes/weights on [-1, 1].
GAUSS5_NODES = np.array(
    [
        -0.9061798459386640,
        -0.5384693101056831,
        0.0,
        0.5384693101056831,
        0.9061798459386640,
    ]
)
GAUSS5_WEIGHTS = np.array(
    [
        0.2369268850561891,
        0.4786286704993665,
        0.5688888888888889,
        0.4786286704993665,
        0.2369268850561891,
    ]
)


def even_panel_count(span, samples_per_two_pi, minimum=2):
    """Number of equal panels covering ``span`` at the requested density.

    Rounded up to the next even integer so Simpson rules apply.
    """
    if span <= 0:
        raise ValueError(f"span must be positive, got {span}")
    if samples_per_two_pi <= 0:
        raise ValueError(
            f"samples_per_two_pi must be positive, got {samples_per_two_pi}"
        )
    n = int(np.ceil(samples_per_two_pi * span / (2.0 * np.pi)))
    n = max(n, minimum)
    if n % 2:
        n += 1
    return n


def _check_odd_length(y):
    if y.ndim != 1:
        raise ValueError("expected a 1-D sample array")
    if y.size < 3 or y.size % 2 == 0:
        raise ValueError(
            f"need an odd number of samples (even panel count), got {y.size}"
        )


def composite_simpson(values, dx):
    """Integral of uniformly spaced samples by the composite Simpson rule."""
    y = np.asarray(values, dtype=float)
    _check_odd_length(y)
    return (dx / 3.0) * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-2:2].sum())


def cumulative_simpson(values, dx):
    """Running integral with the same grid as the input.

    Even-index points carry sums of full two-panel Simpson estimates;
    each odd-index point adds the half-panel rule
    ``dx/12 * (5*y0 + 8*y1 - y2)`` on top of the preceding even point.
    First entry is 0.
    """
    y = np.asarray(values, dtype=float)
    _check_odd_length(y)
    a, b, c = y[0:-1:2], y[1::2], y[2::2]
    full = (dx / 3.0) * (a + 4.0 * b + c)
    half = (dx / 12.0) * (5.0 * a + 8.0 * b - c)
    out = np.empty_like(y)
    out[0::2] = np.concatenate(([0.0], np.cumsum(full)))
    out[1::2] = out[0:-1:2] + half
    return out


def gauss5(f, a, b):
    """Integral of ``f`` over ``[a, b]`` by one 5-point Gauss-Legendre rule.

    Exact for polynomials up to degree 9; used to refine table lookups
    over a fraction of a grid panel.
    """
    mid = 0.5 * (a + b)
    rad = 0.5 * (b - a)
    return rad * np.dot(GAUSS5_WEIGHTS, f(mid + rad * GAUSS5_NODES))
