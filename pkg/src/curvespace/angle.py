"""The classical angle-of-tangent representation, and duality with log-radius.

A closed convex curve of length ``L``, traversed at unit speed in the
normalised arc length ``s`` in ``[0, 1]``, is fixed by its tangent
angle

    theta(s) = s * Theta + sum_k [a_k * cos(k*Theta*s) + b_k * sin(k*Theta*s)]

where ``Theta`` is the total turn (``2*pi`` for a simple closed
curve).  This is the Fourier-descriptor baseline the log-radius algebra
is measured against: the descriptors form a vector space too, but
convexity is not preserved under its operations -- the turning rate
``dtheta/ds`` must stay positive, and for a single cosine descriptor it
dips to ``Theta * (1 - |a_k * k|)``, so descriptors past ``|a_k*k| = 1``
leave the convex world entirely.

The two representations are linked by a change of variables.  Going
from log-radius to angle profiles drops two numbers that normalised arc
length cannot carry: the overall scale ``log L`` and the absolute
direction of the starting tangent.  The conversions here return /
accept them explicitly (``log_scale`` and ``angle_offset``) so a round
trip reproduces the original profile exactly rather than only up to
similarity.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AperiodicProfileError,
    ConvexityError,
    DomainError,
    NumericRangeError,
)
from .profiles import TWO_PI
from .quadrature import (
    GAUSS5_NODES,
    GAUSS5_WEIGHTS,
    cumulative_simpson,
    even_panel_count,
)
from .render import PlaneCurve, _bbox_diagonal

__all__ = [
    "AngleProfile",
    "AngleConversion",
    "evaluate_angle",
    "turning_rate",
    "single_component",
    "add_angle_profiles",
    "convexity_margin",
    "render_from_angle",
    "logradius_to_angle",
    "angle_to_logradius",
    "angle_start",
]

DEFAULT_MAX_K = 32


def _canonical_descriptors(descriptors):
    acc = {}
    for k, a, b in descriptors:
        k = int(k)
        if k < 1:
            raise ValueError(f"descriptor index must be >= 1, got {k}")
        a = float(a)
        b = float(b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError("descriptor coefficients must be finite")
        if k in acc:
            acc[k] = (acc[k][0] + a, acc[k][1] + b)
        else:
            acc[k] = (a, b)
    return tuple(
        (k, a, b) for k, (a, b) in sorted(acc.items()) if not (a == 0.0 and b == 0.0)
    )


@dataclass(frozen=True)
class AngleProfile:
    """Tangent angle of a unit-length curve as trend plus Fourier terms.

    Attributes
    ----------
    total_turn : float
        Total turning angle over the whole curve; positive.
    descriptors : tuple of (k, a_k, b_k)
        Harmonic index with cosine and sine coefficients, sorted by
        index, duplicates merged, zero pairs dropped.
    """

    total_turn: float
    descriptors: tuple = ()

    def __post_init__(self):
        turn = float(self.total_turn)
        if not math.isfinite(turn) or turn <= 0.0:
            raise ValueError(f"total turn must be positive, got {self.total_turn!r}")
        object.__setattr__(self, "total_turn", turn)
        object.__setattr__(
            self, "descriptors", _canonical_descriptors(self.descriptors)
        )


@dataclass(frozen=True)
class AngleConversion:
    """An angle profile plus the two numbers its normalisation drops.

    ``log_scale`` is the log of the curve length; ``angle_offset`` is
    the constant part of the tangent direction.  Feeding all three back
    into :func:`angle_to_logradius` undoes :func:`logradius_to_angle`.
    """

    profile: AngleProfile
    log_scale: float = 0.0
    angle_offset: float = 0.0

    def __post_init__(self):
        ls = float(self.log_scale)
        ao = float(self.angle_offset)
        if not (math.isfinite(ls) and math.isfinite(ao)):
            raise ValueError("log_scale and angle_offset must be finite")
        object.__setattr__(self, "log_scale", ls)
        object.__setattr__(self, "angle_offset", ao)


def _check_unit_interval(s):
    arr = np.asarray(s, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(arr < -1e-12) or np.any(arr > 1.0 + 1e-12):
        bad = arr[(arr < -1e-12) | (arr > 1.0 + 1e-12)][0]
        raise DomainError(f"s = {bad:g} outside [0, 1]")
    return arr, scalar


def evaluate_angle(profile, s):
    """Tangent angle theta(s) on the normalised arc length ``s`` in [0, 1]."""
    arr, scalar = _check_unit_interval(s)
    turn = profile.total_turn
    vals = turn * arr
    for k, a, b in profile.descriptors:
        arg = k * turn * arr
        vals += a * np.cos(arg) + b * np.sin(arg)
    return vals[0] if scalar else vals


def turning_rate(profile, s):
    """Derivative dtheta/ds; positive everywhere exactly when convex."""
    arr, scalar = _check_unit_interval(s)
    turn = profile.total_turn
    vals = np.full(arr.shape, turn)
    for k, a, b in profile.descriptors:
        arg = k * turn * arr
        vals += k * turn * (b * np.cos(arg) - a * np.sin(arg))
    return vals[0] if scalar else vals


def single_component(k, a_k, total_turn=TWO_PI):
    """Angle profile with one cosine descriptor, ``s*Theta + a_k*cos(k*Theta*s)``."""
    return AngleProfile(total_turn, ((int(k), float(a_k), 0.0),))


def add_angle_profiles(p1, p2):
    """Merge descriptors of two angle profiles sharing one total turn.

    The linear trend is kept once, so this is the descriptor-space
    analogue of mixing shapes.  Total turns must agree.
    """
    if not math.isclose(p1.total_turn, p2.total_turn, rel_tol=1e-12, abs_tol=0.0):
        raise ValueError(
            f"total turns differ: {p1.total_turn!r} vs {p2.total_turn!r}"
        )
    return AngleProfile(p1.total_turn, p1.descriptors + p2.descriptors)


def convexity_margin(profile, samples_per_two_pi=4096):
    """Minimum of the turning rate over a dense grid of ``s``.

    Positive means the represented curve is convex; the sign flips when
    a descriptor crosses ``|a_k * k| = 1``.
    """
    panels = even_panel_count(profile.total_turn, samples_per_two_pi)
    s = np.linspace(0.0, 1.0, panels + 1)
    return float(turning_rate(profile, s).min())


def render_from_angle(profile, samples_per_two_pi=4096, closure_tol=1e-6):
    """Integrate the unit tangent into a curve of length 1.

    The curve parameter and arc length both equal ``s``.  The closed
    flag is set from the same relative endpoint-gap test used when
    rendering log-radius profiles.
    """
    panels = even_panel_count(profile.total_turn, samples_per_two_pi)
    s = np.linspace(0.0, 1.0, panels + 1)
    theta = evaluate_angle(profile, s)
    h = 1.0 / panels
    x = cumulative_simpson(np.cos(theta), h)
    y = cumulative_simpson(np.sin(theta), h)
    pts = np.column_stack([x, y])
    gap = float(np.hypot(x[-1] - x[0], y[-1] - y[0])) / _bbox_diagonal(pts)
    return PlaneCurve(pts, s, s.copy(), closed=(gap <= closure_tol))


def angle_start(profile, angle_offset=0.0):
    """Absolute tangent direction at ``s = 0``."""
    return angle_offset + float(evaluate_angle(profile, 0.0))


# -- duality -----------------------------------------------------------


def _solve_increasing(f_and_deriv, lo, hi, x0, xtol, max_iter=80):
    """Vectorized safeguarded Newton for a batch of increasing functions.

    Falls back to bisection whenever a Newton step leaves the current
    bracket, so convergence does not depend on the starting guess.
    """
    x = np.clip(np.asarray(x0, dtype=float), lo, hi)
    lo_b = np.full_like(x, lo)
    hi_b = np.full_like(x, hi)
    for _ in range(max_iter):
        val, deriv = f_and_deriv(x)
        hi_b = np.where(val > 0.0, np.minimum(hi_b, x), hi_b)
        lo_b = np.where(val <= 0.0, np.maximum(lo_b, x), lo_b)
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = x - val / deriv
        bad = ~np.isfinite(cand) | (cand < lo_b) | (cand > hi_b)
        cand = np.where(bad, 0.5 * (lo_b + hi_b), cand)
        moved = np.abs(cand - x)
        x = cand
        if moved.max() <= xtol:
            break
    return x


def logradius_to_angle(profile, samples_per_two_pi=4096, max_k=DEFAULT_MAX_K):
    """Change of variables from log-radius to the angle representation.

    Integrates ``r = exp(l)`` over one period to get arc length as a
    function of tangent angle, inverts it on a uniform grid of
    normalised arc length (Newton with a Gauss-refined lookup table),
    and projects the angular residue ``theta(s) - s*Theta`` onto the
    descriptor basis.

    Parameters
    ----------
    profile : LogRadiusProfile
        Must be periodic; its domain must cover one full period.
    samples_per_two_pi : int
        Grid density for the quadrature, inversion, and projection.
    max_k : int
        Highest descriptor index kept (capped by the Nyquist limit of
        the grid).

    Returns
    -------
    AngleConversion
        The angle profile plus ``log_scale`` (log curve length) and
        ``angle_offset`` (mean tangent direction), which the angle
        normalisation cannot represent.
    """
    turns = profile.period_turns()
    if turns is None:
        raise AperiodicProfileError(
            "only periodic profiles have an angle representation"
        )
    total = TWO_PI * turns
    lo = profile.domain[0]
    panels = even_panel_count(total, samples_per_two_pi)
    h = total / panels
    grid = lo + h * np.arange(panels + 1)

    def radius(theta):
        return np.exp(profile.evaluate(theta, extend=True))

    r = radius(grid)
    if not np.all(np.isfinite(r)):
        raise NumericRangeError("exp(log-radius) overflowed during conversion")
    s_tab = cumulative_simpson(r, h)
    length = float(s_tab[-1])

    def arc_upto(theta):
        # table value at the panel start plus a 5-point Gauss tail
        idx = np.minimum(((theta - lo) / h).astype(int), panels - 1)
        a = grid[idx]
        mid = 0.5 * (a + theta)
        rad = 0.5 * (theta - a)
        nodes = mid[:, None] + rad[:, None] * GAUSS5_NODES[None, :]
        vals = radius(nodes.ravel()).reshape(nodes.shape)
        return s_tab[idx] + rad * (vals @ GAUSS5_WEIGHTS)

    targets = length * np.arange(panels) / panels

    def closure(theta):
        return arc_upto(theta) - targets, radius(theta)

    theta_of_s = _solve_increasing(
        closure,
        lo,
        lo + total,
        np.interp(targets, s_tab, grid),
        xtol=1e-12 * total,
    )
    residue = theta_of_s - total * np.arange(panels) / panels
    coeffs = np.fft.rfft(residue)
    n = residue.size
    offset = float(coeffs[0].real / n)
    cap = min(int(max_k), (n // 2 - 1) // turns)
    if cap < 1:
        raise ValueError(
            f"samples_per_two_pi = {samples_per_two_pi} is too coarse for any descriptor"
        )
    descriptors = []
    for k in range(1, cap + 1):
        j = k * turns
        a = 2.0 * coeffs[j].real / n
        b = 2.0 * (-coeffs[j].imag) / n
        if math.hypot(a, b) <= 1e-12:
            continue
        descriptors.append((k, a, b))
    return AngleConversion(
        AngleProfile(total, tuple(descriptors)),
        log_scale=math.log(length),
        angle_offset=offset,
    )


def angle_to_logradius(
    profile, samples_per_two_pi=4096, *, log_scale=0.0, angle_offset=0.0
):
    """Change of variables from the angle representation to log-radius.

    Solves ``theta(s) = theta_j`` on a uniform grid of tangent angles
    and evaluates ``l = log_scale - log(dtheta/ds)``.  The samples are
    taken at ``theta_j = angle_start + j * Theta / N`` and are ready for
    :func:`curvespace.spectrum.decompose` with base period ``Theta``.

    Parameters
    ----------
    profile : AngleProfile
        Must be strictly convex; the turning rate is checked on the
        sample grid and a non-positive margin is rejected.
    log_scale, angle_offset : float
        The similarity data dropped by the angle normalisation;
        defaults give a unit-length curve with mean tangent direction
        along the trend.

    Returns
    -------
    (ndarray, float)
        Log-radius samples and their base period ``Theta``.

    Raises
    ------
    ConvexityError
        If the turning rate is not positive everywhere on the grid.
    """
    margin = convexity_margin(profile, samples_per_two_pi)
    if margin <= 0.0:
        raise ConvexityError(
            f"angle profile is not convex: minimum turning rate {margin:.6g}"
        )
    log_scale = float(log_scale)
    angle_offset = float(angle_offset)
    if not (math.isfinite(log_scale) and math.isfinite(angle_offset)):
        raise ValueError("log_scale and angle_offset must be finite")
    total = profile.total_turn
    panels = even_panel_count(total, samples_per_two_pi)
    start = angle_start(profile, angle_offset)
    targets = start + total * np.arange(panels) / panels

    def closure(s):
        return (
            evaluate_angle(profile, s) + angle_offset - targets,
            turning_rate(profile, s),
        )

    s_of_theta = _solve_increasing(
        closure, 0.0, 1.0, np.arange(panels) / panels, xtol=1e-14
    )
    rate = turning_rate(profile, s_of_theta)
    return log_scale - np.log(rate), total
