"""Log-radius profiles of convex plane curves.

A convex curve traversed so its tangent angle theta increases can be
described by the radius function ``r(theta) = ds/dtheta > 0``.  Working
with ``l(theta) = log r(theta)`` turns curves into elements of a plain
vector space: adding profiles mixes shapes, scaling a profile dials a
deformation up or down, and the unit circle ``l = 0`` is the zero vector.

A profile here is a finite sum

    l(theta) = constant + slope * theta
               + sum_i eps_i * sin(nu_i * (theta - theta0_i))

kept in a canonical form (components sorted by frequency, like
frequencies merged, zero amplitudes dropped) so that structural equality
is meaningful.  Frequencies are ``fractions.Fraction`` when rational --
the arithmetic that decides periodicity and closure is exact -- and
plain floats otherwise, which marks them irrational by construction.

A rational frequency ``nu = m/n`` (reduced) gives a component whose
curve closes after ``n`` turns of the tangent with m-fold rotational
symmetry, provided ``m > 1``; ``m = 1`` produces a translationally
repeating wave that never closes.  A nonzero ``slope`` is the
logarithmic spiral term, the ``nu -> 0`` limit of elementary shapes.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real

import numpy as np

from .errors import (
    AperiodicProfileError,
    DisjointDomainError,
    DomainError,
)
from .quadrature import composite_simpson, even_panel_count

__all__ = [
    "ElementaryComponent",
    "LogRadiusProfile",
    "elementary",
    "unit_circle",
    "spiral_limit_profile",
    "add",
    "scalar_multiply",
    "inner_product",
    "norm",
    "structurally_close",
]

TWO_PI = 2.0 * math.pi

DEFAULT_SAMPLES_PER_TWO_PI = 4096


def as_frequency(nu):
    """Coerce ``nu`` to the internal frequency type.

    ``Fraction``/``int``/``(num, den)`` become an exact ``Fraction``;
    a float is kept as-is and treated as irrational.  Frequencies must
    be positive and finite.
    """
    if isinstance(nu, Fraction):
        freq = nu
    elif isinstance(nu, (int, np.integer)):
        freq = Fraction(int(nu))
    elif isinstance(nu, tuple):
        num, den = nu
        freq = Fraction(int(num), int(den))
    elif isinstance(nu, Real):
        freq = float(nu)
        if not math.isfinite(freq):
            raise ValueError(f"frequency must be finite, got {nu!r}")
    else:
        raise TypeError(f"cannot interpret {nu!r} as a frequency")
    if freq <= 0:
        raise ValueError(f"frequency must be positive, got {nu!r}")
    return freq


def _canonical_phase(theta0, period):
    """Fold a phase into ``[0, period)``."""
    t = math.fmod(theta0, period)
    if t < 0.0:
        t += period
    if t >= period:
        t = 0.0
    return t + 0.0  # normalise -0.0


@dataclass(frozen=True)
class ElementaryComponent:
    """One sinusoidal term ``eps * sin(nu * (theta - theta0))``.

    Parameters
    ----------
    nu : Fraction or float
        Positive frequency.  A ``Fraction`` is treated as exactly
        rational, a float as irrational.
    epsilon : float
        Amplitude; may be negative (a negative amplitude is the same
        wave advanced by half its period).
    theta0 : float
        Phase, stored folded into ``[0, 2*pi/nu)``.
    """

    nu: object
    epsilon: float
    theta0: float = 0.0

    def __post_init__(self):
        freq = as_frequency(self.nu)
        eps = float(self.epsilon)
        if not math.isfinite(eps):
            raise ValueError(f"amplitude must be finite, got {self.epsilon!r}")
        raw = float(self.theta0)
        if not math.isfinite(raw):
            raise ValueError(f"phase must be finite, got {self.theta0!r}")
        object.__setattr__(self, "nu", freq)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "theta0", _canonical_phase(raw, TWO_PI / float(freq)))

    @property
    def is_rational(self):
        return isinstance(self.nu, Fraction)

    @property
    def frequency(self):
        """Frequency as a float."""
        return float(self.nu)

    @property
    def period(self):
        """Period of this wave in theta, ``2*pi/nu``."""
        if self.is_rational:
            return TWO_PI * self.nu.denominator / self.nu.numerator
        return TWO_PI / self.nu

    @property
    def symmetry_order(self):
        """Rotational symmetry order of the lone component's curve.

        The numerator ``m`` of a rational frequency; ``None`` when the
        frequency is irrational.
        """
        return self.nu.numerator if self.is_rational else None

    def evaluate(self, theta):
        return self.epsilon * np.sin(self.frequency * (np.asarray(theta, float) - self.theta0))


def _component_order_key(comp):
    return (comp.frequency, comp.theta0, comp.epsilon)


def _merge_like_frequencies(group):
    """Combine components sharing one frequency into at most one wave.

    Terms with identical phase are summed directly (so exact inverses
    cancel exactly); otherwise the group is collapsed through its
    quadrature form ``A*sin + B*cos -> C*sin(... - theta0')``.
    """
    rep_nu = next((c.nu for c in group if isinstance(c.nu, Fraction)), group[0].nu)
    by_phase = {}
    for c in group:
        by_phase[c.theta0] = by_phase.get(c.theta0, 0.0) + c.epsilon
    reduced = [(t, e) for t, e in sorted(by_phase.items()) if e != 0.0]
    if not reduced:
        return None
    if len(reduced) == 1:
        theta0, eps = reduced[0][0], reduced[0][1]
        return ElementaryComponent(rep_nu, eps, theta0)
    omega = float(rep_nu)
    a = sum(e * math.cos(omega * t) for t, e in reduced)
    b = -sum(e * math.sin(omega * t) for t, e in reduced)
    amp = math.hypot(a, b)
    if amp == 0.0:
        return None
    return ElementaryComponent(rep_nu, amp, -math.atan2(b, a) / omega)


def _canonical_components(components):
    comps = [c for c in components if c.epsilon != 0.0]
    comps.sort(key=_component_order_key)
    out = []
    i = 0
    while i < len(comps):
        j = i + 1
        while j < len(comps) and comps[j].nu == comps[i].nu:
            j += 1
        if j == i + 1:
            out.append(comps[i])  # untouched: scaling and IO stay bit-exact
        else:
            merged = _merge_like_frequencies(comps[i:j])
            if merged is not None:
                out.append(merged)
        i = j
    return tuple(out)


@dataclass(frozen=True)
class LogRadiusProfile:
    """A log-radius function in canonical component form.

    Attributes
    ----------
    constant : float
        Mean level; shifts the curve's scale by ``exp(constant)``.
    slope : float
        Logarithmic-spiral growth rate (nonzero slope kills periodicity).
    components : tuple of ElementaryComponent
        Sorted by frequency, like frequencies already merged.
    domain : (float, float)
        Closed theta interval on which the profile is defined.
    """

    constant: float = 0.0
    slope: float = 0.0
    components: tuple = ()
    domain: tuple = (0.0, TWO_PI)

    def __post_init__(self):
        const = float(self.constant)
        slope = float(self.slope)
        if not math.isfinite(const) or not math.isfinite(slope):
            raise ValueError("constant and slope must be finite")
        lo, hi = (float(self.domain[0]), float(self.domain[1]))
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise ValueError(f"domain must be a finite interval with lo < hi, got {self.domain!r}")
        comps = _canonical_components(list(self.components))
        object.__setattr__(self, "constant", const)
        object.__setattr__(self, "slope", slope)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "domain", (lo, hi))

    # -- periodicity ----------------------------------------------------

    def period_turns(self):
        """Smallest integer n with period 2*pi*n, or None if aperiodic."""
        if self.slope != 0.0:
            return None
        n = 1
        for c in self.components:
            if not c.is_rational:
                return None
            n = math.lcm(n, c.nu.denominator)
        return n

    def period(self):
        """Fundamental period in theta (a multiple of 2*pi), or None."""
        n = self.period_turns()
        return None if n is None else TWO_PI * n

    @property
    def is_periodic(self):
        return self.period_turns() is not None

    def closes(self):
        """Whether the rendered curve returns to its start point.

        The curve closes exactly when no resonant combination of the
        component frequencies can produce the tangent frequency 1.  With
        all frequencies rational, ``nu_i = k_i / N`` over the common
        period ``2*pi*N``, that reduces to ``gcd(k_i)`` not dividing
        ``N``.  Aperiodic profiles (spiral slope, irrational frequency)
        never close.
        """
        n = self.period_turns()
        if n is None:
            return False
        if not self.components:
            return True
        g = 0
        for c in self.components:
            g = math.gcd(g, c.nu.numerator * (n // c.nu.denominator))
        return n % g != 0

    def symmetry_order(self):
        """Order of the curve's rotational symmetry group, or None.

        Defined for closing profiles only.  Equals the numerator ``m``
        for a single component ``nu = m/n``.
        """
        if not self.closes():
            return None
        n = self.period_turns()
        if not self.components:
            return None  # full circle symmetry, no finite order
        g = 0
        for c in self.components:
            g = math.gcd(g, c.nu.numerator * (n // c.nu.denominator))
        return g // math.gcd(n, g)

    # -- evaluation -----------------------------------------------------

    def evaluate(self, theta, extend=False):
        """Profile values at ``theta``.

        Parameters
        ----------
        theta : float or array_like
        extend : bool
            If true, evaluate the periodic extension: ``theta`` is
            reduced by the profile's period and the domain bounds are
            not enforced.  Requires a periodic profile.

        Returns
        -------
        float or ndarray, matching the input shape.
        """
        th = np.asarray(theta, dtype=float)
        scalar = th.ndim == 0
        th = np.atleast_1d(th)
        lo, hi = self.domain
        if extend:
            T = self.period()
            if T is None:
                raise AperiodicProfileError(
                    "cannot periodically extend an aperiodic profile"
                )
            th = lo + np.mod(th - lo, T)
        else:
            slack = 1e-9 * (1.0 + hi - lo)
            if np.any(th < lo - slack) or np.any(th > hi + slack):
                bad = th[(th < lo - slack) | (th > hi + slack)][0]
                raise DomainError(
                    f"theta = {bad:g} outside profile domain [{lo:g}, {hi:g}]"
                )
        vals = np.full(th.shape, self.constant, dtype=float)
        if self.slope != 0.0:
            vals += self.slope * th
        for c in self.components:
            vals += c.evaluate(th)
        return vals[0] if scalar else vals

    # -- operator sugar -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LogRadiusProfile):
            return add(self, other)
        return NotImplemented

    def __mul__(self, a):
        if isinstance(a, Real):
            return scalar_multiply(self, a)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return scalar_multiply(self, -1.0)

    def __sub__(self, other):
        if isinstance(other, LogRadiusProfile):
            return add(self, scalar_multiply(other, -1.0))
        return NotImplemented


# -- constructors -------------------------------------------------------


def elementary(nu, epsilon, theta0=0.0, domain=None):
    """Elementary shape profile ``eps * sin(nu * (theta - theta0))``.

    Parameters
    ----------
    nu : Fraction, int, (num, den) tuple, or float
        Positive frequency.  Rational input is kept exact; float input
        is treated as irrational.
    epsilon : float
        Amplitude.
    theta0 : float, optional
        Phase offset.
    domain : (float, float), optional
        Defaults to one full period: ``[0, 2*pi*n]`` for ``nu = m/n``,
        ``[0, 2*pi]`` for irrational ``nu``.

    Returns
    -------
    LogRadiusProfile
    """
    freq = as_frequency(nu)
    if domain is None:
        turns = freq.denominator if isinstance(freq, Fraction) else 1
        domain = (0.0, TWO_PI * turns)
    comp = ElementaryComponent(freq, epsilon, theta0)
    return LogRadiusProfile(components=(comp,), domain=domain)


def unit_circle(domain=(0.0, TWO_PI)):
    """The zero profile: the unit circle, identity of profile addition."""
    return LogRadiusProfile(domain=domain)


def spiral_limit_profile(growth_rate, domain=(0.0, TWO_PI)):
    """Logarithmic spiral profile ``l = growth_rate * theta``.

    This is the ``nu -> 0`` limit of ``elementary(nu, growth_rate/nu)``:
    the sine straightens into a linear trend and the closed shapes open
    into a spiral.
    """
    return LogRadiusProfile(slope=growth_rate, domain=domain)


# -- vector space operations -------------------------------------------


def add(p1, p2):
    """Pointwise sum of two profiles on the intersection of their domains."""
    lo = max(p1.domain[0], p2.domain[0])
    hi = min(p1.domain[1], p2.domain[1])
    if not lo < hi:
        raise DisjointDomainError(
            f"profile domains [{p1.domain[0]:g}, {p1.domain[1]:g}] and "
            f"[{p2.domain[0]:g}, {p2.domain[1]:g}] do not overlap"
        )
    return LogRadiusProfile(
        constant=p1.constant + p2.constant,
        slope=p1.slope + p2.slope,
        components=p1.components + p2.components,
        domain=(lo, hi),
    )


def scalar_multiply(profile, a):
    """Scale a profile by a real factor, leaving phases untouched."""
    a = float(a)
    if not math.isfinite(a):
        raise ValueError(f"scale factor must be finite, got {a!r}")
    comps = tuple(
        ElementaryComponent(c.nu, a * c.epsilon, c.theta0) for c in profile.components
    )
    return LogRadiusProfile(
        constant=a * profile.constant,
        slope=a * profile.slope,
        components=comps,
        domain=profile.domain,
    )


def _integration_interval(p1, p2, interval):
    if interval is not None:
        a, b = float(interval[0]), float(interval[1])
        if not a < b:
            raise ValueError(f"interval must satisfy a < b, got {interval!r}")
        return a, b
    n1 = p1.period_turns()
    n2 = p2.period_turns()
    if n1 is None or n2 is None:
        raise DomainError(
            "inner product of aperiodic profiles needs an explicit interval"
        )
    return 0.0, TWO_PI * math.lcm(n1, n2)


def inner_product(p1, p2, interval=None, samples_per_two_pi=DEFAULT_SAMPLES_PER_TWO_PI):
    """L2 inner product ``integral of l1*l2 dtheta`` by Simpson quadrature.

    With no interval given both profiles must be periodic and the
    integral runs over one common period starting at 0.  Periodic
    profiles are extended as needed; aperiodic ones must contain the
    interval in their domain.
    """
    a, b = _integration_interval(p1, p2, interval)
    panels = even_panel_count(b - a, samples_per_two_pi)
    grid = np.linspace(a, b, panels + 1)
    vals = p1.evaluate(grid, extend=p1.is_periodic) * p2.evaluate(
        grid, extend=p2.is_periodic
    )
    return composite_simpson(vals, (b - a) / panels)


def norm(profile, interval=None, samples_per_two_pi=DEFAULT_SAMPLES_PER_TWO_PI):
    """L2 norm induced by :func:`inner_product`."""
    return math.sqrt(max(inner_product(profile, profile, interval, samples_per_two_pi), 0.0))


# -- structural comparison ---------------------------------------------


def _signed_view(comp):
    """Amplitude made nonnegative by advancing the phase half a period."""
    if comp.epsilon >= 0.0:
        return comp.epsilon, comp.theta0
    return -comp.epsilon, _canonical_phase(comp.theta0 + 0.5 * comp.period, comp.period)


def structurally_close(p1, p2, tol=0.0):
    """Whether two canonical profiles agree term by term.

    With ``tol = 0`` every field must match exactly.  Otherwise numbers
    may differ by ``tol``, components with amplitude at most ``tol`` are
    ignored, and phases are compared on the circle (a negative amplitude
    counts as the half-period phase advance of a positive one).
    Frequencies must always match exactly.
    """
    if not (
        abs(p1.constant - p2.constant) <= tol
        and abs(p1.slope - p2.slope) <= tol
        and abs(p1.domain[0] - p2.domain[0]) <= tol
        and abs(p1.domain[1] - p2.domain[1]) <= tol
    ):
        return False
    c1 = [c for c in p1.components if abs(c.epsilon) > tol]
    c2 = [c for c in p2.components if abs(c.epsilon) > tol]
    if len(c1) != len(c2):
        return False
    for a, b in zip(c1, c2):
        if a.nu != b.nu:
            return False
        eps_a, th_a = _signed_view(a)
        eps_b, th_b = _signed_view(b)
        if abs(eps_a - eps_b) > tol:
            return False
        d = abs(th_a - th_b)
        if min(d, a.period - d) > tol:
            return False
    return True
