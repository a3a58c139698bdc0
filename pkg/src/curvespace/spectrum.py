"""Spectral decomposition of log-radius samples into elementary waves.

Uniform samples of a profile over one period are projected onto the
sine/cosine basis with a real FFT and reported as amplitude/phase pairs
``amp * sin(nu_k * (theta - theta0))`` -- the elementary-shape form --
with ``nu_k = 2*pi*k / base_period``.  Reconstruction builds the
corresponding profile back, mapping bins to exact rational frequencies
``k/n`` when the base period is a whole number of turns ``2*pi*n``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .profiles import TWO_PI, ElementaryComponent, LogRadiusProfile

__all__ = [
    "SpectrumBin",
    "ShapeSpectrum",
    "decompose",
    "reconstruct",
    "truncate",
    "energy",
]

AMPLITUDE_FLOOR = 1e-12
DEFAULT_MAX_K = 32


@dataclass(frozen=True)
class SpectrumBin:
    """One spectral line: harmonic index, amplitude >= 0, phase.

    The bin represents ``amplitude * sin(nu * (theta - phase_origin))``
    with ``nu = 2*pi*k / base_period`` of the owning spectrum and theta
    measured from the first sample.
    """

    k: int
    amplitude: float
    phase_origin: float

    def __post_init__(self):
        k = int(self.k)
        amp = float(self.amplitude)
        ph = float(self.phase_origin)
        if k < 1:
            raise ValueError(f"harmonic index must be >= 1, got {self.k!r}")
        if not math.isfinite(amp) or amp < 0.0:
            raise ValueError(f"amplitude must be finite and nonnegative, got {self.amplitude!r}")
        if not math.isfinite(ph):
            raise ValueError(f"phase must be finite, got {self.phase_origin!r}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "phase_origin", ph)


@dataclass(frozen=True)
class ShapeSpectrum:
    """Amplitude/phase lines of a profile over one base period."""

    base_period: float
    mean: float
    bins: tuple = ()

    def __post_init__(self):
        T = float(self.base_period)
        mean = float(self.mean)
        if not math.isfinite(T) or T <= 0.0:
            raise ValueError(f"base period must be positive, got {self.base_period!r}")
        if not math.isfinite(mean):
            raise ValueError("mean must be finite")
        bins = tuple(self.bins)
        ks = [b.k for b in bins]
        if ks != sorted(set(ks)):
            raise ValueError("bins must be sorted by harmonic index without duplicates")
        object.__setattr__(self, "base_period", T)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "bins", bins)

    def frequency(self, k):
        """Angular frequency of harmonic ``k`` in theta."""
        return TWO_PI * k / self.base_period


def energy(spectrum):
    """Oscillatory L2 energy over one period, ``T/2 * sum(amp^2)``.

    Equals ``integral of (l - mean)^2`` when the spectrum captures all
    of the signal, which is the Parseval check used in tests.
    """
    return 0.5 * spectrum.base_period * sum(b.amplitude**2 for b in spectrum.bins)


def decompose(samples, base_period, max_k=DEFAULT_MAX_K):
    """Project uniform samples over one period onto sine waves.

    Parameters
    ----------
    samples : array_like, shape (N,)
        Values at ``theta_j = j * base_period / N`` (the point at
        ``base_period`` itself is excluded).  ``N`` must be at least
        ``2*max_k + 2`` so every reported harmonic is below Nyquist.
    base_period : float
        Length of the sampled interval.
    max_k : int
        Highest harmonic reported.

    Returns
    -------
    ShapeSpectrum
        Bins with amplitude below 1e-12 are dropped.
    """
    y = np.asarray(samples, dtype=float)
    if y.ndim != 1:
        raise ValueError("samples must be a 1-D array")
    if not np.all(np.isfinite(y)):
        raise ValueError("samples must be finite")
    T = float(base_period)
    if not math.isfinite(T) or T <= 0.0:
        raise ValueError(f"base period must be positive, got {base_period!r}")
    max_k = int(max_k)
    if max_k < 1:
        raise ValueError(f"max_k must be at least 1, got {max_k}")
    n = y.size
    if n < 2 * max_k + 2:
        raise ValueError(
            f"need at least {2 * max_k + 2} samples for max_k = {max_k}, got {n}"
        )
    coeffs = np.fft.rfft(y)
    mean = coeffs[0].real / n
    bins = []
    for k in range(1, max_k + 1):
        a = 2.0 * coeffs[k].real / n  # cosine coefficient
        b = -2.0 * coeffs[k].imag / n  # sine coefficient
        amp = math.hypot(a, b)
        if amp <= AMPLITUDE_FLOOR:
            continue
        nu = TWO_PI * k / T
        # a*cos(nu t) + b*sin(nu t) = amp*sin(nu t + atan2(a, b))
        phase = -math.atan2(a, b) / nu
        period_k = T / k
        phase = math.fmod(phase, period_k)
        if phase < 0.0:
            phase += period_k
        if phase >= period_k:
            phase = 0.0
        bins.append(SpectrumBin(k, amp, phase))
    return ShapeSpectrum(T, mean, tuple(bins))


def _bin_frequency(k, base_period):
    """Exact rational frequency when the period is a whole number of turns."""
    turns = base_period / TWO_PI
    n = round(turns)
    if n >= 1 and abs(turns - n) <= 1e-9 * n:
        return Fraction(k, n)
    return TWO_PI * k / base_period


def reconstruct(spectrum):
    """Profile whose evaluation reproduces the spectrum's samples.

    The domain is one base period starting at 0; theta is measured from
    the first sample of the decomposition, so a decompose/reconstruct
    round trip reproduces the sampled values (up to the dropped
    harmonics above ``max_k`` and below the amplitude floor).
    """
    comps = tuple(
        ElementaryComponent(
            _bin_frequency(b.k, spectrum.base_period), b.amplitude, b.phase_origin
        )
        for b in spectrum.bins
    )
    return LogRadiusProfile(
        constant=spectrum.mean,
        components=comps,
        domain=(0.0, spectrum.base_period),
    )


def truncate(spectrum, keep):
    """Keep the ``keep`` largest-amplitude bins.

    Returns the truncated spectrum together with the L2 norm of the
    discarded part (square root of its oscillatory energy), so callers
    can report how much shape was thrown away.
    """
    keep = int(keep)
    if keep < 0:
        raise ValueError(f"keep must be nonnegative, got {keep}")
    order = sorted(spectrum.bins, key=lambda b: (-b.amplitude, b.k))
    kept = sorted(order[:keep], key=lambda b: b.k)
    dropped = order[keep:]
    lost = math.sqrt(0.5 * spectrum.base_period * sum(b.amplitude**2 for b in dropped))
    return ShapeSpectrum(spectrum.base_period, spectrum.mean, tuple(kept)), lost
