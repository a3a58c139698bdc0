"""Builders for the package's standard figures.

Each builder returns SVG text; :func:`regen_figures` writes the whole
set.  Everything here is a pure function of its arguments -- no
timestamps, no randomness -- so regenerating the figures reproduces
them byte for byte, which the test suite and the command line tool rely
on.

The set itself:

* ``elementary_gallery.svg`` -- a 3x3 grid of single-frequency shapes,
  whole and fractional frequencies mixed, showing how the numerator
  sets the rotational symmetry;
* ``scalar_multiplication.svg`` -- one shape scaled through a range of
  factors, morphing circle -> ellipse-like -> strongly lobed;
* ``shape_mixing.svg`` -- a spiral profile, a two-lobed profile, and
  their sum: addition mixes the traits;
* ``angle_single_component.svg`` -- the angle-representation baseline,
  one cosine descriptor below, at, and beyond the convexity boundary;
* ``angle_addition.svg`` -- two separately convex descriptor profiles
  whose sum leaves the convex world.
"""

from fractions import Fraction
from pathlib import Path

from .angle import add_angle_profiles, render_from_angle, single_component
from .formats import CurveStyle, GridLayout, write_svg
from .profiles import TWO_PI, add, elementary, scalar_multiply, spiral_limit_profile
from .render import normalize, render

__all__ = [
    "elementary_gallery_svg",
    "scalar_multiplication_svg",
    "shape_mixing_svg",
    "angle_single_component_svg",
    "angle_addition_svg",
    "regen_figures",
    "FIGURE_NAMES",
]

FIGURE_NAMES = (
    "elementary_gallery.svg",
    "scalar_multiplication.svg",
    "shape_mixing.svg",
    "angle_single_component.svg",
    "angle_addition.svg",
)

_BLUE = "#1f77b4"
_RED = "#d62728"
_GREEN = "#2ca02c"


def _panel(profile, label, stroke=_BLUE, samples_per_two_pi=4096):
    curve = normalize(render(profile, samples_per_two_pi))
    return curve, CurveStyle(stroke=stroke, label=label)


def elementary_gallery_svg(samples_per_two_pi=4096):
    """Nine elementary shapes: frequencies 2, 3/2, 3, 5/2, 4, 5, 6, 7, 8."""
    freqs = [
        Fraction(2),
        Fraction(3, 2),
        Fraction(3),
        Fraction(5, 2),
        Fraction(4),
        Fraction(5),
        Fraction(6),
        Fraction(7),
        Fraction(8),
    ]
    entries = []
    for nu in freqs:
        label = f"frequency {nu.numerator}" if nu.denominator == 1 else f"frequency {nu}"
        entries.append(
            _panel(elementary(nu, 0.3), label, samples_per_two_pi=samples_per_two_pi)
        )
    return write_svg(entries, GridLayout(3, 3))


def scalar_multiplication_svg(samples_per_two_pi=4096):
    """One two-lobed shape scaled by 0.25 .. 2."""
    base = elementary(2, 0.4)
    entries = []
    for factor in (0.25, 0.5, 1.0, 1.5, 2.0):
        entries.append(
            _panel(
                scalar_multiply(base, factor),
                f"scale {factor:g}",
                stroke=_BLUE if factor != 1.0 else _RED,
                samples_per_two_pi=samples_per_two_pi,
            )
        )
    return write_svg(entries, GridLayout(1, 5))


def shape_mixing_svg(samples_per_two_pi=4096):
    """A spiral, a two-lobed closed shape, and their pointwise sum."""
    window = (0.0, 2.0 * TWO_PI)
    spiral = spiral_limit_profile(-0.15, window)
    lobed = elementary(2, 0.4, domain=window)
    entries = [
        _panel(spiral, "spiral", samples_per_two_pi=samples_per_two_pi),
        _panel(lobed, "two-lobed", samples_per_two_pi=samples_per_two_pi),
        _panel(add(spiral, lobed), "sum", stroke=_RED, samples_per_two_pi=samples_per_two_pi),
    ]
    return write_svg(entries, GridLayout(1, 3))


def _angle_panel(profile, label, stroke=_BLUE, samples_per_two_pi=4096):
    curve = normalize(render_from_angle(profile, samples_per_two_pi))
    return curve, CurveStyle(stroke=stroke, label=label)


def angle_single_component_svg(samples_per_two_pi=4096):
    """One cosine descriptor (index 3) below, at, and past convexity."""
    entries = []
    for a, stroke in ((0.2, _BLUE), (1.0 / 3.0, _GREEN), (0.6, _RED)):
        entries.append(
            _angle_panel(
                single_component(3, a),
                f"a = {a:.3g}",
                stroke=stroke,
                samples_per_two_pi=samples_per_two_pi,
            )
        )
    return write_svg(entries, GridLayout(1, 3))


def angle_addition_svg(samples_per_two_pi=4096):
    """Two convex descriptor profiles whose descriptor sum is not convex."""
    first = single_component(2, 0.4)
    second = single_component(5, 0.18)
    entries = [
        _angle_panel(first, "index 2, a = 0.4", samples_per_two_pi=samples_per_two_pi),
        _angle_panel(second, "index 5, a = 0.18", samples_per_two_pi=samples_per_two_pi),
        _angle_panel(
            add_angle_profiles(first, second),
            "descriptor sum",
            stroke=_RED,
            samples_per_two_pi=samples_per_two_pi,
        ),
    ]
    return write_svg(entries, GridLayout(1, 3))


_BUILDERS = {
    "elementary_gallery.svg": elementary_gallery_svg,
    "scalar_multiplication.svg": scalar_multiplication_svg,
    "shape_mixing.svg": shape_mixing_svg,
    "angle_single_component.svg": angle_single_component_svg,
    "angle_addition.svg": angle_addition_svg,
}


def regen_figures(outdir, samples_per_two_pi=4096):
    """Write every standard figure into ``outdir``; returns the paths.

    Output is a pure function of the arguments, so a second run leaves
    the files byte-identical.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in FIGURE_NAMES:
        path = outdir / name
        path.write_text(_BUILDERS[name](samples_per_two_pi), encoding="utf-8")
        paths.append(path)
    return paths
