"""Plain-text document formats for profiles, curves, and figures.

Two line-oriented document types, both starting with a magic word and a
format version:

``curvespace-profile 1``::

    curvespace-profile 1
    constant 0
    slope 0
    domain 0 6.2831853071795862
    components 1
    component rational 3 1 0.29999999999999999 0

    Component lines are either ``component rational M N EPS THETA0``
    (frequency M/N) or ``component real NU EPS THETA0``.

``curvespace-angle 1``::

    curvespace-angle 1
    total_turn 6.2831853071795862
    log_scale 0
    angle_offset 0
    descriptors 1
    descriptor 3 0.2 0

Numbers are written with 17 significant digits, so write/read round
trips are exact.  Parsing is strict: fields must appear in order, field
counts must match, and any failure raises ``FormatError`` carrying the
offending line number.

Curves travel as CSV with header ``theta,s,x,y``; bare log-radius
samples as CSV with header ``theta,l`` (one uniform period, endpoint
excluded).  Figures are written as standalone SVG built from polylines
on a fixed cell grid -- deterministic output, no timestamps, so
regenerating a figure reproduces it byte for byte.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import FormatError
from .profiles import ElementaryComponent, LogRadiusProfile
from .angle import AngleConversion, AngleProfile
from .render import PlaneCurve, closure_gap, DEFAULT_CLOSURE_TOL

__all__ = [
    "write_profile",
    "read_profile",
    "write_angle",
    "read_angle",
    "write_curve_csv",
    "read_curve_csv",
    "read_samples_csv",
    "CurveStyle",
    "GridLayout",
    "write_svg",
]

PROFILE_MAGIC = "curvespace-profile"
ANGLE_MAGIC = "curvespace-angle"
FORMAT_VERSION = 1


def _fmt(x):
    return format(float(x), ".17g")


# -- low-level line reader ---------------------------------------------


class _Lines:
    """Sequential reader over non-blank lines with 1-based numbering."""

    def __init__(self, text):
        self.items = [
            (i + 1, line.strip())
            for i, line in enumerate(text.splitlines())
            if line.strip()
        ]
        self.pos = 0

    def next(self, expect):
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 1
            raise FormatError(last, f"missing '{expect}' line")
        num, line = self.items[self.pos]
        self.pos += 1
        return num, line.split()

    def done(self):
        if self.pos < len(self.items):
            num, line = self.items[self.pos]
            raise FormatError(num, f"unexpected extra line: {' '.join(line.split())!r}")


def _take(fields, num, name, count):
    if not fields or fields[0] != name:
        got = fields[0] if fields else "(empty)"
        raise FormatError(num, f"expected '{name}', got {got!r}")
    if len(fields) != count + 1:
        raise FormatError(num, f"'{name}' needs {count} values, got {len(fields) - 1}")
    return fields[1:]


def _float(token, num):
    try:
        val = float(token)
    except ValueError:
        raise FormatError(num, f"not a number: {token!r}") from None
    if not math.isfinite(val):
        raise FormatError(num, f"number must be finite: {token!r}")
    return val


def _int(token, num):
    try:
        return int(token)
    except ValueError:
        raise FormatError(num, f"not an integer: {token!r}") from None


def _check_magic(lines, magic):
    num, fields = lines.next(magic)
    if len(fields) != 2 or fields[0] != magic:
        raise FormatError(num, f"not a {magic} document")
    version = _int(fields[1], num)
    if version < 1 or version > FORMAT_VERSION:
        raise FormatError(
            num, f"unsupported {magic} version {version}; this build reads 1"
        )


# -- profile documents --------------------------------------------------


def write_profile(profile):
    """Serialize a log-radius profile; inverse of :func:`read_profile`."""
    out = [f"{PROFILE_MAGIC} {FORMAT_VERSION}"]
    out.append(f"constant {_fmt(profile.constant)}")
    out.append(f"slope {_fmt(profile.slope)}")
    out.append(f"domain {_fmt(profile.domain[0])} {_fmt(profile.domain[1])}")
    out.append(f"components {len(profile.components)}")
    for c in profile.components:
        if c.is_rational:
            out.append(
                "component rational "
                f"{c.nu.numerator} {c.nu.denominator} {_fmt(c.epsilon)} {_fmt(c.theta0)}"
            )
        else:
            out.append(
                f"component real {_fmt(c.nu)} {_fmt(c.epsilon)} {_fmt(c.theta0)}"
            )
    return "\n".join(out) + "\n"


def _read_component(lines):
    num, fields = lines.next("component")
    if len(fields) < 2 or fields[0] != "component":
        got = fields[0] if fields else "(empty)"
        raise FormatError(num, f"expected 'component', got {got!r}")
    kind = fields[1]
    try:
        if kind == "rational":
            if len(fields) != 6:
                raise FormatError(
                    num, f"'component rational' needs 4 values, got {len(fields) - 2}"
                )
            m = _int(fields[2], num)
            n = _int(fields[3], num)
            if n == 0:
                raise FormatError(num, "frequency denominator must not be zero")
            nu = Fraction(m, n)
        elif kind == "real":
            if len(fields) != 5:
                raise FormatError(
                    num, f"'component real' needs 3 values, got {len(fields) - 2}"
                )
            nu = _float(fields[2], num)
        else:
            raise FormatError(
                num, f"component kind must be 'rational' or 'real', got {kind!r}"
            )
        eps = _float(fields[-2], num)
        theta0 = _float(fields[-1], num)
        return ElementaryComponent(nu, eps, theta0)
    except FormatError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(num, str(exc)) from None


def read_profile(text):
    """Parse a ``curvespace-profile 1`` document into a profile."""
    lines = _Lines(text)
    _check_magic(lines, PROFILE_MAGIC)
    num, fields = lines.next("constant")
    constant = _float(_take(fields, num, "constant", 1)[0], num)
    num, fields = lines.next("slope")
    slope = _float(_take(fields, num, "slope", 1)[0], num)
    num, fields = lines.next("domain")
    lo_s, hi_s = _take(fields, num, "domain", 2)
    lo, hi = _float(lo_s, num), _float(hi_s, num)
    num, fields = lines.next("components")
    count = _int(_take(fields, num, "components", 1)[0], num)
    if count < 0:
        raise FormatError(num, f"component count must be nonnegative, got {count}")
    comps = [_read_component(lines) for _ in range(count)]
    lines.done()
    try:
        return LogRadiusProfile(constant, slope, tuple(comps), (lo, hi))
    except ValueError as exc:
        raise FormatError(num, str(exc)) from None


# -- angle documents ----------------------------------------------------


def write_angle(conversion):
    """Serialize an angle profile with its similarity data."""
    p = conversion.profile
    out = [f"{ANGLE_MAGIC} {FORMAT_VERSION}"]
    out.append(f"total_turn {_fmt(p.total_turn)}")
    out.append(f"log_scale {_fmt(conversion.log_scale)}")
    out.append(f"angle_offset {_fmt(conversion.angle_offset)}")
    out.append(f"descriptors {len(p.descriptors)}")
    for k, a, b in p.descriptors:
        out.append(f"descriptor {k} {_fmt(a)} {_fmt(b)}")
    return "\n".join(out) + "\n"


def read_angle(text):
    """Parse a ``curvespace-angle 1`` document into an AngleConversion."""
    lines = _Lines(text)
    _check_magic(lines, ANGLE_MAGIC)
    num, fields = lines.next("total_turn")
    total = _float(_take(fields, num, "total_turn", 1)[0], num)
    num, fields = lines.next("log_scale")
    log_scale = _float(_take(fields, num, "log_scale", 1)[0], num)
    num, fields = lines.next("angle_offset")
    offset = _float(_take(fields, num, "angle_offset", 1)[0], num)
    num, fields = lines.next("descriptors")
    count = _int(_take(fields, num, "descriptors", 1)[0], num)
    if count < 0:
        raise FormatError(num, f"descriptor count must be nonnegative, got {count}")
    descriptors = []
    for _ in range(count):
        num, fields = lines.next("descriptor")
        k_s, a_s, b_s = _take(fields, num, "descriptor", 3)
        descriptors.append((_int(k_s, num), _float(a_s, num), _float(b_s, num)))
    lines.done()
    try:
        return AngleConversion(
            AngleProfile(total, tuple(descriptors)), log_scale, offset
        )
    except ValueError as exc:
        raise FormatError(num, str(exc)) from None


# -- curve and sample CSV ----------------------------------------------


def write_curve_csv(curve):
    """CSV with header ``theta,s,x,y``, one row per vertex."""
    rows = ["theta,s,x,y"]
    for th, s, (x, y) in zip(curve.params, curve.arc_lengths, curve.points):
        rows.append(f"{_fmt(th)},{_fmt(s)},{_fmt(x)},{_fmt(y)}")
    return "\n".join(rows) + "\n"


def _csv_rows(text, header, width):
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise FormatError(1, "empty document")
    num, first = lines[0]
    if first.replace(" ", "") != header:
        raise FormatError(num, f"expected header {header!r}, got {first!r}")
    rows = []
    for num, ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != width:
            raise FormatError(num, f"expected {width} columns, got {len(parts)}")
        rows.append([_float(p.strip(), num) for p in parts])
    if not rows:
        raise FormatError(num if lines else 1, "no data rows")
    return np.asarray(rows, dtype=float)


def read_curve_csv(text, closure_tol=DEFAULT_CLOSURE_TOL):
    """Parse ``theta,s,x,y`` CSV back into a curve.

    The closed flag is recomputed from the endpoint gap at the given
    tolerance.  Grid monotonicity violations surface as FormatError.
    """
    data = _csv_rows(text, "theta,s,x,y", 4)
    try:
        curve = PlaneCurve(data[:, 2:4], data[:, 0], data[:, 1])
        return PlaneCurve(
            curve.points,
            curve.params,
            curve.arc_lengths,
            closed=(closure_gap(curve) <= closure_tol),
        )
    except ValueError as exc:
        raise FormatError(1, str(exc)) from None


def read_samples_csv(text):
    """Parse ``theta,l`` CSV of uniform samples over one period.

    Returns ``(values, base_period)`` ready for spectral decomposition.
    The theta column must be uniformly spaced (relative tolerance 1e-9)
    and is taken to cover one period excluding its endpoint.
    """
    data = _csv_rows(text, "theta,l", 2)
    theta = data[:, 0]
    if theta.size < 3:
        raise FormatError(1, "need at least 3 samples")
    steps = np.diff(theta)
    h = steps.mean()
    if h <= 0.0 or np.any(np.abs(steps - h) > 1e-9 * abs(h)):
        raise FormatError(1, "theta column must be uniformly increasing")
    return data[:, 1], float(h * theta.size)


# -- SVG figures --------------------------------------------------------


@dataclass(frozen=True)
class CurveStyle:
    """Stroke colour/width and an optional label under the cell."""

    stroke: str = "#1f77b4"
    width: float = 1.5
    label: str = ""


@dataclass(frozen=True)
class GridLayout:
    """Fixed-size cell grid for figure panels."""

    rows: int
    cols: int
    cell: float = 220.0
    pad: float = 16.0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid needs at least one row and one column")
        if self.cell <= 2 * self.pad:
            raise ValueError("cell size must exceed twice the padding")


def _svg_path_points(points, cx, cy, scale):
    coords = []
    for x, y in points:
        coords.append(f"{cx + scale * x:.4f},{cy - scale * y:.4f}")
    return " ".join(coords)


def write_svg(entries, layout):
    """Render ``(curve, style)`` pairs into an SVG panel grid.

    Curves are drawn as polylines, one cell each in row-major order,
    scaled so the unit disk fits the padded cell (normalise curves
    first for a uniform look).  Output is deterministic: same input,
    same bytes.
    """
    entries = list(entries)
    if len(entries) > layout.rows * layout.cols:
        raise ValueError(
            f"{len(entries)} panels do not fit a {layout.rows}x{layout.cols} grid"
        )
    width = layout.cols * layout.cell
    height = layout.rows * layout.cell
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0f} {height:.0f}" '
        f'width="{width:.0f}" height="{height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
    ]
    for i, (curve, style) in enumerate(entries):
        row, col = divmod(i, layout.cols)
        cx = (col + 0.5) * layout.cell
        cy = (row + 0.5) * layout.cell
        scale = 0.5 * layout.cell - layout.pad
        out.append('<g fill="none">')
        out.append(
            f'<polyline stroke="{style.stroke}" stroke-width="{style.width:g}" '
            f'points="{_svg_path_points(curve.points, cx, cy, scale)}"/>'
        )
        if style.label:
            out.append(
                f'<text x="{cx:.4f}" y="{(row + 1) * layout.cell - 4.0:.4f}" '
                'fill="#444444" font-family="sans-serif" font-size="12" '
                f'text-anchor="middle">{style.label}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
