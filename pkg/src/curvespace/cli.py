"""Command line interface.

Subcommands::

    gen            construct an elementary / circle / spiral profile document
    mix            weighted sum of profile documents
    render         profile document -> curve CSV or SVG panels
    spectrum       spectral report of a profile or of raw samples
    angle-demo     build an angle profile from descriptors, report its margin
    convert        profile document <-> angle document
    regen-figures  write the standard figure set

Exit codes: 0 success; 2 bad input (unparseable document, bad flags,
missing file, incompatible operands); 3 numeric range failure
(overflowing exp, non-finite values); 4 representability failure (the
requested conversion has no result in the target form).
"""

import argparse
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .angle import (
    AngleConversion,
    AngleProfile,
    angle_to_logradius,
    convexity_margin,
    logradius_to_angle,
    render_from_angle,
)
from .errors import (
    FormatError,
    NumericRangeError,
    RepresentabilityError,
)
from .formats import (
    ANGLE_MAGIC,
    PROFILE_MAGIC,
    CurveStyle,
    GridLayout,
    read_angle,
    read_profile,
    read_samples_csv,
    write_angle,
    write_curve_csv,
    write_profile,
    write_svg,
)
from .gallery import regen_figures
from .profiles import (
    add,
    elementary,
    scalar_multiply,
    spiral_limit_profile,
    unit_circle,
)
from .quadrature import even_panel_count
from .render import closure_gap, normalize, render
from .spectrum import decompose, energy, reconstruct, truncate

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3
EXIT_UNREPRESENTABLE = 4

DEFAULT_SAMPLES = 4096
DEFAULT_MAX_K = 32
DEFAULT_CLOSURE_TOL = 1e-6


def _frequency(text):
    t = text.strip()
    try:
        if "/" in t:
            num, den = t.split("/", 1)
            return Fraction(int(num), int(den))
        if t.lstrip("+-").isdigit():
            return Fraction(int(t))
        return float(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad frequency {text!r}: {exc}") from None


def _descriptor(text):
    try:
        k_s, a_s = text.split(":", 1)
        return int(k_s), float(a_s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad descriptor {text!r}; expected INDEX:COEFF like 3:0.25"
        ) from None


def _weights(text):
    try:
        return [float(w) for w in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from None


def _read_text(path):
    return Path(path).read_text(encoding="utf-8")


def _emit(text, path):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _sniff(text, path):
    head = text.lstrip().split(None, 1)
    kind = head[0] if head else ""
    if kind == PROFILE_MAGIC:
        return "profile"
    if kind == ANGLE_MAGIC:
        return "angle"
    if text.lstrip().startswith("theta,l"):
        return "samples"
    raise FormatError(1, f"{path}: unrecognised document type")


def _profile_samples(profile, samples_per_two_pi):
    """Uniform samples over one period, endpoint excluded."""
    period = profile.period()
    if period is None:
        raise RepresentabilityError(
            "profile is aperiodic; it has no discrete spectrum"
        )
    n = even_panel_count(period, samples_per_two_pi)
    lo = profile.domain[0]
    theta = lo + period * np.arange(n) / n
    return profile.evaluate(theta, extend=True), period


# -- subcommands --------------------------------------------------------


def cmd_gen(args):
    domain = tuple(args.domain) if args.domain else None
    if args.shape == "elementary":
        if args.nu is None:
            raise argparse.ArgumentTypeError("gen elementary requires --nu")
        profile = elementary(args.nu, args.epsilon, args.theta0, domain)
    elif args.shape == "circle":
        profile = unit_circle(domain) if domain else unit_circle()
    else:  # spiral
        profile = (
            spiral_limit_profile(args.growth, domain)
            if domain
            else spiral_limit_profile(args.growth)
        )
    _emit(write_profile(profile), args.output)
    return EXIT_OK


def cmd_mix(args):
    profiles = [read_profile(_read_text(p)) for p in args.inputs]
    weights = args.weights if args.weights is not None else [1.0] * len(profiles)
    if len(weights) != len(profiles):
        raise FormatError(
            1, f"{len(weights)} weights for {len(profiles)} input profiles"
        )
    mixed = scalar_multiply(profiles[0], weights[0])
    for p, w in zip(profiles[1:], weights[1:]):
        mixed = add(mixed, scalar_multiply(p, w))
    _emit(write_profile(mixed), args.output)
    return EXIT_OK


def cmd_render(args):
    profiles = [read_profile(_read_text(p)) for p in args.inputs]
    if not args.svg and len(profiles) > 1:
        raise FormatError(1, "CSV output renders a single profile; use --svg for panels")
    curves = [
        render(p, args.samples, args.closure_tol) for p in profiles
    ]
    if args.svg:
        cols = len(curves) if not args.gallery else max(1, math.isqrt(len(curves)))
        rows = -(-len(curves) // cols)
        entries = []
        for path, curve in zip(args.inputs, curves):
            entries.append((normalize(curve), CurveStyle(label=Path(path).stem)))
        _emit(write_svg(entries, GridLayout(rows, cols)), args.output)
    else:
        _emit(write_curve_csv(curves[0]), args.output)
    for path, curve in zip(args.inputs, curves):
        print(
            f"{path}: {len(curve)} points, closure gap {closure_gap(curve):.3e}, "
            f"{'closed' if curve.closed else 'open'}",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_spectrum(args):
    text = _read_text(args.input)
    kind = _sniff(text, args.input)
    if kind == "profile":
        samples, period = _profile_samples(read_profile(text), args.samples)
    elif kind == "samples":
        samples, period = read_samples_csv(text)
    else:
        raise FormatError(1, f"{args.input}: spectrum needs a profile document or theta,l CSV")
    spectrum = decompose(samples, period, args.max_k)
    lost = None
    if args.keep is not None:
        spectrum, lost = truncate(spectrum, args.keep)
    mean_sq = float(np.mean((samples - np.mean(samples)) ** 2)) * period
    gap = abs(energy(spectrum) - mean_sq) / max(mean_sq, 1e-300)
    lines = [
        f"base period {period:.12g}",
        f"mean {spectrum.mean:.12g}",
        f"bins {len(spectrum.bins)}",
    ]
    for b in spectrum.bins:
        lines.append(
            f"bin k={b.k} frequency {spectrum.frequency(b.k):.12g} "
            f"amplitude {b.amplitude:.12g} phase {b.phase_origin:.12g}"
        )
    lines.append(f"parseval relative gap {gap:.3e}")
    if lost is not None:
        lines.append(f"discarded norm {lost:.12g}")
    print("\n".join(lines))
    if args.output:
        _emit(write_profile(reconstruct(spectrum)), args.output)
    return EXIT_OK


def cmd_angle_demo(args):
    profile = AngleProfile(args.total_turn, tuple((k, a, 0.0) for k, a in args.component))
    margin = convexity_margin(profile, args.samples)
    print(f"total turn {profile.total_turn:.12g}")
    for k, a, b in profile.descriptors:
        print(f"descriptor k={k} a={a:.12g} b={b:.12g}")
    print(f"convexity margin {margin:.12g} ({'convex' if margin > 0 else 'not convex'})")
    curve = render_from_angle(profile, args.samples, args.closure_tol)
    print(f"closure gap {closure_gap(curve):.3e} ({'closed' if curve.closed else 'open'})")
    if args.output:
        if args.svg:
            entries = [(normalize(curve), CurveStyle(label="angle profile"))]
            _emit(write_svg(entries, GridLayout(1, 1)), args.output)
        else:
            _emit(write_curve_csv(curve), args.output)
    return EXIT_OK


def cmd_convert(args):
    text = _read_text(args.input)
    kind = _sniff(text, args.input)
    if kind == "profile":
        conv = logradius_to_angle(read_profile(text), args.samples, args.max_k)
        _emit(write_angle(conv), args.output)
    elif kind == "angle":
        conv = read_angle(text)
        samples, period = angle_to_logradius(
            conv.profile,
            args.samples,
            log_scale=conv.log_scale,
            angle_offset=conv.angle_offset,
        )
        spectrum = decompose(samples, period, args.max_k)
        _emit(write_profile(reconstruct(spectrum)), args.output)
    else:
        raise FormatError(1, f"{args.input}: convert needs a profile or angle document")
    return EXIT_OK


def cmd_regen_figures(args):
    for path in regen_figures(args.outdir, args.samples):
        print(path)
    return EXIT_OK


# -- parser -------------------------------------------------------------


def _add_samples(parser, default=DEFAULT_SAMPLES):
    parser.add_argument(
        "--samples",
        type=int,
        default=default,
        help="grid density per full turn of the tangent",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvespace",
        description="Vector-space algebra of convex plane curves via log-radius profiles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    p = sub.add_parser(
        "gen", formatter_class=fmt, help="construct a profile document"
    )
    p.add_argument("shape", choices=["elementary", "circle", "spiral"])
    p.add_argument("--nu", type=_frequency, default=None,
                   help="frequency: integer, M/N, or decimal (decimal means irrational)")
    p.add_argument("--epsilon", type=float, default=0.3, help="amplitude")
    p.add_argument("--theta0", type=float, default=0.0, help="phase offset")
    p.add_argument("--growth", type=float, default=-0.1, help="spiral growth rate")
    p.add_argument("--domain", type=float, nargs=2, metavar=("LO", "HI"), default=None,
                   help="tangent-angle interval (default: one period)")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "mix", formatter_class=fmt, help="weighted sum of profile documents"
    )
    p.add_argument("inputs", nargs="+", help="profile documents")
    p.add_argument("--weights", type=_weights, default=None,
                   help="comma-separated weights, one per input (default all 1)")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_mix)

    p = sub.add_parser(
        "render", formatter_class=fmt, help="render profile documents to CSV or SVG"
    )
    p.add_argument("inputs", nargs="+", help="profile documents")
    _add_samples(p)
    p.add_argument("--closure-tol", type=float, default=DEFAULT_CLOSURE_TOL,
                   help="relative endpoint gap considered closed")
    p.add_argument("--svg", action="store_true", help="emit SVG panels instead of CSV")
    p.add_argument("--gallery", action="store_true",
                   help="with --svg, lay panels out as a near-square grid")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser(
        "spectrum", formatter_class=fmt,
        help="spectral lines of a profile document or theta,l sample CSV",
    )
    p.add_argument("input", help="profile document or theta,l CSV")
    _add_samples(p)
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K,
                   help="highest harmonic reported")
    p.add_argument("--keep", type=int, default=None,
                   help="keep only this many largest bins and report the discarded norm")
    p.add_argument("-o", "--output", default=None,
                   help="write the reconstructed profile document here")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser(
        "angle-demo", formatter_class=fmt,
        help="build an angle profile from descriptors and report its convexity",
    )
    p.add_argument("--component", type=_descriptor, action="append", required=True,
                   metavar="INDEX:COEFF", help="cosine descriptor; repeatable")
    p.add_argument("--total-turn", type=float, default=2.0 * math.pi,
                   help="total turning angle")
    _add_samples(p)
    p.add_argument("--closure-tol", type=float, default=DEFAULT_CLOSURE_TOL,
                   help="relative endpoint gap considered closed")
    p.add_argument("--svg", action="store_true", help="write SVG instead of curve CSV")
    p.add_argument("-o", "--output", default=None, help="output path for the curve")
    p.set_defaults(func=cmd_angle_demo)

    p = sub.add_parser(
        "convert", formatter_class=fmt,
        help="profile document <-> angle document (direction from input type)",
    )
    p.add_argument("input", help="profile or angle document")
    _add_samples(p)
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K,
                   help="highest harmonic kept by the conversion")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser(
        "regen-figures", formatter_class=fmt, help="write the standard figure set"
    )
    p.add_argument("outdir", help="directory for the SVG files")
    _add_samples(p)
    p.set_defaults(func=cmd_regen_figures)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RepresentabilityError as exc:
        print(f"curvespace: {exc}", file=sys.stderr)
        return EXIT_UNREPRESENTABLE
    except (NumericRangeError, OverflowError, FloatingPointError) as exc:
        print(f"curvespace: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (FormatError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"curvespace: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
