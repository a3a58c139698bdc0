"""The classical alternative, and why it is worse: tangent-angle profiles.

The older way to encode a closed curve is the tangent angle as a
function of normalized arc length, theta(s) = s * Theta + sum of
Fourier descriptors.  It looks equivalent, but its descriptor space is
booby-trapped:

* push any single descriptor past |a_k * k| = 1 and the curve stops
  being convex;
* add two perfectly convex descriptor profiles and the sum can be
  non-convex anyway;
* a k = 1 descriptor breaks closure outright.

Log-radius profiles have none of these traps -- any profile, and any
sum of profiles, is a convex curve.  The two representations are
interconvertible exactly on the convex domain, and this script round
trips a shape through the angle form and back.

Run:  python3 demos/angle_contrast.py
Writes demos/output/angle_demo.svg
"""

from pathlib import Path

import numpy as np

from curvespace import (
    ConvexityError,
    CurveStyle,
    GridLayout,
    add,
    add_angle_profiles,
    angle_to_logradius,
    closure_gap,
    convexity_margin,
    elementary,
    logradius_to_angle,
    normalize,
    render,
    render_from_angle,
    single_component,
    write_svg,
)
from curvespace.angle import angle_start

OUT = Path(__file__).resolve().parent / "output"


def main():
    OUT.mkdir(exist_ok=True)

    # one descriptor, amplitude swept through the convexity boundary 1/k
    print("single descriptor k = 3: convexity margin vs amplitude")
    entries = []
    for a in (0.2, 0.3333, 0.6):
        ap = single_component(3, a)
        margin = convexity_margin(ap)
        state = "convex" if margin > 0 else "NOT convex"
        print(f"  a = {a:6.4f}: margin {margin:+.4f}  ({state})")
        entries.append(
            (
                normalize(render_from_angle(ap)),
                CurveStyle(
                    stroke="#1f77b4" if margin > 0 else "#d62728",
                    label=f"a = {a:g}",
                ),
            )
        )
    path = OUT / "angle_demo.svg"
    path.write_text(write_svg(entries, GridLayout(1, 3)), encoding="utf-8")
    print(f"  wrote {path}")

    # addition is not safe: two convex profiles, non-convex sum
    first, second = single_component(2, 0.4), single_component(5, 0.18)
    summed = add_angle_profiles(first, second)
    print("\ndescriptor addition: each term is convex, the sum is not")
    print(f"  margin of first:  {convexity_margin(first):+.4f}")
    print(f"  margin of second: {convexity_margin(second):+.4f}")
    print(f"  margin of sum:    {convexity_margin(summed):+.4f}")

    # a k = 1 descriptor destroys closure
    resonant = single_component(1, 0.5)
    gap = closure_gap(render_from_angle(resonant))
    print(f"\nk = 1 descriptor: closure gap {gap:.3f} (curve does not close)")

    # log-radius addition has no convexity trap: exp keeps radius positive,
    # and closure of a sum is decided up front by the frequency arithmetic
    mixed = add(elementary(2, 0.4), elementary(5, 0.4))
    radius = np.exp(mixed.evaluate(np.linspace(0.0, 2 * np.pi, 2001)))
    print(f"\nsame two traits mixed as log-radius profiles: min radius "
          f"{radius.min():.4f} > 0 (always a valid convex-curve profile)")
    shared = add(elementary(2, 0.4), elementary(4, 0.3))
    print(f"closure of sums is predictable: frequencies (2, 5) close: "
          f"{mixed.closes()};  (2, 4) close: {shared.closes()}")

    # exact interconversion on the convex domain
    shape = add(elementary(3, 0.15), elementary(5, 0.05))
    conv = logradius_to_angle(shape)
    back, period = angle_to_logradius(
        conv.profile,
        log_scale=conv.log_scale,
        angle_offset=conv.angle_offset,
    )
    n = back.size
    grid = angle_start(conv.profile, conv.angle_offset) + period * np.arange(n) / n
    err = np.abs(back - shape.evaluate(grid, extend=True)).max()
    print(f"\nround trip through the angle form: max error {err:.2e}")

    # conversion guards its precondition instead of assuming it
    try:
        angle_to_logradius(summed)
    except ConvexityError as exc:
        print(f"non-convex input is refused: {exc}")


if __name__ == "__main__":
    main()
