"""Shapes form a vector space: add them, scale them, invert them.

Addition of log-radius profiles is pointwise, which turns out to mean
"blend the geometric traits of both curves"; scalar multiplication
dials a trait up or down through the circle at factor zero; the unit
circle is the zero vector and every shape has an inverse.  None of
these operations can leave the space: the radius r = exp(l) stays
positive no matter what.

Run:  python3 demos/shape_arithmetic.py
Writes demos/output/scaling_demo.svg and demos/output/mixing_demo.svg
"""

from pathlib import Path

from curvespace import (
    CurveStyle,
    GridLayout,
    add,
    elementary,
    inner_product,
    norm,
    normalize,
    render,
    scalar_multiply,
    spiral_limit_profile,
    unit_circle,
    write_svg,
)
from curvespace.profiles import TWO_PI

OUT = Path(__file__).resolve().parent / "output"


def main():
    OUT.mkdir(exist_ok=True)

    # scaling: the norm is linear in the factor
    base = elementary(2, 0.4)
    print("scalar multiplication of a two-lobed shape")
    entries = []
    for factor in (0.0, 0.5, 1.0, 1.5, 2.0):
        scaled = scalar_multiply(base, factor)
        print(f"  factor {factor:3.1f}: norm {norm(scaled):.6f}")
        entries.append(
            (
                normalize(render(scaled, 4096)),
                CurveStyle(label=f"scale {factor:g}"),
            )
        )
    path = OUT / "scaling_demo.svg"
    path.write_text(write_svg(entries, GridLayout(1, 5)), encoding="utf-8")
    print(f"  wrote {path}")

    # identity and inverse
    print("\nidentity and inverse")
    print(f"  base + circle == base:     {add(base, unit_circle()) == base}")
    inverse = scalar_multiply(base, -1.0)
    print(f"  base + (-base) == circle:  {add(base, inverse) == unit_circle()}")

    # mixing: a spiral plus an ellipse-like shape keeps both traits
    window = (0.0, 2.0 * TWO_PI)
    spiral = spiral_limit_profile(-0.15, window)
    lobed = elementary(2, 0.4, domain=window)
    mixed = add(spiral, lobed)
    print("\nmixing a spiral with a two-lobed shape")
    print(f"  spiral closes: {spiral.closes()},  sum closes: {mixed.closes()}")
    entries = [
        (normalize(render(spiral, 4096)), CurveStyle(label="spiral")),
        (normalize(render(lobed, 4096)), CurveStyle(label="two-lobed")),
        (
            normalize(render(mixed, 4096)),
            CurveStyle(stroke="#d62728", label="sum"),
        ),
    ]
    path = OUT / "mixing_demo.svg"
    path.write_text(write_svg(entries, GridLayout(1, 3)), encoding="utf-8")
    print(f"  wrote {path}")

    # different frequencies do not interact: the inner product vanishes
    print("\northogonality of distinct frequencies")
    a, b = elementary(2, 0.4), elementary(5, 0.4)
    print(f"  <freq 2, freq 5> = {inner_product(a, b):.2e}")
    print(f"  <freq 2, freq 2> = {inner_product(a, a):.6f}  (= pi * eps^2)")


if __name__ == "__main__":
    main()
