"""Elementary shapes: one sinusoidal log-radius component per curve.

A shape here is a log-radius profile l(theta) = log r(theta), where
r = ds/dtheta is how fast arc length accumulates per unit of tangent
turning.  An elementary shape has a single component
epsilon * sin(nu * (theta - theta0)).  This script builds a range of
frequencies nu = m/n and shows the two structural facts that make them
interesting:

* the curve closes after n turns exactly when the numerator m > 1, and
* a closed one has m-fold rotational symmetry.

Run:  python3 demos/elementary_shapes.py
Writes demos/output/elementary_demo.svg
"""

from fractions import Fraction
from pathlib import Path

from curvespace import (
    CurveStyle,
    GridLayout,
    closure_gap,
    elementary,
    normalize,
    render,
    rotational_symmetry_error,
    write_svg,
)

OUT = Path(__file__).resolve().parent / "output"

FREQS = [
    Fraction(2),      # two lobes, closes in one turn
    Fraction(3),      # three lobes
    Fraction(5),      # five lobes
    Fraction(3, 2),   # closes after two turns, three-fold symmetric
    Fraction(5, 2),   # closes after two turns, five-fold symmetric
    Fraction(7, 3),   # closes after three turns
    Fraction(1, 2),   # numerator 1: never closes
    Fraction(1, 3),   # numerator 1: never closes
]


def main():
    print("frequency  turns  closes  symmetry  measured gap  symmetry error")
    entries = []
    for nu in FREQS:
        profile = elementary(nu, 0.3)
        curve = render(profile, 4096)
        gap = closure_gap(curve)
        if profile.closes():
            sym = profile.symmetry_order()
            err = rotational_symmetry_error(curve, sym)
            sym_txt, err_txt = str(sym), f"{err:.2e}"
        else:
            sym_txt, err_txt = "-", "-"
        print(
            f"{str(nu):>9}  {profile.period_turns():>5}  "
            f"{str(profile.closes()):>6}  {sym_txt:>8}  {gap:12.2e}  {err_txt:>14}"
        )
        entries.append(
            (normalize(curve), CurveStyle(label=f"frequency {nu}"))
        )

    OUT.mkdir(exist_ok=True)
    path = OUT / "elementary_demo.svg"
    path.write_text(write_svg(entries, GridLayout(2, 4)), encoding="utf-8")
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
