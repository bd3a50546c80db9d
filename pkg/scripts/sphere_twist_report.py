"""Triviality verdicts for the triangulated sphere twist under several
reductions of the same area cochain (areas in units of pi).

    python scripts/sphere_twist_report.py --triangulation octahedral
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from tailleur.cochains import make_cochain, reduce_mod
from tailleur.geometry import export_sphere_twist
from tailleur.twists import circle_twist, exp_twist, roundtrip_ok, triviality_check


@dataclass
class ReportConfig:
    triangulation: str = "octahedral"
    periods: tuple = (Fraction(4), Fraction(2), Fraction(8), Fraction(3))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--triangulation", choices=("tetrahedral", "octahedral"), default="octahedral")
    cfg = ReportConfig(ap.parse_args().triangulation)
    exp = export_sphere_twist(cfg.triangulation)
    areas = sorted({abs(a) for a in exp.cells.values()})
    print(f"{cfg.triangulation}: {len(exp.cells)} cells, |area| in units of pi: {[str(a) for a in areas]}, "
          f"total {sum(abs(a) for a in exp.cells.values())}")

    F = exp.twist.exponent
    # representatives in (-2, 2], i.e. signed areas in (-2 pi, 2 pi]
    lifted = make_cochain(F.semigroup, 2, {k: -((2 - v) % 4) + 2 for k, v in F.values.items()})
    res = triviality_check(exp_twist(lifted, 1))
    print(f"  real lift exp(F): {res}")
    for tau in cfg.periods:
        t = circle_twist(reduce_mod(lifted, tau))
        res = triviality_check(t)
        extra = f", roundtrip {roundtrip_ok(t, res)}" if res.trivial else ""
        print(f"  mod {tau} pi: {res}{extra}")


if __name__ == "__main__":
    main()
