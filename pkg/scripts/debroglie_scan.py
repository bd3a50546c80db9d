"""Phase of the free particle over several periods, checked against h/(pv).

    python scripts/debroglie_scan.py --p 2 --v 3 --h 1 --periods 3
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from tailleur.geometry import de_broglie_wavelength, free_particle_phase, phase_period


@dataclass
class ScanConfig:
    p: Fraction = Fraction(2)
    v: Fraction = Fraction(3)
    h: Fraction = Fraction(1)
    periods: int = 3
    per_period: int = 8


def scan(cfg: ScanConfig):
    T = phase_period(cfg.p, cfg.v, cfg.h)
    for k in range(cfg.periods * cfg.per_period + 1):
        t = T * Fraction(k, cfg.per_period)
        yield t, free_particle_phase(cfg.p, cfg.v, t, cfg.h)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", default="2")
    ap.add_argument("--v", default="3")
    ap.add_argument("--h", default="1")
    ap.add_argument("--periods", type=int, default=3)
    ap.add_argument("--per-period", type=int, default=8)
    a = ap.parse_args()
    cfg = ScanConfig(Fraction(a.p), Fraction(a.v), Fraction(a.h), a.periods, a.per_period)
    T = phase_period(cfg.p, cfg.v, cfg.h)
    lam = de_broglie_wavelength(cfg.p, cfg.h)
    print(f"period h/(pv) = {T}   wavelength h/p = {lam}   v * period = {cfg.v * T}")
    print(f"{'t':>8} {'area mod h':>10} {'phase':>24}")
    for t, s in scan(cfg):
        print(f"{str(t):>8} {str(s.area):>10} {s.phase.real:>11.6f}{s.phase.imag:+.6f}i")


if __name__ == "__main__":
    main()
