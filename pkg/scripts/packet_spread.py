"""Spread of the lattice packet: exact pmf vs Monte Carlo vs Gaussian, and
the narrowing with the cell count N.

    python scripts/packet_spread.py --steps 100 --trials 100000 --seed 1
"""
import argparse
import math
from dataclasses import dataclass
from fractions import Fraction

from tailleur.lattice import (
    WalkParams,
    bins_within_sigma,
    exact_walk_pmf,
    gaussian_compare,
    monte_carlo_walk,
    n_cell_mean_pmf,
)


@dataclass
class SpreadConfig:
    steps: int = 100
    prob: Fraction = Fraction(1, 2)
    trials: int = 100_000
    seed: int = 1
    max_cells: int = 4


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=100)
    ap.add_argument("--prob", default="1/2")
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-cells", type=int, default=4)
    a = ap.parse_args()
    cfg = SpreadConfig(a.steps, Fraction(a.prob), a.trials, a.seed, a.max_cells)

    exact = exact_walk_pmf(cfg.steps, cfg.prob)
    mc = monte_carlo_walk(WalkParams(cfg.prob, cfg.steps, 1, cfg.seed), cfg.trials)
    ok = bins_within_sigma(exact, mc, cfg.trials)
    print(f"T={cfg.steps} p={cfg.prob}: mean {exact.mean()}, variance {exact.variance()}")
    print(f"Monte Carlo ({cfg.trials} trials): {sum(ok.values())}/{len(ok)} bins within 3 sigma, "
          f"support [{min(mc.support())}, {max(mc.support())}]")

    print("cells  variance of mean  sigma")
    for N in range(1, cfg.max_cells + 1):
        T = min(cfg.steps, 40)
        var = n_cell_mean_pmf(T, cfg.prob, N).variance()
        print(f"{N:5d}  {str(var):>16}  {math.sqrt(var):.4f}   (T={T})")

    if 0 < cfg.prob < 1:
        print("T      gap(all)  gap(2 sigma)  Berry-Esseen  Gaussian mass past cone")
        for T in (16, 64, 256, 1024):
            r = gaussian_compare(T, cfg.prob)
            print(f"{T:<6} {r.max_gap:.5f}   {r.max_gap_within_2sigma:.5f}       {r.berry_esseen_bound:.5f}"
                  f"       {r.gaussian_mass_outside_cone:.3e}")


if __name__ == "__main__":
    main()
