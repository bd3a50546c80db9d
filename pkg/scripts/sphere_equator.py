"""Area swept along the equator after a northward impulse, for several
starting colatitudes.  Linear only when starting from the pole.

    python scripts/sphere_equator.py --steps 12
"""
import argparse
import math
from dataclasses import dataclass, field

import numpy as np

from tailleur.geometry import equator_scenario


@dataclass
class EquatorConfig:
    starts_deg: list = field(default_factory=lambda: [90.0, 60.0, 45.0, 20.0])
    steps: int = 12
    lambda_max: float = math.pi


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=12)
    ap.add_argument("--starts", type=float, nargs="*", default=[90.0, 60.0, 45.0, 20.0],
                    help="degrees south of the equator")
    a = ap.parse_args()
    cfg = EquatorConfig(a.starts, a.steps)
    lams = np.linspace(0, cfg.lambda_max, cfg.steps + 1).tolist()
    for deg in cfg.starts_deg:
        res = equator_scenario(math.radians(deg), lams, skip_undefined=True)
        print(f"start {deg:5.1f} S: slope {res.slope:.6f}, nonlinearity {res.nonlinearity:.3e}, "
              f"skipped {['%.4f' % x for x in res.skipped]}")
        for s, A in zip(res.samples, res.raw_areas):
            print(f"    lambda {s.t:7.4f}  area {A + 0.0:+.6f}  phase {s.phase.real:+.5f}{s.phase.imag:+.5f}i")


if __name__ == "__main__":
    main()
