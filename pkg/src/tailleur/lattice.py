"""Two-sheet tiled phase space and the lattice random walk of a packet.

One time unit is one lattice step, so after T steps every walker sits in
[-T, T]: the light cone is the exact support bound.  Distributions are
exact rationals; only the Gaussian comparison uses floats.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

import numpy as np

from .errors import DegenerateVariance, DriftOutOfRange, InvalidProbability, NonpositiveParameter, TooLarge

TOP, BOTTOM = "top", "bottom"
MAX_TABLE = 2_000_000


@dataclass(frozen=True)
class TilingModel:
    h: Fraction
    tile_width: Fraction

    def __post_init__(self):
        object.__setattr__(self, "h", Fraction(self.h))
        object.__setattr__(self, "tile_width", Fraction(self.tile_width))
        if self.h <= 0 or self.tile_width <= 0:
            raise NonpositiveParameter("h and tile_width must be positive")

    @property
    def tile_height(self) -> Fraction:
        return self.h / 2 / self.tile_width

    @property
    def tile_area(self) -> Fraction:
        return self.tile_width * self.tile_height

    @property
    def doubled_tile_area(self) -> Fraction:
        return 2 * self.tile_area


@dataclass(frozen=True)
class WalkerState:
    cell: int
    sheet: str = TOP
    on_edge: bool = False
    row: int = 0  # momentum-direction tile index

    def __post_init__(self):
        if self.sheet not in (TOP, BOTTOM):
            raise ValueError(f"sheet must be {TOP!r} or {BOTTOM!r}")


@dataclass(frozen=True)
class WalkParams:
    prob: Fraction
    steps: int
    cells: int = 1
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "prob", _prob(self.prob))
        if self.steps < 0 or self.cells < 1:
            raise NonpositiveParameter("need steps >= 0 and cells >= 1")


def _prob(p) -> Fraction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InvalidProbability(f"probability {p} outside [0, 1]")
    return p


@dataclass(frozen=True)
class LatticeDistribution:
    """pmf over positions in (1/denominator) Z, keyed by exact Fraction."""

    denominator: int
    pmf: Mapping[Fraction, Fraction]

    def total(self) -> Fraction:
        return sum(self.pmf.values(), Fraction(0))

    def mean(self) -> Fraction:
        return sum((x * w for x, w in self.pmf.items()), Fraction(0))

    def variance(self) -> Fraction:
        m = self.mean()
        return sum(((x - m) ** 2 * w for x, w in self.pmf.items()), Fraction(0))

    def support(self) -> list[Fraction]:
        return sorted(x for x, w in self.pmf.items() if w)

    def cdf(self, x) -> Fraction:
        return sum((w for y, w in self.pmf.items() if y <= x), Fraction(0))


def probability_from_drift(vbar) -> Fraction:
    vbar = Fraction(vbar)
    if abs(vbar) > 1:
        raise DriftOutOfRange(f"|drift| = {abs(vbar)} exceeds the speed of light")
    return (vbar + 1) / 2


def drift(prob) -> Fraction:
    return 2 * _prob(prob) - 1


def exact_walk_pmf(T: int, prob) -> LatticeDistribution:
    p = _prob(prob)
    if T < 0:
        raise NonpositiveParameter("T must be >= 0")
    q = 1 - p
    pmf = {}
    for k in range(T + 1):
        w = comb(T, k) * p**k * q ** (T - k)
        if w:
            pmf[Fraction(2 * k - T)] = w
    return LatticeDistribution(1, pmf)


def n_cell_mean_pmf(T: int, prob, N: int) -> LatticeDistribution:
    """Mean position of N independent single-cell walks.

    The sum of N walks of T steps is itself a walk of N*T steps, so the
    N-fold convolution is done by repeated squaring-free accumulation.
    """
    if N < 1:
        raise NonpositiveParameter("N must be >= 1")
    if (N * T + 1) * N > MAX_TABLE:
        raise TooLarge("N * T too large for an exact table")
    single = exact_walk_pmf(T, prob).pmf
    total = {Fraction(0): Fraction(1)}
    for _ in range(N):
        nxt: dict = {}
        for x, w in total.items():
            for y, u in single.items():
                nxt[x + y] = nxt.get(x + y, 0) + w * u
        total = nxt
    return LatticeDistribution(N, {x / N: w for x, w in sorted(total.items()) if w})


# --- sampling ---------------------------------------------------------------


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Per-trial substream from the pair (seed, trial index)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & (2**64 - 1), trial])))


def step(state: WalkerState, rng, prob) -> WalkerState:
    """One tick: move one cell right with probability ``prob``, else left.
    The sheet (spin) is carried along unchanged."""
    right = rng.random() < float(prob)
    return WalkerState(state.cell + (1 if right else -1), state.sheet, False, state.row)


def walk(state: WalkerState, steps: int, prob, seed: int) -> list[WalkerState]:
    rng = random.Random(seed)
    out = [state]
    for _ in range(steps):
        out.append(step(out[-1], rng, prob))
    return out


def monte_carlo_walk(params: WalkParams, trials: int) -> LatticeDistribution:
    """Empirical distribution of the N-cell mean position.

    Trial i draws its N*T steps from ``trial_rng(seed, i)`` (the count of
    right moves is binomial), so results do not depend on batching.
    """
    if trials < 1:
        raise NonpositiveParameter("trials must be >= 1")
    T, N, p = params.steps, params.cells, float(params.prob)
    counts: dict[int, int] = {}
    for i in range(trials):
        k = int(trial_rng(params.seed, i).binomial(N * T, p)) if T else 0
        s = 2 * k - N * T  # sum of the N walkers' positions
        counts[s] = counts.get(s, 0) + 1
    return LatticeDistribution(N, {Fraction(s, N): Fraction(c, trials) for s, c in sorted(counts.items())})


def bins_within_sigma(exact: LatticeDistribution, empirical: LatticeDistribution, trials: int, k: float = 3.0):
    """Per support position, whether the empirical frequency lies within k
    binomial standard errors of the exact probability."""
    out = {}
    for x, w in exact.pmf.items():
        p = float(w)
        sigma = math.sqrt(p * (1 - p) / trials)
        obs = float(empirical.pmf.get(x, 0))
        out[x] = abs(obs - p) <= k * sigma
    return out


# --- Gaussian comparison ----------------------------------------------------


def _norm_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2))


@dataclass(frozen=True)
class GaussianReport:
    steps: int
    prob: Fraction
    mean: Fraction
    sigma: float
    max_gap: float
    max_gap_within_2sigma: float
    berry_esseen_bound: float
    gaussian_mass_outside_cone: float
    binomial_mass_outside_cone: Fraction

    def as_dict(self) -> dict:
        return {
            "steps": self.steps,
            "prob": str(self.prob),
            "mean": str(self.mean),
            "sigma": self.sigma,
            "max_gap": self.max_gap,
            "max_gap_within_2sigma": self.max_gap_within_2sigma,
            "berry_esseen_bound": self.berry_esseen_bound,
            "gaussian_mass_outside_cone": self.gaussian_mass_outside_cone,
            "binomial_mass_outside_cone": str(self.binomial_mass_outside_cone),
        }


BERRY_ESSEEN_C = 0.4748


def gaussian_compare(T: int, prob) -> GaussianReport:
    """Binomial walk CDF against the Gaussian with the same mean and variance.

    Gaps are evaluated at every support point (right limits of the step
    CDF) and just below it (left limits).
    """
    p = _prob(prob)
    if p in (0, 1):
        raise DegenerateVariance("walk with prob 0 or 1 does not spread")
    if T < 1:
        raise NonpositiveParameter("T must be >= 1")
    dist = exact_walk_pmf(T, p)
    mean = dist.mean()
    var = dist.variance()
    sigma = math.sqrt(var)
    gap = gap2 = 0.0
    below = Fraction(0)
    for x in dist.support():
        above = below + dist.pmf[x]
        G = _norm_cdf((float(x) - float(mean)) / sigma)
        g = max(abs(float(below) - G), abs(float(above) - G))
        gap = max(gap, g)
        if abs(x - mean) <= 2 * sigma:
            gap2 = max(gap2, g)
        below = above
    # one step has variance 4p(1-p) and third absolute central moment
    # 8 p q (p^2 + q^2)
    q = 1 - p
    rho = 8 * float(p * q * (p * p + q * q))
    s1 = math.sqrt(4 * float(p * q))
    be = BERRY_ESSEEN_C * rho / (s1**3 * math.sqrt(T))
    m = float(mean)
    outside = 0.5 * math.erfc((T - m) / (sigma * math.sqrt(2))) + 0.5 * math.erfc((T + m) / (sigma * math.sqrt(2)))
    binom_out = sum((w for x, w in dist.pmf.items() if abs(x) > T), Fraction(0))
    return GaussianReport(T, p, mean, sigma, gap, gap2, be, outside, binom_out)


# --- projection -------------------------------------------------------------


def project_to_plane(w: WalkerState, m: TilingModel) -> tuple[tuple[Fraction, Fraction], int]:
    """Tile-centre (q, p) and multiplicity of the two-sheet projection."""
    q = (w.cell + Fraction(1, 2)) * m.tile_width
    p = (w.row + Fraction(1, 2)) * m.tile_height
    return (q, p), (1 if w.on_edge else 2)
