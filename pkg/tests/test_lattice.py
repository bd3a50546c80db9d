import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tailleur.errors import DegenerateVariance, DriftOutOfRange, InvalidProbability, TooLarge
from tailleur.lattice import (
    BOTTOM,
    TOP,
    TilingModel,
    WalkerState,
    WalkParams,
    drift,
    exact_walk_pmf,
    gaussian_compare,
    monte_carlo_walk,
    n_cell_mean_pmf,
    probability_from_drift,
    project_to_plane,
    walk,
)

probs = st.fractions(min_value=0, max_value=1, max_denominator=50)


def test_drift_examples():
    assert probability_from_drift(0) == Fraction(1, 2)
    assert probability_from_drift(1) == 1
    assert probability_from_drift(Fraction(1, 2)) == Fraction(3, 4)
    assert drift(Fraction(1, 2)) == 0 and drift(Fraction(3, 4)) == Fraction(1, 2)
    with pytest.raises(DriftOutOfRange):
        probability_from_drift(Fraction(3, 2))
    with pytest.raises(InvalidProbability):
        drift(2)


@given(st.fractions(min_value=-1, max_value=1))
def test_drift_roundtrip(v):
    assert drift(probability_from_drift(v)) == v


def test_pmf_examples():
    p = Fraction(1, 3)
    assert exact_walk_pmf(1, p).pmf == {-1: 1 - p, 1: p}
    assert exact_walk_pmf(5, 1).pmf == {5: 1}
    assert exact_walk_pmf(2, Fraction(1, 2)).pmf == {-2: Fraction(1, 4), 0: Fraction(1, 2), 2: Fraction(1, 4)}
    assert exact_walk_pmf(7, 1).variance() == 0


@settings(max_examples=150)
@given(st.integers(0, 40), probs)
def test_pmf_properties(T, p):
    d = exact_walk_pmf(T, p)
    assert d.total() == 1
    assert d.mean() == T * (2 * p - 1)
    assert d.variance() == 4 * T * p * (1 - p)
    assert all(-T <= x <= T for x in d.support())


def test_n_cell_examples():
    half = Fraction(1, 2)
    assert n_cell_mean_pmf(6, half, 1).pmf == exact_walk_pmf(6, half).pmf
    assert n_cell_mean_pmf(1, half, 2).pmf == {-1: Fraction(1, 4), 0: Fraction(1, 2), 1: Fraction(1, 4)}
    assert n_cell_mean_pmf(10, half, 5).variance() == 2
    with pytest.raises(TooLarge):
        n_cell_mean_pmf(10_000, half, 100)


@settings(max_examples=40)
@given(st.integers(0, 12), probs, st.integers(1, 5))
def test_n_cell_properties(T, p, N):
    d = n_cell_mean_pmf(T, p, N)
    single = exact_walk_pmf(T, p)
    assert d.total() == 1
    assert d.mean() == single.mean()
    assert d.variance() == single.variance() / N
    assert all(-T <= x <= T for x in d.support())


def test_monte_carlo_deterministic():
    params = WalkParams(Fraction(1, 3), 20, 2, seed=11)
    a = monte_carlo_walk(params, 500)
    assert a.pmf == monte_carlo_walk(params, 500).pmf
    assert a.total() == 1
    assert monte_carlo_walk(WalkParams(1, 9, 1, seed=3), 50).pmf == {9: 1}
    # prefix property: the first trials do not depend on the total count
    assert monte_carlo_walk(WalkParams(Fraction(1, 2), 5, 1, seed=4), 1).pmf == \
        monte_carlo_walk(WalkParams(Fraction(1, 2), 5, 1, seed=4), 1).pmf


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1), st.integers(0, 30), probs, st.sampled_from([TOP, BOTTOM]))
def test_walk_keeps_sheet_and_cone(seed, T, p, sheet):
    path = walk(WalkerState(0, sheet), T, p, seed)
    assert len(path) == T + 1
    assert all(w.sheet == sheet for w in path)
    assert all(abs(w.cell) <= k for k, w in enumerate(path))


def test_gaussian_compare():
    half = Fraction(1, 2)
    reps = [gaussian_compare(T, half) for T in (16, 64, 256)]
    gaps = [r.max_gap_within_2sigma for r in reps]
    assert gaps[0] > gaps[1] > gaps[2]
    assert all(r.gaussian_mass_outside_cone > 0 and r.binomial_mass_outside_cone == 0 for r in reps)
    r100 = gaussian_compare(100, half)
    assert r100.max_gap_within_2sigma <= r100.berry_esseen_bound
    with pytest.raises(DegenerateVariance):
        gaussian_compare(10, 1)


def test_tiling_and_projection():
    m = TilingModel(Fraction(1), Fraction(1, 4))
    assert m.tile_area == Fraction(1, 2) and m.doubled_tile_area == 1
    top, bottom = WalkerState(3, TOP), WalkerState(3, BOTTOM)
    (pt, mult) = project_to_plane(top, m)
    assert mult == 2 and project_to_plane(bottom, m)[0] == pt
    assert project_to_plane(WalkerState(3, TOP, on_edge=True), m)[1] == 1
