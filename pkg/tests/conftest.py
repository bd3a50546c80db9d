import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from tailleur.nerve import boundary_of_simplex, face_poset
from tailleur.semigroup import (
    build_from_table,
    make_poset,
    make_quiver,
    matrix_units,
    monomial_semigroup,
    null_semigroup,
    poset_semigroup,
    quiver_path_semigroup,
    subsemigroup,
)

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def chain2():
    return poset_semigroup(make_poset(["0", "1"], [("0", "1")]))


@pytest.fixture
def units2():
    return matrix_units(2)


@pytest.fixture
def tetra_poset():
    return face_poset(boundary_of_simplex(3))


@pytest.fixture
def triangle_poset():
    return face_poset(boundary_of_simplex(2))


def random_rational(rng, span=5, den=4):
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


def _random_poset(rng):
    k = rng.randint(1, 4)
    elems = [str(i) for i in range(k)]
    rel = [(str(i), str(j)) for i in range(k) for j in range(i + 1, k) if rng.random() < 0.5]
    return poset_semigroup(make_poset(elems, rel))


def _random_quiver(rng):
    nodes = [str(i) for i in range(rng.randint(1, 3))]
    arrows = [(f"a{i}", rng.choice(nodes), rng.choice(nodes)) for i in range(rng.randint(0, 3))]
    return quiver_path_semigroup(make_quiver(nodes, arrows, rng.randint(1, 3)))


def _random_rectangular_band(rng):
    # I x J with (i, j)(k, l) = (i, l), plus an adjoined zero
    I, J = rng.randint(1, 3), rng.randint(1, 3)
    el = [f"r{i}{j}" for i in range(I) for j in range(J)]
    els = ["0", *el]
    tab = {}
    for a in els:
        for b in els:
            tab[a, b] = "0" if "0" in (a, b) else f"r{a[1]}{b[2]}"
    return build_from_table(els, "0", tab)


def _random_cyclic_nil(rng):
    # a, a^2, ..., a^k with a^(k+1) = 0
    k = rng.randint(1, 6)
    els = ["0", *[f"a{i}" for i in range(1, k + 1)]]
    tab = {}
    for a in els:
        for b in els:
            if "0" in (a, b):
                tab[a, b] = "0"
            else:
                s = int(a[1:]) + int(b[1:])
                tab[a, b] = f"a{s}" if s <= k else "0"
    return build_from_table(els, "0", tab)


FAMILIES = [
    _random_poset,
    _random_quiver,
    _random_rectangular_band,
    _random_cyclic_nil,
    lambda rng: monomial_semigroup(rng.randint(1, 2), rng.randint(1, 2)),
    lambda rng: matrix_units(2),
    lambda rng: null_semigroup([f"n{i}" for i in range(rng.randint(1, 4))]),
]


def random_semigroup(rng, max_size=10):
    """Random small semigroup with zero, |S| <= max_size."""
    while True:
        S = rng.choice(FAMILIES)(rng)
        if rng.random() < 0.25 and len(S.nonzero) > 1:
            # closure of a random subset
            keep = set(rng.sample(S.nonzero, rng.randint(1, len(S.nonzero))))
            while True:
                new = {S.mul(a, b) for a in keep for b in keep} - {S.zero} - keep
                if not new:
                    break
                keep |= new
            S = subsemigroup(S, keep)
        if len(S.elements) <= max_size:
            return S
