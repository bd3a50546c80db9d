import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tailleur.cochains import coboundary, from_function, make_cochain, mod, reduce_mod, zero_cochain
from tailleur.errors import MissingValue, NotACocycle, NotClosed, SemigroupMismatch
from tailleur.geometry import export_sphere_twist
from tailleur.semigroup import make_quiver, monomial_semigroup, quiver_path_semigroup
from tailleur.twists import (
    AlgebraElement,
    basis,
    circle_twist,
    exp_twist,
    identity_twist,
    plain_product,
    quantum_plane_cocycle,
    restrict_twist,
    roundtrip_ok,
    star,
    triviality_check,
    twist_product,
    verify_twist,
)

from conftest import random_rational, random_semigroup

seeds = st.integers(0, 2**32 - 1)


@pytest.fixture(scope="module")
def plane():
    return monomial_semigroup(2, 4)


def _random_cocycle(rng, S):
    return coboundary(from_function(S, 1, lambda a: random_rational(rng)))


def test_hbar_zero_is_identity(plane):
    t = exp_twist(quantum_plane_cocycle(plane), 0)
    assert t.is_identity() and all(v == 1 for v in t.values().values())


def test_family_law(plane):
    F = quantum_plane_cocycle(plane)
    for h1, h2 in [(1, -1), (Fraction(1, 3), Fraction(2, 5))]:
        prod = twist_product(exp_twist(F, h1), exp_twist(F, h2))
        direct = exp_twist(F, h1 + h2)
        assert all(prod.log_value(*k) == direct.log_value(*k) for k in F.values)
    assert twist_product(exp_twist(F, 1), exp_twist(F, -1)).is_identity()


def test_not_a_cocycle(units2):
    F = make_cochain(units2, 2, {("e11", "e12"): 1}, fill=0)
    with pytest.raises(NotACocycle):
        exp_twist(F, 1)
    with pytest.raises(NotACocycle):
        circle_twist(reduce_mod(F, 5))


def test_quantum_plane_values(plane):
    for hbar in (Fraction(1, 10), Fraction(1)):
        t = exp_twist(quantum_plane_cocycle(plane), hbar)
        x, y = basis(plane, "x"), basis(plane, "y")
        xy, yx = star(t, x, y), star(t, y, x)
        assert math.isclose(xy.coeff("x*y"), math.exp(hbar / 2), rel_tol=1e-12)
        assert math.isclose(yx.coeff("x*y"), math.exp(-hbar / 2), rel_tol=1e-12)
        assert xy.close_to(yx.scale(math.exp(hbar)))
    assert exp_twist(quantum_plane_cocycle(plane), 1).value("x", "y") == pytest.approx(math.exp(0.5), rel=1e-15)


def test_circle_values(chain2):
    g = make_cochain(chain2, 1, {("e[0,0]",): Fraction(1, 2), ("e[0,1]",): Fraction(1, 3)}, mod(1), fill=0)
    t = circle_twist(coboundary(g))
    # dg(a, b) = g(b) - g(ab) + g(a)
    assert t.value("e[0,0]", "e[0,0]") == -1
    assert t.value("e[0,0]", "e[0,1]") == -1
    assert t.value("e[0,1]", "e[1,1]") == 1
    assert all(abs(abs(v) - 1) < 1e-15 for v in t.values().values())
    assert circle_twist(zero_cochain(chain2, 2, mod(3))).is_identity()


def test_half_period_is_minus_one():
    S = monomial_semigroup(1, 3)
    F = from_function(S, 2, lambda a, b: Fraction(3, 2))  # constant cochains are cocycles in degree 2
    t = circle_twist(reduce_mod(F, 3))
    assert t.value("x", "x") == -1


def test_circle_differs_from_exp(plane):
    F = quantum_plane_cocycle(plane)
    real = exp_twist(F, 1)
    circ = circle_twist(reduce_mod(F, 1))
    assert circ.value("x", "y") != real.value("x", "y")
    assert circ.value("x", "y") == -1


def test_verify_twist_examples(units2):
    S = units2
    ones = {p: 1 for p in S.tuples(2)}
    assert verify_twist(S, ones)
    with pytest.raises(MissingValue):
        verify_twist(S, {})
    rng = random.Random(1)
    t = exp_twist(_random_cocycle(rng, S), Fraction(1, 3))
    vals = t.values()
    assert verify_twist(S, vals)
    vals[("e11", "e12")] *= 2
    assert not verify_twist(S, vals)


@settings(max_examples=80)
@given(seeds)
def test_constructed_twists_verify_and_associate(seed):
    rng = random.Random(seed)
    S = random_semigroup(rng, max_size=8)
    F = _random_cocycle(rng, S) if S.has_objects else from_function(S, 2, lambda a, b: 0)
    for t in (exp_twist(F, random_rational(rng, span=1)), circle_twist(reduce_mod(F, rng.choice([1, 2, Fraction(1, 3)])))):
        assert verify_twist(S, t.values())
        assert t.satisfies_identity()
        el = S.nonzero
        for a in el:
            for b in el:
                for c in el:
                    A, B, C = basis(S, a), basis(S, b), basis(S, c)
                    assert star(t, star(t, A, B), C).close_to(star(t, A, star(t, B, C)))


def test_star_identity_and_zero_products():
    S = quiver_path_semigroup(make_quiver(["1", "2"], [("alpha", "1", "2")]))
    t = identity_twist(S)
    a, e1 = basis(S, "alpha"), basis(S, "e_1")
    assert star(t, e1, a).terms == plain_product(e1, a).terms == {"alpha": 1}
    assert star(t, a, e1).terms == {}
    other = monomial_semigroup(1, 1)
    with pytest.raises(SemigroupMismatch):
        star(t, a, basis(other, "x"))


def test_star_bilinear(plane):
    t = exp_twist(quantum_plane_cocycle(plane), 1)
    u = AlgebraElement(plane, {"x": 2, "y": 3})
    v = AlgebraElement(plane, {"y": 1})
    lhs = star(t, u, v)
    rhs = star(t, basis(plane, "x"), v).scale(2) + star(t, basis(plane, "y"), v).scale(3)
    assert lhs.close_to(rhs)


# --- triviality ---------------------------------------------------------------


def test_identity_trivial(units2):
    res = triviality_check(identity_twist(units2))
    assert res.trivial and res.g.is_zero()


def test_quantum_plane_real_nontrivial(plane):
    assert not triviality_check(exp_twist(quantum_plane_cocycle(plane), 1)).trivial
    # mod 1 the class dies: F takes values in (1/2)Z and 2F is a coboundary... solver decides
    circ = circle_twist(reduce_mod(quantum_plane_cocycle(plane), 1))
    res = triviality_check(circ)
    assert res.trivial and roundtrip_ok(circ, res)


@settings(max_examples=60)
@given(seeds, st.sampled_from([1, 2, Fraction(5, 3)]))
def test_coboundary_roundtrip(seed, tau):
    rng = random.Random(seed)
    S = random_semigroup(rng, max_size=8)
    if not S.has_objects and not S.tuples(2):
        return
    dg = _random_cocycle(rng, S) if S.has_objects else coboundary(from_function(S, 1, lambda a: random_rational(rng)))
    real = exp_twist(dg, 1)
    res = triviality_check(real)
    assert res.trivial and roundtrip_ok(real, res)
    circ = circle_twist(reduce_mod(dg, tau))
    res = triviality_check(circ)
    assert res.trivial and roundtrip_ok(circ, res)


@pytest.fixture(scope="module")
def tetra_export():
    return export_sphere_twist("tetrahedral")


def test_sphere_export_verdicts(tetra_export):
    t = tetra_export.twist
    assert t.tau == 4
    res = triviality_check(t)
    assert res.trivial and roundtrip_ok(t, res)
    # the same areas modulo other periods
    F = t.exponent
    lifted = make_cochain(F.semigroup, 2, {k: (v + 2) % 4 - 2 for k, v in F.values.items()})
    assert not triviality_check(exp_twist(lifted, 1)).trivial
    assert triviality_check(circle_twist(reduce_mod(lifted, 2))).trivial
    assert not triviality_check(circle_twist(reduce_mod(lifted, 8))).trivial
    assert not triviality_check(circle_twist(reduce_mod(lifted, 3))).trivial


# --- restriction ----------------------------------------------------------------


def test_restrict_identity(units2):
    r = restrict_twist(identity_twist(units2), ["e11", "e12", "e22"])
    assert r.is_identity()


def test_restrict_quantum_plane_to_x(plane):
    t = exp_twist(quantum_plane_cocycle(plane), 1)
    r = restrict_twist(t, ["x", "x^2", "x^3", "x^4"])
    assert r.is_identity()
    with pytest.raises(NotClosed):
        restrict_twist(t, ["x", "x^2"])


@settings(max_examples=40)
@given(seeds)
def test_restriction_of_trivial_is_trivial(seed):
    rng = random.Random(seed)
    S = random_semigroup(rng, max_size=8)
    if not S.has_objects:
        return
    t = circle_twist(reduce_mod(_random_cocycle(rng, S), 1))
    keep = [a for a in S.nonzero if rng.random() < 0.6]
    closed = set(keep)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            for b in list(closed):
                c = S.mul(a, b)
                if c != S.zero and c not in closed:
                    closed.add(c)
                    changed = True
    if not closed:
        return
    r = restrict_twist(t, sorted(closed))
    assert triviality_check(t).trivial and triviality_check(r).trivial
