import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from tailleur.errors import AssociativityViolation, Infinite, InvalidPoset, ZeroNotAbsorbing
from tailleur.semigroup import (
    build_from_table,
    check_associative,
    composable_tuples,
    make_poset,
    make_quiver,
    matrix_units,
    monomial_semigroup,
    poset_semigroup,
    quiver_path_semigroup,
)

from conftest import random_semigroup


def test_matrix_units_table(units2):
    assert units2.elements == ("0", "e11", "e12", "e21", "e22")
    for (i, j, k, l) in itertools.product((1, 2), repeat=4):
        expect = f"e{i}{l}" if j == k else "0"
        assert units2.mul(f"e{i}{j}", f"e{k}{l}") == expect


def test_single_zero():
    S = build_from_table(["0"], "0", {("0", "0"): "0"})
    assert S.nonzero == ()


def test_associativity_violation():
    els = ["0", "a", "b"]
    tab = {(x, y): "0" for x in els for y in els}
    tab["a", "a"] = "b"  # (a a) a = b a = 0 but a (a a) = a b ...
    tab["a", "b"] = "a"
    with pytest.raises(AssociativityViolation):
        build_from_table(els, "0", tab)


def test_zero_not_absorbing():
    els = ["0", "a"]
    tab = {("0", "0"): "0", ("0", "a"): "a", ("a", "0"): "0", ("a", "a"): "a"}
    with pytest.raises(ZeroNotAbsorbing):
        build_from_table(els, "0", tab)


def test_chain_poset(chain2):
    assert chain2.nonzero == ("e[0,0]", "e[0,1]", "e[1,1]")
    assert chain2.objects == ("e[0,0]", "e[1,1]")


def test_antichain():
    S = poset_semigroup(make_poset(["a", "b"], []))
    assert S.nonzero == ("e[a,a]", "e[b,b]")
    assert S.mul("e[a,a]", "e[b,b]") == "0"


def test_tetrahedron_face_poset(tetra_poset):
    S = poset_semigroup(tetra_poset)
    faces = [frozenset(c) for k in (1, 2, 3) for c in itertools.combinations(range(4), k)]
    pairs = sum(1 for f in faces for g in faces if f <= g)
    assert len(S.objects) == 14
    assert len(S.nonzero) == pairs == 50


def test_invalid_poset():
    with pytest.raises(InvalidPoset):
        make_poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(InvalidPoset):
        make_poset(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")], close=False)


def test_a2_quiver():
    S = quiver_path_semigroup(make_quiver(["1", "2"], [("alpha", "1", "2")]))
    assert set(S.nonzero) == {"e_1", "e_2", "alpha"}
    assert S.mul("alpha", "alpha") == "0"
    assert S.mul("e_1", "alpha") == "alpha" and S.mul("alpha", "e_2") == "alpha"


def test_loop_truncation():
    S = quiver_path_semigroup(make_quiver(["v"], [("a", "v", "v")], 3))
    assert set(S.nonzero) == {"e_v", "a", "a.a", "a.a.a"}
    assert S.mul("a.a", "a.a") == "0"
    assert S.mul("a", "a.a") == "a.a.a"


def test_cyclic_unbounded_rejected():
    with pytest.raises(Infinite):
        make_quiver(["v"], [("a", "v", "v")])


def test_monomials():
    S = monomial_semigroup(2, 2)
    assert S.mul("x", "y") == "x*y"
    assert S.mul("x^2", "x") == "0"
    S3 = monomial_semigroup(2, 3)
    assert len(S3.nonzero) == comb(3 + 2, 2) == 10
    assert S3.objects == ("1",)


def test_composable_pairs(chain2, units2):
    pairs = composable_tuples(chain2, 2)
    assert ("e[0,0]", "e[0,1]") in pairs
    assert ("e[0,1]", "e[0,1]") not in pairs
    assert composable_tuples(units2, 1) == [(a,) for a in units2.nonzero]
    triples = composable_tuples(units2, 3)
    assert ("e11", "e12", "e22") in triples
    assert ("e12", "e12", "e21") not in triples
    assert triples == sorted(triples)


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_generated_semigroups_associative(seed):
    S = random_semigroup(random.Random(seed), max_size=16)
    assert check_associative(S)
    for a in S.elements:
        assert S.mul(S.zero, a) == S.zero == S.mul(a, S.zero)
    if S.has_objects:
        for a in S.nonzero:
            for b in S.nonzero:
                if S.mul(a, b) != S.zero:
                    assert S.end[a] == S.start[b]


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_tuple_projection(seed, n):
    S = random_semigroup(random.Random(seed))
    shorter = set(composable_tuples(S, n))
    for t in composable_tuples(S, n + 1):
        assert t[:n] in shorter and t[1:] in shorter


@pytest.mark.parametrize("make", [
    lambda: poset_semigroup(make_poset("abc", [("a", "b"), ("a", "c")])),
    lambda: quiver_path_semigroup(make_quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "3"), ("z", "1", "3")])),
])
def test_object_structure_iff(make):
    # without relations or truncation, ab != 0 exactly when end(a) == start(b)
    S = make()
    for a in S.nonzero:
        for b in S.nonzero:
            assert (S.mul(a, b) != S.zero) == (S.end[a] == S.start[b])
