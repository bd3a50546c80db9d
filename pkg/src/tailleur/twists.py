"""Twists (multiplicative 2-cocycles) built from additive cocycles, the
twisted star product on the semigroup algebra, and triviality decisions.

A twist is stored through its additive exponent ``F``:

* real mode:   f(a, b) = exp(hbar * F(a, b)),           F rational
* circle mode: f(a, b) = exp(2 pi i F(a, b) / tau),      F rational mod tau

Exponents stay exact; complex or float values appear only when a twist is
evaluated.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Mapping, Optional

from . import linalg
from .cochains import (
    RATIONALS,
    Cochain,
    coboundary,
    coboundary_matrix,
    is_cocycle,
    make_cochain,
    mod,
    solve_coboundary,
)
from .errors import (
    CoefficientMismatch,
    IrrationalExponent,
    MissingValue,
    NotACocycle,
    SemigroupMismatch,
)
from .semigroup import SemigroupTable, monomial_exponent, subsemigroup

REAL = "real"
CIRCLE = "circle"

# exact values of exp(2 pi i x) at quarter turns
_QUARTER = {Fraction(0): 1, Fraction(1, 4): 1j, Fraction(1, 2): -1, Fraction(3, 4): -1j}


@dataclass(frozen=True, eq=False)
class Twist:
    exponent: Cochain = field(repr=False)
    mode: str
    hbar: Optional[Fraction] = None
    tau: Optional[Fraction] = None

    @property
    def semigroup(self) -> SemigroupTable:
        return self.exponent.semigroup

    def log_value(self, a: str, b: str) -> Fraction:
        """hbar * F(a, b) in real mode; the turn fraction F(a, b)/tau in [0, 1)
        in circle mode."""
        F = self.exponent.values[a, b]
        if self.mode == REAL:
            return self.hbar * F
        return (F / self.tau) % 1

    def value(self, a: str, b: str):
        x = self.log_value(a, b)
        if self.mode == REAL:
            return 1 if x == 0 else math.exp(x)
        return _QUARTER.get(x, None) or cmath.exp(2j * math.pi * float(x))

    def values(self) -> dict:
        return {k: self.value(*k) for k in self.exponent.values}

    def is_identity(self) -> bool:
        return all(self.log_value(*k) == 0 for k in self.exponent.values)

    def satisfies_identity(self) -> bool:
        """f(a,b)f(ab,c) = f(b,c)f(a,bc) on every composable triple, checked
        exactly on the exponents."""
        return is_cocycle(self.exponent)


def exp_twist(F: Cochain, hbar) -> Twist:
    if F.degree != 2 or F.coeffs.is_mod:
        raise CoefficientMismatch("real twists need a rational 2-cochain")
    if not is_cocycle(F):
        raise NotACocycle("exponent is not an additive 2-cocycle")
    return Twist(F, REAL, hbar=Fraction(hbar))


def circle_twist(F: Cochain) -> Twist:
    if F.degree != 2 or not F.coeffs.is_mod:
        raise CoefficientMismatch("circle twists need a 2-cochain reduced mod tau")
    if not is_cocycle(F):
        raise NotACocycle("exponent is not an additive 2-cocycle mod tau")
    return Twist(F, CIRCLE, tau=F.coeffs.tau)


def identity_twist(S: SemigroupTable) -> Twist:
    return Twist(make_cochain(S, 2, {}, fill=0), REAL, hbar=Fraction(1))


def twist_product(t1: Twist, t2: Twist) -> Twist:
    """Pointwise product of two twists of the same mode (and tau)."""
    if not t1.semigroup.same_as(t2.semigroup):
        raise SemigroupMismatch("twists live on different semigroups")
    if t1.mode != t2.mode or t1.tau != t2.tau:
        raise CoefficientMismatch("twists of different kinds")
    if t1.mode == REAL:
        F = t1.exponent.scale(t1.hbar) + t2.exponent.scale(t2.hbar)
        return Twist(F, REAL, hbar=Fraction(1))
    return Twist(t1.exponent + t2.exponent, CIRCLE, tau=t1.tau)


def verify_twist(S: SemigroupTable, values: Mapping[tuple[str, str], Number], tol: float = 1e-12) -> bool:
    """Check the multiplicative cocycle identity on raw values.

    Exact when every value is an int or Fraction, otherwise with relative
    tolerance ``tol``.
    """
    pairs = S.tuples(2)
    for p in pairs:
        if p not in values:
            raise MissingValue(f"no value for {p}")
    exact = all(isinstance(v, (int, Fraction)) for v in values.values())
    for a, b, c in S.tuples(3):
        ab, bc = S.mul(a, b), S.mul(b, c)
        lhs = values[a, b] * values[ab, c]
        rhs = values[b, c] * values[a, bc]
        if exact:
            if lhs != rhs:
                return False
        elif abs(lhs - rhs) > tol * max(1.0, abs(lhs)):
            return False
    return True


# --- semigroup algebra ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    semigroup: SemigroupTable = field(repr=False)
    terms: Mapping[str, Number]

    def __post_init__(self):
        z = self.semigroup.zero
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if k != z and v != 0})

    def coeff(self, a: str):
        return self.terms.get(a, 0)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.semigroup, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.semigroup, {k: c * v for k, v in self.terms.items()})

    def close_to(self, other: "AlgebraElement", tol: float = 1e-12) -> bool:
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.coeff(k) - other.coeff(k)) <= tol * max(1.0, abs(self.coeff(k))) for k in keys)


def basis(S: SemigroupTable, a: str, c=1) -> AlgebraElement:
    return AlgebraElement(S, {a: c})


def star(t: Twist, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Twisted product, a*b = f(a, b) ab for ab != 0, extended bilinearly."""
    S = t.semigroup
    if not (S.same_as(u.semigroup) and S.same_as(v.semigroup)):
        raise SemigroupMismatch("operands live on a different semigroup")
    out: dict = {}
    for a, x in u.terms.items():
        for b, y in v.terms.items():
            ab = S.mul(a, b)
            if ab == S.zero:
                continue
            out[ab] = out.get(ab, 0) + t.value(a, b) * x * y
    return AlgebraElement(S, out)


def plain_product(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    return star(identity_twist(u.semigroup), u, v)


# --- triviality ---------------------------------------------------------------


@dataclass(frozen=True)
class TrivialityResult:
    trivial: bool
    g: Optional[Cochain] = None  # exponent of the 1-cochain, delta g = F

    def __str__(self):
        return "trivial" if self.trivial else "nontrivial"


def solve_mod_coboundary(F: Cochain, should_stop=None) -> Optional[Cochain]:
    """Some g with delta g = F modulo tau, or None.

    With phi = F / tau the question is whether phi lies in im(delta) + Z^m.
    If U delta V = diag(d) is the Smith form, that holds exactly when the
    rows of U phi past the rank are integers.
    """
    tau = F.coeffs.tau
    S = F.semigroup
    rows, rows_idx, cols = coboundary_matrix(S, F.degree - 1)
    phi = [F.values[t] / tau for t in rows_idx]
    if not cols:
        return None if any(x % 1 for x in phi) else make_cochain(S, F.degree - 1, {}, mod(tau), fill=0)
    dense = [[int(r.get(j, 0)) for j in range(len(cols))] for r in rows]
    U, D, _, Uinv = linalg.smith_normal_form(dense, should_stop)
    r = sum(1 for i in range(min(len(D), len(cols))) if D[i][i])
    Uphi = [sum((u * x for u, x in zip(Urow, phi) if u), Fraction(0)) for Urow in U]
    if any(y.denominator != 1 for y in Uphi[r:]):
        return None
    w = [0] * r + [int(y) for y in Uphi[r:]]
    z = [sum(a * b for a, b in zip(row, w) if a) for row in Uinv]
    x = linalg.solve(rows, [p - k for p, k in zip(phi, z)], len(cols), should_stop)
    assert x is not None
    return Cochain(S, F.degree - 1, mod(tau), {c: (xi * tau) % tau for c, xi in zip(cols, x)})


def triviality_check(t: Twist, should_stop=None) -> TrivialityResult:
    """Decide whether the twist is a multiplicative coboundary,
    f(a, b) = g(a) g(b) / g(ab), i.e. whether its exponent is delta g."""
    F = t.exponent
    if not all(isinstance(v, Fraction) for v in F.values.values()):
        raise IrrationalExponent("exponent values must be exact rationals")
    if t.mode == REAL:
        g = solve_coboundary(F.scale(t.hbar), should_stop)
        return TrivialityResult(g is not None, g)
    g = solve_mod_coboundary(F, should_stop)
    return TrivialityResult(g is not None, g)


def roundtrip_ok(t: Twist, result: TrivialityResult) -> bool:
    """delta g reproduces the twist exponent exactly."""
    if not result.trivial:
        return False
    dg = coboundary(result.g)
    if t.mode == REAL:
        return all(dg.values[k] == t.hbar * v for k, v in t.exponent.values.items())
    return all(dg.values[k] == v for k, v in t.exponent.values.items())


def restrict_twist(t: Twist, keep) -> Twist:
    sub = subsemigroup(t.semigroup, keep)
    F = make_cochain(sub, 2, {k: t.exponent.values[k] for k in sub.tuples(2)}, t.exponent.coeffs)
    return Twist(F, t.mode, hbar=t.hbar, tau=t.tau)


# --- quantum plane ------------------------------------------------------------


def quantum_plane_cocycle(S: SemigroupTable, n: int = 2, i: int = 0, j: int = 1) -> Cochain:
    """F(x^a, x^b) = (a_i b_j - a_j b_i) / 2 on a monomial semigroup."""
    vals = {}
    for u, v in S.tuples(2):
        a = monomial_exponent(S, u, n)
        b = monomial_exponent(S, v, n)
        vals[u, v] = Fraction(a[i] * b[j] - a[j] * b[i], 2)
    return make_cochain(S, 2, vals, RATIONALS)
