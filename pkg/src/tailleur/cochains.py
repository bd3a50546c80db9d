"""Additive cochains of a semigroup with zero.

An n-cochain (n >= 1) is a function on the composable n-tuples, those whose
product is nonzero.  Degree-0 cochains are functions on the objects, with
coboundary ``g(end a) - g(start a)``; a semigroup without objects has no
nonzero 0-cochains.  Values are exact ``Fraction``s, optionally reduced
modulo a positive rational ``tau``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional

from . import linalg
from .errors import (
    CoefficientMismatch,
    Degree0WithoutObjects,
    IndexOutOfRange,
    MalformedCochain,
    NonpositiveTau,
    SemigroupMismatch,
    TooLarge,
)
from .semigroup import SemigroupTable

MAX_UNKNOWNS = 20_000


@dataclass(frozen=True)
class CoefficientGroup:
    """Q when ``tau`` is None, otherwise Q / tau Z."""

    tau: Optional[Fraction] = None

    def __post_init__(self):
        if self.tau is not None:
            t = Fraction(self.tau)
            if t <= 0:
                raise NonpositiveTau(f"tau must be positive, got {t}")
            object.__setattr__(self, "tau", t)

    @property
    def is_mod(self) -> bool:
        return self.tau is not None

    def canon(self, x) -> Fraction:
        x = Fraction(x)
        return x % self.tau if self.tau is not None else x

    def is_zero(self, x) -> bool:
        return self.canon(x) == 0


RATIONALS = CoefficientGroup()


def mod(tau) -> CoefficientGroup:
    return CoefficientGroup(Fraction(tau))


def domain(S: SemigroupTable, n: int) -> list[tuple[str, ...]]:
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return [(o,) for o in (S.objects or ())]
    return S.tuples(n)


@dataclass(frozen=True, eq=False)
class Cochain:
    semigroup: SemigroupTable = field(repr=False)
    degree: int
    coeffs: CoefficientGroup
    values: Mapping[tuple[str, ...], Fraction] = field(repr=False)

    def __call__(self, *args: str) -> Fraction:
        return self.values[tuple(args)]

    def items(self):
        return self.values.items()

    def _check_same(self, other: "Cochain"):
        if not self.semigroup.same_as(other.semigroup):
            raise SemigroupMismatch("cochains live on different semigroups")
        if self.degree != other.degree:
            raise MalformedCochain("degree mismatch")
        if self.coeffs != other.coeffs:
            raise CoefficientMismatch("coefficient groups differ")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_same(other)
        return self._new({k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_same(other)
        return self._new({k: v - other.values[k] for k, v in self.values.items()})

    def __neg__(self) -> "Cochain":
        return self._new({k: -v for k, v in self.values.items()})

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return self._new({k: c * v for k, v in self.values.items()})

    def _new(self, values) -> "Cochain":
        g = self.coeffs
        return Cochain(self.semigroup, self.degree, g, {k: g.canon(v) for k, v in values.items()})

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def equals(self, other: "Cochain") -> bool:
        self._check_same(other)
        return all(v == other.values[k] for k, v in self.values.items())


def make_cochain(
    S: SemigroupTable,
    n: int,
    values: Mapping[tuple[str, ...], object],
    coeffs: CoefficientGroup = RATIONALS,
    fill=None,
) -> Cochain:
    """Cochain from explicit values; missing tuples get ``fill`` if given."""
    dom = domain(S, n)
    keys = set(dom)
    vals = {}
    for k, v in values.items():
        k = tuple(k)
        if k not in keys:
            raise MalformedCochain(f"{k} is not a composable {n}-tuple")
        vals[k] = coeffs.canon(v)
    missing = [k for k in dom if k not in vals]
    if missing:
        if fill is None:
            raise MalformedCochain(f"no value for {missing[0]}")
        for k in missing:
            vals[k] = coeffs.canon(fill)
    return Cochain(S, n, coeffs, {k: vals[k] for k in dom})


def from_function(S: SemigroupTable, n: int, fn: Callable, coeffs: CoefficientGroup = RATIONALS) -> Cochain:
    return Cochain(S, n, coeffs, {t: coeffs.canon(fn(*t)) for t in domain(S, n)})


def zero_cochain(S: SemigroupTable, n: int, coeffs: CoefficientGroup = RATIONALS) -> Cochain:
    return from_function(S, n, lambda *a: 0, coeffs)


def constant_cochain(S: SemigroupTable, n: int, c, coeffs: CoefficientGroup = RATIONALS) -> Cochain:
    return from_function(S, n, lambda *a: c, coeffs)


# --- coboundary -------------------------------------------------------------


def coboundary_terms(S: SemigroupTable, t: tuple[str, ...]) -> list[tuple[tuple[str, ...], int]]:
    """Signed arguments of the coboundary evaluated at the (n+1)-tuple ``t``.

    For n = len(t) - 1 >= 1 these are n-tuples; for len(t) == 1 they are the
    object 1-tuples (end, +1) and (start, -1).
    """
    m = len(t)
    if m == 1:
        a = t[0]
        return [((S.end[a],), 1), ((S.start[a],), -1)]
    terms = [(t[1:], 1)]
    for i in range(1, m):
        terms.append((t[: i - 1] + (S.mul(t[i - 1], t[i]),) + t[i + 1 :], -1 if i % 2 else 1))
    terms.append((t[:-1], -1 if m % 2 else 1))
    return terms


def coboundary(F: Cochain) -> Cochain:
    S = F.semigroup
    n = F.degree
    if n == 0 and not S.has_objects:
        raise Degree0WithoutObjects("degree-0 coboundary needs object structure")
    out = {}
    for t in domain(S, n + 1):
        out[t] = F.coeffs.canon(sum((s * F.values[a] for a, s in coboundary_terms(S, t)), Fraction(0)))
    return Cochain(S, n + 1, F.coeffs, out)


def is_cocycle(F: Cochain) -> bool:
    if F.degree == 0 and not F.semigroup.has_objects:
        return True
    return coboundary(F).is_zero()


def coboundary_matrix(S: SemigroupTable, n: int, cc0_zero: bool = False):
    """Sparse matrix of delta_n : C^n -> C^{n+1} (rows: (n+1)-tuples)."""
    cols = domain(S, n)
    rows_idx = domain(S, n + 1)
    if n == 0 and (cc0_zero or not S.has_objects):
        return [{} for _ in rows_idx], rows_idx, []
    index = {c: j for j, c in enumerate(cols)}
    rows = []
    for t in rows_idx:
        r: dict[int, int] = {}
        for a, s in coboundary_terms(S, t):
            j = index[a]
            r[j] = r.get(j, 0) + s
        rows.append({j: Fraction(v) for j, v in r.items() if v})
    return rows, rows_idx, cols


# --- products ---------------------------------------------------------------


def _need_ring(*cs: Cochain):
    for c in cs:
        if c.coeffs.is_mod:
            raise CoefficientMismatch("products need rational coefficients")
    S = cs[0].semigroup
    for c in cs[1:]:
        if not S.same_as(c.semigroup):
            raise SemigroupMismatch("cochains live on different semigroups")


def _eval_at(F: Cochain, args: tuple[str, ...], first: bool) -> Fraction:
    # degree-0 cochains are read at the start (front) or end (back) object
    if F.degree == 0:
        S = F.semigroup
        if not S.has_objects:
            return Fraction(0)
        return F.values[(S.start[args[0]],) if first else (S.end[args[-1]],)]
    return F.values[args]


def cup(F: Cochain, G: Cochain) -> Cochain:
    _need_ring(F, G)
    S = F.semigroup
    m, n = F.degree, G.degree
    if m + n == 0:
        return Cochain(S, 0, RATIONALS, {k: v * G.values[k] for k, v in F.values.items()})
    out = {}
    for t in domain(S, m + n):
        f = _eval_at(F, t[:m] if m else t, first=True)
        g = _eval_at(G, t[m:] if n else t, first=False)
        out[t] = f * g
    return Cochain(S, m + n, RATIONALS, out)


def comp_i(F: Cochain, G: Cochain, i: int) -> Cochain:
    """Composition product: F with the block a_i..a_{i+n-1} contracted to its
    product, times G on that block."""
    _need_ring(F, G)
    S = F.semigroup
    m, n = F.degree, G.degree
    if m < 1 or n < 1:
        raise IndexOutOfRange("composition needs degrees >= 1")
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"i must lie in 1..{m}, got {i}")
    out = {}
    for t in domain(S, m + n - 1):
        block = t[i - 1 : i - 1 + n]
        out[t] = F.values[t[: i - 1] + (S.prod(block),) + t[i - 1 + n :]] * G.values[block]
    return Cochain(S, m + n - 1, RATIONALS, out)


def pre_lie(F: Cochain, G: Cochain) -> Cochain:
    """Signed sum of the composition products, sum_i (-1)^((i-1)(n-1)) F o_i G."""
    n = G.degree
    terms = [comp_i(F, G, i) for i in range(1, F.degree + 1)]
    out = terms[0].scale((-1) ** 0)
    for i, c in enumerate(terms[1:], start=2):
        out = out + c.scale((-1) ** ((i - 1) * (n - 1)))
    return out


def bracket(F: Cochain, G: Cochain) -> Cochain:
    """Graded commutator of :func:`pre_lie`."""
    sign = (-1) ** ((F.degree - 1) * (G.degree - 1))
    return pre_lie(F, G) - pre_lie(G, F).scale(sign)


def reduce_mod(F: Cochain, tau) -> Cochain:
    if F.coeffs.is_mod:
        raise CoefficientMismatch("cochain is already reduced")
    g = mod(tau)
    return Cochain(F.semigroup, F.degree, g, {k: g.canon(v) for k, v in F.values.items()})


# --- cohomology -------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyRank:
    degree: int
    dim_Z: int
    dim_B: int

    @property
    def dim_H(self) -> int:
        return self.dim_Z - self.dim_B


def cohomology_rank(
    S: SemigroupTable,
    n: int,
    cc0_zero: bool = False,
    max_unknowns: int = MAX_UNKNOWNS,
    should_stop=None,
) -> CohomologyRank:
    """Ranks of cocycles, coboundaries and cohomology in degree n over Q.

    ``cc0_zero`` switches to the convention with no 0-cochains at all.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    dim_C = len(domain(S, n)) if not (n == 0 and cc0_zero) else 0
    if dim_C > max_unknowns or len(domain(S, n + 1)) > 4 * max_unknowns:
        raise TooLarge(f"degree {n}: {dim_C} unknowns exceeds the dense-elimination guard")
    rows, _, _ = coboundary_matrix(S, n, cc0_zero)
    dim_Z = dim_C - linalg.rank(rows, should_stop)
    if n == 0:
        return CohomologyRank(0, dim_Z, 0)
    prev, _, _ = coboundary_matrix(S, n - 1, cc0_zero)
    return CohomologyRank(n, dim_Z, linalg.rank(prev, should_stop))


def solve_coboundary(F: Cochain, should_stop=None) -> Optional[Cochain]:
    """Some (n-1)-cochain g with delta g = F over Q, or None."""
    S = F.semigroup
    if F.coeffs.is_mod:
        raise CoefficientMismatch("use twists.solve_mod_coboundary for mod-tau values")
    rows, rows_idx, cols = coboundary_matrix(S, F.degree - 1)
    rhs = [F.values[t] for t in rows_idx]
    x = linalg.solve(rows, rhs, len(cols), should_stop)
    if x is None:
        return None
    return Cochain(S, F.degree - 1, RATIONALS, dict(zip(cols, x)))
