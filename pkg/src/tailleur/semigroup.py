"""Finite semigroups with zero, given by explicit multiplication tables.

Constructors cover matrix units, poset (incidence) semigroups, truncated
quiver path semigroups and truncated monomial semigroups.  Tables that carry
object structure record for each nonzero element its start and end object;
``a*b`` can only be nonzero when ``end(a) == start(b)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import (
    AssociativityViolation,
    Infinite,
    InvalidPoset,
    InvalidQuiver,
    InvalidTable,
    ZeroNotAbsorbing,
)

ZERO = "0"


@dataclass(frozen=True, eq=False)
class SemigroupTable:
    elements: tuple[str, ...]
    zero: str
    product: Mapping[tuple[str, str], str] = field(repr=False)
    objects: Optional[tuple[str, ...]] = None
    start: Optional[Mapping[str, str]] = field(default=None, repr=False)
    end: Optional[Mapping[str, str]] = field(default=None, repr=False)
    _tuples: dict = field(default_factory=dict, repr=False, compare=False)

    def same_as(self, other: "SemigroupTable") -> bool:
        return self is other or (
            self.elements == other.elements
            and self.zero == other.zero
            and dict(self.product) == dict(other.product)
        )

    def tuples(self, n: int) -> list[tuple[str, ...]]:
        """Cached :func:`composable_tuples`."""
        if n not in self._tuples:
            self._tuples[n] = composable_tuples(self, n)
        return self._tuples[n]

    @property
    def nonzero(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if e != self.zero)

    @property
    def has_objects(self) -> bool:
        return bool(self.objects)

    def mul(self, a: str, b: str) -> str:
        return self.product[a, b]

    def prod(self, seq: Sequence[str]) -> str:
        out = seq[0]
        for x in seq[1:]:
            out = self.product[out, x]
            if out == self.zero:
                break
        return out

    def __len__(self) -> int:
        return len(self.elements)

    def is_subsemigroup(self, subset) -> bool:
        sub = set(subset) | {self.zero}
        return all(self.product[a, b] in sub for a in sub for b in sub)


def build_from_table(
    elements: Sequence[str],
    zero: str,
    product_map: Mapping[tuple[str, str], str],
    objects: Optional[Sequence[str]] = None,
    start: Optional[Mapping[str, str]] = None,
    end: Optional[Mapping[str, str]] = None,
) -> SemigroupTable:
    """Validate a multiplication table and wrap it.

    Elements are put in lexicographic order.  Associativity and absorption
    of zero are checked exhaustively.
    """
    elems = tuple(sorted(set(elements)))
    if len(elems) != len(elements):
        raise InvalidTable("duplicate element identifiers")
    if zero not in elems:
        raise InvalidTable(f"zero {zero!r} is not an element")
    prod = {}
    for a in elems:
        for b in elems:
            try:
                c = product_map[a, b]
            except KeyError:
                raise InvalidTable(f"product {a}*{b} missing") from None
            if c not in elems:
                raise InvalidTable(f"product {a}*{b} = {c!r} is not an element")
            prod[a, b] = c
    for a in elems:
        if prod[zero, a] != zero or prod[a, zero] != zero:
            raise ZeroNotAbsorbing(a)
    for a in elems:
        for b in elems:
            ab = prod[a, b]
            for c in elems:
                if prod[ab, c] != prod[a, prod[b, c]]:
                    raise AssociativityViolation(a, b, c)
    S = SemigroupTable(elems, zero, prod)
    if objects:
        S = _attach_objects(S, objects, start, end)
    return S


def _attach_objects(S: SemigroupTable, objects, start, end) -> SemigroupTable:
    objs = tuple(sorted(objects))
    nz = S.nonzero
    if start is None or end is None:
        raise InvalidTable("objects given without start/end maps")
    for o in objs:
        if o not in nz:
            raise InvalidTable(f"object {o!r} is not a nonzero element")
        if S.mul(o, o) != o or start.get(o) != o or end.get(o) != o:
            raise InvalidTable(f"object {o!r} is not an idempotent at itself")
    for a in nz:
        if start.get(a) not in objs or end.get(a) not in objs:
            raise InvalidTable(f"element {a!r} lacks start/end objects")
    for a in nz:
        for b in nz:
            ab = S.mul(a, b)
            if ab == S.zero:
                continue
            if end[a] != start[b]:
                raise InvalidTable(f"{a}*{b} != 0 although end({a}) != start({b})")
            if start[ab] != start[a] or end[ab] != end[b]:
                raise InvalidTable(f"start/end not compatible with {a}*{b}")
    return SemigroupTable(
        S.elements, S.zero, S.product, objs,
        {a: start[a] for a in nz}, {a: end[a] for a in nz},
    )


def _object_table(elements, zero, compose, start, end, objects):
    """Table for a category-like semigroup: product via ``compose`` when
    end(a) == start(b); ``compose`` may itself return zero (truncation)."""
    prod = {}
    for a in elements:
        for b in elements:
            if a == zero or b == zero or end[a] != start[b]:
                prod[a, b] = zero
            else:
                prod[a, b] = compose(a, b)
    return build_from_table(elements, zero, prod, objects, start, end)


# --- constructors -----------------------------------------------------------


def matrix_units(n: int) -> SemigroupTable:
    """Semigroup {e_ij} of n x n matrix units with zero."""
    names = {(i, j): f"e{i}{j}" if n < 10 else f"e{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)}
    inv = {v: k for k, v in names.items()}
    elements = [ZERO, *names.values()]
    start = {v: names[k[0], k[0]] for k, v in names.items()}
    end = {v: names[k[1], k[1]] for k, v in names.items()}
    objects = [names[i, i] for i in range(1, n + 1)]
    return _object_table(
        elements, ZERO, lambda a, b: names[inv[a][0], inv[b][1]], start, end, objects
    )


@dataclass(frozen=True)
class Poset:
    elements: tuple[str, ...]
    relation: frozenset  # pairs (i, j) meaning i <= j

    def leq(self, i: str, j: str) -> bool:
        return (i, j) in self.relation

    def lt(self, i: str, j: str) -> bool:
        return i != j and (i, j) in self.relation


def make_poset(elements: Sequence[str], relations: Sequence[tuple[str, str]], close: bool = True) -> Poset:
    """Poset from generating relations.

    With ``close`` the reflexive-transitive closure is taken; otherwise the
    given relation must already be a partial order.
    """
    elems = tuple(dict.fromkeys(str(e) for e in elements))
    es = set(elems)
    rel = set()
    for i, j in relations:
        if i not in es or j not in es:
            raise InvalidPoset(f"relation ({i}, {j}) mentions unknown element")
        rel.add((i, j))
    if close:
        rel |= {(e, e) for e in elems}
        succ = {e: {j for i, j in rel if i == e} for e in elems}
        changed = True
        while changed:
            changed = False
            for e in elems:
                new = set().union(*(succ[j] for j in succ[e])) - succ[e]
                if new:
                    succ[e] |= new
                    changed = True
        rel = {(i, j) for i in elems for j in succ[i]}
    else:
        if any((e, e) not in rel for e in elems):
            raise InvalidPoset("relation is not reflexive")
        for (i, j) in rel:
            for (k, l) in rel:
                if j == k and (i, l) not in rel:
                    raise InvalidPoset(f"relation not transitive at ({i}, {j}), ({k}, {l})")
    for (i, j) in rel:
        if i != j and (j, i) in rel:
            raise InvalidPoset(f"relation not antisymmetric at ({i}, {j})")
    return Poset(elems, frozenset(rel))


def _pair_name(i: str, j: str) -> str:
    return f"e[{i},{j}]"


def poset_semigroup(p: Poset) -> SemigroupTable:
    """Incidence semigroup {e_ij : i <= j} with zero."""
    pairs = {_pair_name(i, j): (i, j) for (i, j) in p.relation}
    elements = [ZERO, *pairs]
    start = {n: _pair_name(i, i) for n, (i, j) in pairs.items()}
    end = {n: _pair_name(j, j) for n, (i, j) in pairs.items()}
    objects = [_pair_name(e, e) for e in p.elements]
    return _object_table(
        elements, ZERO, lambda a, b: _pair_name(pairs[a][0], pairs[b][1]), start, end, objects
    )


def _object_label(obj: str) -> str:
    inner = obj[2:-1]  # "i,i"
    return inner[: (len(inner) - 1) // 2]


def poset_pair(S: SemigroupTable, a: str) -> tuple[str, str]:
    """The pair (i, j) behind the element e[i,j] of :func:`poset_semigroup`."""
    return _object_label(S.start[a]), _object_label(S.end[a])


@dataclass(frozen=True)
class Quiver:
    nodes: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (label, from, to)
    max_len: Optional[int] = None


def make_quiver(nodes, arrows, max_len=None) -> Quiver:
    nodes = tuple(str(n) for n in nodes)
    arrows = tuple((str(l), str(s), str(t)) for l, s, t in arrows)
    labels = [a[0] for a in arrows]
    if len(set(labels)) != len(labels):
        raise InvalidQuiver("arrow labels must be unique")
    if set(labels) & set(nodes):
        raise InvalidQuiver("arrow labels must differ from node names")
    for l, s, t in arrows:
        if s not in nodes or t not in nodes:
            raise InvalidQuiver(f"arrow {l} has an unknown endpoint")
    if max_len is not None and max_len < 1:
        raise InvalidQuiver("max_len must be a positive integer")
    q = Quiver(nodes, arrows, max_len)
    if max_len is None and _has_cycle(q):
        raise Infinite("cyclic quiver has infinitely many paths; give max_len")
    return q


def _has_cycle(q: Quiver) -> bool:
    adj = {n: [t for _, s, t in q.arrows if s == n] for n in q.nodes}
    state = {}

    def visit(n):
        state[n] = 1
        for m in adj[n]:
            if state.get(m) == 1 or (m not in state and visit(m)):
                return True
        state[n] = 2
        return False

    return any(n not in state and visit(n) for n in q.nodes)


def quiver_paths(q: Quiver) -> list[tuple[str, str, tuple[str, ...]]]:
    """All paths (start, end, arrow labels) of length <= max_len."""
    paths = [(n, n, ()) for n in q.nodes]
    frontier = [p for p in paths]
    length = 0
    while frontier and (q.max_len is None or length < q.max_len):
        nxt = []
        for s, t, word in frontier:
            for l, a, b in q.arrows:
                if a == t:
                    nxt.append((s, b, word + (l,)))
        paths.extend(nxt)
        frontier = nxt
        length += 1
    return paths


def _word_name(s: str, word: tuple[str, ...]) -> str:
    return f"e_{s}" if not word else ".".join(word)


def quiver_path_semigroup(q: Quiver) -> SemigroupTable:
    """Path semigroup: concatenation of composable paths, zero otherwise.

    Paths are written left to right (``a.b`` is ``a`` followed by ``b``);
    composable products longer than ``max_len`` are sent to zero.
    """
    if q.max_len is None and _has_cycle(q):
        raise Infinite("cyclic quiver has infinitely many paths; give max_len")
    paths = quiver_paths(q)
    info = {_word_name(s, w): (s, t, w) for s, t, w in paths}
    start = {n: _word_name(s, ()) for n, (s, t, w) in info.items()}
    end = {n: _word_name(t, ()) for n, (s, t, w) in info.items()}
    objects = [_word_name(n, ()) for n in q.nodes]

    def compose(a, b):
        s, _, w1 = info[a]
        _, t, w2 = info[b]
        w = w1 + w2
        if q.max_len is not None and len(w) > q.max_len:
            return ZERO
        return _word_name(s, w)

    return _object_table([ZERO, *info], ZERO, compose, start, end, objects)


def monomial_name(exps: Sequence[int], var_names: Sequence[str]) -> str:
    parts = []
    for v, e in zip(var_names, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def default_var_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i}" for i in range(1, n + 1)]


def monomial_exponents(n: int, D: int) -> list[tuple[int, ...]]:
    return [e for d in range(D + 1) for e in _compositions(d, n)]


def _compositions(d: int, n: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first, *rest)


def monomial_semigroup(n: int, D: int, var_names: Optional[Sequence[str]] = None) -> SemigroupTable:
    """Commutative monomials of total degree <= D with zero; overflow -> 0.

    The unit monomial ``1`` is the single object.
    """
    if n < 1 or D < 1:
        raise InvalidTable("need n >= 1 and D >= 1")
    names = list(var_names) if var_names else default_var_names(n)
    exps = monomial_exponents(n, D)
    by_exp = {e: monomial_name(e, names) for e in exps}
    inv = {v: k for k, v in by_exp.items()}
    prod = {}
    elements = [ZERO, *by_exp.values()]
    for a in elements:
        for b in elements:
            if a == ZERO or b == ZERO:
                prod[a, b] = ZERO
                continue
            e = tuple(x + y for x, y in zip(inv[a], inv[b]))
            prod[a, b] = by_exp.get(e, ZERO)
    unit = by_exp[(0,) * n]
    nz = list(by_exp.values())
    return build_from_table(elements, ZERO, prod, [unit], {a: unit for a in nz}, {a: unit for a in nz})


def monomial_exponent(S: SemigroupTable, name: str, n: int, var_names=None) -> tuple[int, ...]:
    names = list(var_names) if var_names else default_var_names(n)
    exps = [0] * n
    if name == "1":
        return tuple(exps)
    for part in name.split("*"):
        v, _, e = part.partition("^")
        exps[names.index(v)] = int(e) if e else 1
    return tuple(exps)


def null_semigroup(names: Sequence[str]) -> SemigroupTable:
    """Every product is zero; no objects."""
    elements = [ZERO, *names]
    return build_from_table(elements, ZERO, {(a, b): ZERO for a in elements for b in elements})


def subsemigroup(S: SemigroupTable, keep: Sequence[str]) -> SemigroupTable:
    """Restriction of S to a product-closed subset (zero added).

    Object structure is kept when every start/end object of a kept element
    is kept too; otherwise the result is a plain semigroup.
    """
    from .errors import NotClosed

    sub = set(keep) | {S.zero}
    if not S.is_subsemigroup(sub):
        raise NotClosed("subset is not closed under the product")
    prod = {(a, b): S.mul(a, b) for a in sub for b in sub}
    elems = sorted(sub)
    if S.has_objects:
        nz = [a for a in elems if a != S.zero]
        objs = [o for o in S.objects if o in sub]
        if objs and all(S.start[a] in sub and S.end[a] in sub for a in nz):
            return build_from_table(elems, S.zero, prod, objs, S.start, S.end)
    return build_from_table(elems, S.zero, prod)


# --- tuples -----------------------------------------------------------------


def composable_tuples(S: SemigroupTable, n: int) -> list[tuple[str, ...]]:
    """All n-tuples of nonzero elements with nonzero product, lexicographic."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nz = S.nonzero
    z = S.zero
    level = [((a,), a) for a in nz]
    for _ in range(n - 1):
        nxt = []
        for t, p in level:
            for b in nz:
                q = S.product[p, b]
                if q != z:
                    nxt.append((t + (b,), q))
        level = nxt
    return [t for t, _ in level]


def check_associative(S: SemigroupTable) -> bool:
    e = S.elements
    return all(
        S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c)) for a, b, c in itertools.product(e, repeat=3)
    )
