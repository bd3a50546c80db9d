"""Simplicial complexes, order complexes of posets and their rational Betti
numbers.  Serves as the independent check on semigroup cochain ranks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .cochains import cohomology_rank
from .errors import TooLarge
from .semigroup import Poset, make_poset, poset_semigroup

MAX_SIMPLICES = 20_000


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    simplices: frozenset  # of tuples sorted in vertex order

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def faces(self, k: int) -> list[tuple[str, ...]]:
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted((s for s in self.simplices if len(s) == k + 1), key=lambda s: [order[v] for v in s])

    def f_vector(self) -> list[int]:
        return [len(self.faces(k)) for k in range(self.dimension + 1)]


def complex_from_maximal(vertices: Sequence[str], maximal: Sequence[Sequence[str]]) -> SimplicialComplex:
    verts = tuple(dict.fromkeys(str(v) for v in vertices))
    order = {v: i for i, v in enumerate(verts)}
    simplices = set()
    for m in maximal:
        m = sorted(set(map(str, m)), key=order.__getitem__)
        for k in range(1, len(m) + 1):
            simplices.update(itertools.combinations(m, k))
    simplices.update((v,) for v in verts)
    return SimplicialComplex(verts, frozenset(simplices))


def nerve(p: Poset) -> SimplicialComplex:
    """Order complex: simplices are the strict chains i0 < i1 < ... < ik."""
    verts = p.elements
    up = {v: [w for w in verts if p.lt(v, w)] for v in verts}
    chains = set()

    def grow(chain):
        chains.add(chain)
        for w in up[chain[-1]]:
            grow(chain + (w,))

    for v in verts:
        grow((v,))
    return SimplicialComplex(verts, frozenset(chains))


def barycentric_subdivision(K: SimplicialComplex) -> Poset:
    """Face poset of K: nonempty simplices ordered by inclusion."""
    name = lambda s: "{" + ",".join(s) + "}"
    simplices = K.faces(0) + [s for k in range(1, K.dimension + 1) for s in K.faces(k)]
    sets = {s: frozenset(s) for s in simplices}
    rel = [(name(a), name(b)) for a in simplices for b in simplices if sets[a] <= sets[b]]
    return make_poset([name(s) for s in simplices], rel, close=False)


def coboundary_matrix(K: SimplicialComplex, k: int):
    """delta_k : C^k -> C^{k+1}, rows indexed by (k+1)-simplices."""
    src = {s: j for j, s in enumerate(K.faces(k))}
    rows = []
    for t in K.faces(k + 1):
        rows.append({src[t[:i] + t[i + 1:]]: Fraction((-1) ** i) for i in range(len(t))})
    return rows


def simplicial_cohomology_ranks(K: SimplicialComplex, max_degree: int) -> list[int]:
    if len(K.simplices) > MAX_SIMPLICES:
        raise TooLarge(f"{len(K.simplices)} simplices exceeds the guard")
    ranks = [linalg.rank(coboundary_matrix(K, k)) for k in range(max_degree + 1)]
    betti = []
    for k in range(max_degree + 1):
        nullity = len(K.faces(k)) - ranks[k]
        betti.append(nullity - (ranks[k - 1] if k else 0))
    return betti


@dataclass(frozen=True)
class ComparisonRow:
    degree: int
    semigroup_rank: int
    simplicial_rank: int

    @property
    def match(self) -> bool:
        return self.semigroup_rank == self.simplicial_rank


def compare_poset_cohomology(p: Poset, max_degree: int, cc0_zero: bool = False) -> list[ComparisonRow]:
    S = poset_semigroup(p)
    betti = simplicial_cohomology_ranks(nerve(p), max_degree)
    return [
        ComparisonRow(n, cohomology_rank(S, n, cc0_zero=cc0_zero).dim_H, betti[n])
        for n in range(max_degree + 1)
    ]


# --- standard complexes -----------------------------------------------------


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on vertices v0..vn (an (n-1)-sphere)."""
    verts = [f"v{i}" for i in range(n + 1)]
    return complex_from_maximal(verts, list(itertools.combinations(verts, n)))


def full_simplex(n: int) -> SimplicialComplex:
    verts = [f"v{i}" for i in range(n + 1)]
    return complex_from_maximal(verts, [verts])


def octahedron_boundary() -> SimplicialComplex:
    verts = ["px", "mx", "py", "my", "pz", "mz"]
    tris = [(a, b, c) for a in ("px", "mx") for b in ("py", "my") for c in ("pz", "mz")]
    return complex_from_maximal(verts, tris)


def face_poset(K: SimplicialComplex) -> Poset:
    return barycentric_subdivision(K)
