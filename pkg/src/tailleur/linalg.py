"""Exact linear algebra over Q and Z.

Rational matrices are handled as sparse rows (``dict`` column -> ``Fraction``),
which keeps coboundary matrices of incidence type cheap to reduce.  Integer
matrices for the Smith normal form are dense lists of Python ints.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional

SparseRow = dict  # column index -> Fraction


def _check(should_stop: Optional[Callable[[], bool]]) -> None:
    if should_stop is not None and should_stop():
        from .errors import Cancelled

        raise Cancelled("computation cancelled by caller")


def echelon(rows: Iterable[SparseRow], should_stop=None) -> dict[int, SparseRow]:
    """Row-reduce to echelon form.

    Returns a map pivot column -> row, each row normalized so the pivot entry
    is 1 and every other entry sits in a column greater than the pivot.
    Input rows are not modified.
    """
    pivots: dict[int, SparseRow] = {}
    for k, raw in enumerate(rows):
        if k % 64 == 0:
            _check(should_stop)
        row = {c: Fraction(v) for c, v in raw.items() if v != 0}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / row[c]
                pivots[c] = {j: v * inv for j, v in row.items()}
                break
            f = row[c]
            for j, v in piv.items():
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return pivots


def rref(rows: Iterable[SparseRow], should_stop=None) -> dict[int, SparseRow]:
    """Reduced row echelon form as a map pivot column -> row."""
    piv = echelon(rows, should_stop)
    cols = sorted(piv, reverse=True)
    for i, c in enumerate(cols):
        row = piv[c]
        # clear entries of this row in the pivot columns to its right
        for c2 in cols[:i][::-1]:
            f = row.get(c2)
            if f:
                for j, v in piv[c2].items():
                    nv = row.get(j, 0) - f * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
    return piv


def rank(rows: Iterable[SparseRow], should_stop=None) -> int:
    return len(echelon(rows, should_stop))


def nullspace(rows: Iterable[SparseRow], ncols: int) -> list[SparseRow]:
    """Basis of the right kernel, one vector per free column."""
    piv = rref(rows)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = {f: Fraction(1)}
        for p, row in piv.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def solve(rows: list[SparseRow], rhs: list, ncols: int, should_stop=None) -> Optional[list[Fraction]]:
    """One solution of ``A x = rhs`` (free variables set to 0), or None."""
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = Fraction(b)
        aug.append(r)
    piv = rref(aug, should_stop)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for p, row in piv.items():
        x[p] = row.get(ncols, Fraction(0))
    return x


def to_sparse(dense: list[list]) -> list[SparseRow]:
    return [{j: Fraction(v) for j, v in enumerate(r) if v} for r in dense]


def mat_vec(rows: list[SparseRow], x: list) -> list:
    return [sum((v * x[j] for j, v in r.items()), Fraction(0)) for r in rows]


# --- integers -------------------------------------------------------------


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: list[list[int]], should_stop=None):
    """Smith normal form with unimodular transforms.

    Returns ``(U, S, V, Uinv)`` with ``U @ A @ V == S``, ``S`` diagonal with
    nonnegative entries d_1 | d_2 | ... and ``Uinv`` the inverse of ``U``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(map(int, r)) for r in A]
    U = _identity(m)
    Uinv = _identity(m)
    V = _identity(n)

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(dst, src, q):  # R_dst += q R_src
        if not q:
            return
        rs, rd = S[src], S[dst]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        us, ud = U[src], U[dst]
        for k in range(m):
            if us[k]:
                ud[k] += q * us[k]
        for r in Uinv:  # C_src -= q C_dst
            if r[dst]:
                r[src] -= q * r[dst]

    def col_swap(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def col_add(dst, src, q):  # C_dst += q C_src
        if not q:
            return
        for r in S:
            if r[src]:
                r[dst] += q * r[src]
        for r in V:
            if r[src]:
                r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        _check(should_stop)
        # smallest nonzero entry of the trailing block as pivot
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        row_swap(t, i)
        col_swap(t, j)
        while True:
            p = S[t][t]
            done = True
            for i in range(t + 1, m):
                if S[i][t]:
                    row_add(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        done = False
            for j in range(t + 1, n):
                if S[t][j]:
                    col_add(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        done = False
            if not done:
                # move the smallest remainder into the pivot slot and repeat
                bi = min((i for i in range(t + 1, m) if S[i][t]), key=lambda i: abs(S[i][t]), default=None)
                bj = min((j for j in range(t + 1, n) if S[t][j]), key=lambda j: abs(S[t][j]), default=None)
                cand_r = abs(S[bi][t]) if bi is not None else None
                cand_c = abs(S[t][bj]) if bj is not None else None
                if cand_c is None or (cand_r is not None and cand_r <= cand_c):
                    row_swap(t, bi)
                else:
                    col_swap(t, bj)
                continue
            # divisibility: pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
            for r in Uinv:
                r[t] = -r[t]
        t += 1
    return U, S, V, Uinv


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(r, c)) for c in Bt] for r in A]
