"""Exact integer linear algebra for the complete-intersection test.

Everything here runs on arbitrary-precision Python ints, so there is no
overflow to signal.  The Smith normal form uses the pivot rule "smallest
nonzero absolute value, ties broken row-major".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .clutter import Clutter, incidence, uniformity


def _to_int_rows(M) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def rank_rational(M) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    A = _to_int_rows(M)
    if not A or not A[0]:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                A[i][j] = (A[i][j] * A[r][c] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
    return r


@dataclass
class SnfResult:
    invariant_factors: list[int]
    rank: int
    shape: tuple[int, int]
    U: list[list[int]] | None = None  # M = U @ D @ V when transforms kept
    V: list[list[int]] | None = None

    def diagonal(self) -> list[list[int]]:
        m, n = self.shape
        D = [[0] * n for _ in range(m)]
        for i, d in enumerate(self.invariant_factors):
            D[i][i] = d
        return D


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, keep_transforms: bool = False) -> SnfResult:
    """Smith normal form with positive invariant factors d1 | d2 | ...

    When keep_transforms is set, unimodular U, V with M = U @ D @ V are
    returned alongside the factors.
    """
    D = _to_int_rows(M)
    m = len(D)
    n = len(D[0]) if D else 0
    U = _identity(m) if keep_transforms else None
    V = _identity(n) if keep_transforms else None

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        if U is not None:
            for r in range(m):
                U[r][i], U[r][j] = U[r][j], U[r][i]

    def swap_cols(i, j):
        for r in range(m):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        if V is not None:
            V[i], V[j] = V[j], V[i]

    def add_row(src, dst, factor):
        # row_dst += factor * row_src; U gets the inverse column op
        for c in range(n):
            D[dst][c] += factor * D[src][c]
        if U is not None:
            for r in range(m):
                U[r][src] -= factor * U[r][dst]

    def add_col(src, dst, factor):
        for r in range(m):
            D[r][dst] += factor * D[r][src]
        if V is not None:
            for c in range(n):
                V[src][c] -= factor * V[dst][c]

    def negate_row(i):
        for c in range(n):
            D[i][c] = -D[i][c]
        if U is not None:
            for r in range(m):
                U[r][i] = -U[r][i]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    t = 0
    while t < min(m, n):
        found = find_pivot(t)
        if found is None:
            break
        _, pi, pj = found
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        # clear row and column t; pivot re-selection keeps entries shrinking
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    qt = D[i][t] // D[t][t]
                    add_row(t, i, -qt)
                    if D[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    qt = D[t][j] // D[t][t]
                    add_col(t, j, -qt)
                    if D[t][j]:
                        swap_cols(t, j)
                        dirty = True
        if D[t][t] < 0:
            negate_row(t)
        # divisibility: pull a bad entry into column t and redo
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1

    factors = [D[i][i] for i in range(min(m, n)) if D[i][i] != 0]
    return SnfResult(
        invariant_factors=factors,
        rank=len(factors),
        shape=(m, n),
        U=U,
        V=V,
    )


def multiplication_injective(relation_rows, factor: int) -> bool:
    """Is multiplication by ``factor`` injective on Z^n / L, where L is the
    lattice spanned by the given integer rows?"""
    if factor == 0:
        raise ValueError("factor must be nonzero")
    rows = _to_int_rows(relation_rows)
    if not rows:
        return True
    snf = smith_normal_form(rows)
    return all(gcd(factor, d) == 1 for d in snf.invariant_factors)


def phi_injective(C: Clutter, q: int) -> bool:
    """Injectivity of multiplication by q-1 on Z^n / Z{v_i - v_1}."""
    if q < 3:
        raise ValueError("need q >= 3")
    vecs = C.vectors
    rows = [
        [vi - v1 for vi, v1 in zip(vecs[i], vecs[0])] for i in range(1, len(vecs))
    ]
    return multiplication_injective(rows, q - 1)


@dataclass
class CiReport:
    applicable: bool
    is_ci: bool | None
    vectors_independent: bool | None
    phi_injective: bool | None
    reason: str


def ci_classify(C: Clutter, q: int) -> CiReport:
    """Complete-intersection classification for uniform clutters, q >= 3.

    For non-uniform clutters the algebraic test is out of scope and the
    report says so (applicable = False).
    """
    if q < 3:
        raise ValueError("need q >= 3")
    uniform, _ = uniformity(C)
    if not uniform:
        return CiReport(
            applicable=False,
            is_ci=None,
            vectors_independent=None,
            phi_injective=None,
            reason="clutter is not uniform; algebraic CI test not applicable",
        )
    A = incidence(C).A
    independent = rank_rational(A.T.tolist()) == C.s
    if not independent:
        return CiReport(
            applicable=True,
            is_ci=False,
            vectors_independent=False,
            phi_injective=None,
            reason="characteristic vectors are linearly dependent",
        )
    injective = phi_injective(C, q)
    if not injective:
        return CiReport(
            applicable=True,
            is_ci=False,
            vectors_independent=True,
            phi_injective=False,
            reason="multiplication by q-1 has a kernel on Z^n/L (torsion shares a factor with q-1)",
        )
    return CiReport(
        applicable=True,
        is_ci=True,
        vectors_independent=True,
        phi_injective=True,
        reason="vectors independent and multiplication by q-1 injective: X is the projective torus",
    )
