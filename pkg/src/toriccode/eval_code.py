"""Evaluation codes C_X(d) and the Hilbert data of the point set X.

Degree-d forms are evaluated at the canonical representatives of X; since
those have first coordinate 1, plain evaluation already agrees with the
normalization by t1^d.  The generator matrix is the reduced row echelon
form of the evaluation matrix, so dim C_X(d) equals the Hilbert function
H_X(d) by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import _linalg
from .finite_field import FiniteField
from .toric_set import ToricSet


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"t{i + 1}")
            elif e > 1:
                parts.append(f"t{i + 1}^{e}")
        return "*".join(parts) if parts else "1"


def exponent_matrix(s: int, d: int) -> np.ndarray:
    """Exponent vectors of all degree-d monomials in s variables, as rows,
    in descending reverse-lexicographic order (t1^d first, ts^d last)."""
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    if d == 0:
        return np.zeros((1, s), dtype=np.int64)
    rows = []
    # stars and bars: bar positions inside d + s - 1 slots
    for bars in combinations(range(d + s - 1), s - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + s - 1 - prev - 1)
        rows.append(tuple(e))
    rows.sort(key=lambda e: tuple(reversed(e)))
    return np.array(rows, dtype=np.int64)


def monomials(s: int, d: int) -> list[Monomial]:
    """Degree-d monomials in descending revlex order."""
    return [Monomial(tuple(int(x) for x in row)) for row in exponent_matrix(s, d)]


_RESIDUE_GRID_LIMIT = 1 << 20
_residue_grids: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}


def reduced_exponents(s: int, d: int, q: int) -> np.ndarray:
    """Distinct values of e mod (q-1) over degree-d exponent vectors e.

    On points with unit coordinates a monomial depends on its exponents
    only mod q-1, so these rows index the distinct evaluation rows of
    degree d.  The set equals {r in [0, q-2]^s : |r| <= d, |r| = d mod q-1}
    because the slack d - |r| is a multiple of q-1 and can be absorbed on
    any single coordinate.  Rows come out lex-sorted.
    """
    m = q - 1
    grid_size = m ** s
    if grid_size <= _RESIDUE_GRID_LIMIT:
        cached = _residue_grids.get((s, q))
        if cached is None:
            grid = np.indices((m,) * s, dtype=np.int64).reshape(s, -1).T
            cached = (grid, grid.sum(axis=1))
            _residue_grids[(s, q)] = cached
        grid, sums = cached
        mask = (sums <= d) & (sums % m == d % m)
        return grid[mask]
    return np.unique(exponent_matrix(s, d) % m, axis=0)


def evaluate_rows(X: ToricSet, E: np.ndarray) -> np.ndarray:
    """Evaluate the monomials with exponent rows E at every point of X.

    Returns the len(E) x |X| matrix of field encodings.  Valid because all
    coordinates of X are units, so evaluation happens in exponent space.
    """
    F = X.field
    R = (np.asarray(E, dtype=np.int64) @ X.logs.T) % (F.q - 1)
    return F.exp[R]


def evaluation_matrix(X: ToricSet, d: int) -> np.ndarray:
    """Rows = degree-d monomials (descending revlex), columns = points of X."""
    return evaluate_rows(X, exponent_matrix(X.s, d))


@dataclass
class LinearCode:
    generator: np.ndarray  # RREF, dimension x length, field encodings
    length: int
    dimension: int
    d: int
    field: FiniteField
    source: str

    def __repr__(self):
        return (
            f"LinearCode[{self.length},{self.dimension}] over {self.field!r} "
            f"(d={self.d}, {self.source})"
        )


def code(X: ToricSet, d: int) -> LinearCode:
    """The parameterized code C_X(d) with its canonical generator matrix."""
    if d < 1:
        raise ValueError("need d >= 1")
    E = reduced_exponents(X.s, d, X.field.q)
    M = evaluate_rows(X, E)
    R, pivots = _linalg.rref(X.field, M)
    G = R[: len(pivots)]
    return LinearCode(
        generator=G,
        length=len(X),
        dimension=len(pivots),
        d=d,
        field=X.field,
        source=X.source,
    )


def hilbert_function(X: ToricSet, d: int) -> int:
    """H_X(d) = dim of the degree-d piece of the homogeneous coordinate ring."""
    if d < 0:
        raise ValueError("need d >= 0")
    if d == 0:
        return 1
    cached = X._hilbert_cache.get(d)
    if cached is not None:
        return cached
    # monomials agreeing componentwise mod q-1 evaluate identically on units
    E = reduced_exponents(X.s, d, X.field.q)
    value = _linalg.rank(X.field, evaluate_rows(X, E))
    X._hilbert_cache[d] = value
    return value


def regularity(X: ToricSet) -> int:
    """Least d with H_X(d) = |X|; bounded above by (q-2)(s-1).

    Binary search is sound because multiplication by the last variable
    (a unit on every point) injects degree d into degree d+1, so H_X is
    nondecreasing and the predicate H_X(d) = |X| is monotone in d.
    """
    target = len(X)
    if target == 1:
        return 0
    bound = (X.field.q - 2) * (X.s - 1)
    if hilbert_function(X, bound) != target:
        raise AssertionError("Hilbert function failed to reach |X| by (q-2)(s-1)")
    lo, hi = 1, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if hilbert_function(X, mid) == target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def h_vector(X: ToricSet) -> list[int]:
    """First differences of H_X through the regularity; entries are positive
    and sum to |X|."""
    r = regularity(X)
    values = [hilbert_function(X, d) for d in range(r + 1)]
    return [values[0]] + [values[i] - values[i - 1] for i in range(1, r + 1)]


def singleton_bound(X: ToricSet, d: int) -> int:
    """|X| - H_X(d) + 1, the Singleton bound for delta_d."""
    if d < 1:
        raise ValueError("need d >= 1")
    return len(X) - hilbert_function(X, d) + 1


def monomial_count(s: int, d: int) -> int:
    return comb(s + d - 1, d)
