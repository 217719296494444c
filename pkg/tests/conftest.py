"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's vectorized kernels:
they use Fraction arithmetic, scalar field operations and exhaustive
loops so that test expectations are derived by a second, simpler route.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from toriccode import Clutter, parse_clutter

# ---------------------------------------------------------------------------
# clutter battery: small graphs with known structure
# ---------------------------------------------------------------------------

def _cycle(n):
    return [[i, i + 1] for i in range(1, n)] + [[1, n]]


def _complete(n):
    return [[a, b] for a in range(1, n + 1) for b in range(a + 1, n + 1)]


BATTERY_DOCS = {
    # odd cycles
    "C3": {"n": 3, "edges": _cycle(3)},
    "C5": {"n": 5, "edges": _cycle(5)},
    "C7": {"n": 7, "edges": _cycle(7)},
    # even cycles
    "C4": {"n": 4, "edges": _cycle(4)},
    "C6": {"n": 6, "edges": _cycle(6)},
    # complete graphs
    "K4": {"n": 4, "edges": _complete(4)},
    "K5": {"n": 5, "edges": _complete(5)},
    # trees
    "P3": {"n": 3, "edges": [[1, 2], [2, 3]]},
    "P4": {"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]},
    "star4": {"n": 4, "edges": [[1, 2], [1, 3], [1, 4]]},
    "T7": {"n": 7, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [3, 6], [6, 7]]},
    # unicyclic with an odd cycle
    "U4": {"n": 4, "edges": [[1, 2], [2, 3], [1, 3], [3, 4]]},
    "U6": {"n": 6, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5], [5, 6]]},
    "U7": {"n": 7, "edges": [[1, 2], [2, 3], [1, 3], [3, 4], [4, 5], [5, 6], [6, 7]]},
}

BATTERY = {name: parse_clutter(doc) for name, doc in BATTERY_DOCS.items()}

# ground truth from graph structure: a connected graph parameterizes the
# full torus exactly when its edge vectors are independent and the
# difference lattice is primitive, which holds for trees and for
# unicyclic graphs whose cycle is odd
CI_EXPECTED = {
    "C3": True, "C5": True, "C7": True,
    "C4": False, "C6": False,
    "K4": False, "K5": False,
    "P3": True, "P4": True, "star4": True, "T7": True,
    "U4": True, "U6": True, "U7": True,
}

# connected graphs containing an odd cycle
NON_BIPARTITE = ["C3", "C5", "C7", "K4", "K5", "U4", "U6", "U7"]

TRIANGLE = BATTERY["C3"]
K4 = BATTERY["K4"]


@pytest.fixture
def battery():
    return BATTERY


@pytest.fixture
def triangle():
    return TRIANGLE


@pytest.fixture
def k4():
    return K4


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def oracle_rank_fraction(M) -> int:
    """Rank over the rationals via plain Fraction elimination."""
    rows = [[Fraction(int(x)) for x in row] for row in M]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c]
        rows[rank] = [x / inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def oracle_det_fraction(M) -> Fraction:
    """Determinant via Fraction elimination, for square integer matrices."""
    rows = [[Fraction(int(x)) for x in row] for row in M]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = rows[c][c]
        rows[c] = [x / inv for x in rows[c]]
        for r in range(c + 1, n):
            if rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return det


def oracle_snf_minor_gcd(M) -> list[int]:
    """Invariant factors via gcds of k x k minors.  Exponential; tiny inputs only."""
    A = [[int(x) for x in row] for row in M]
    m, n = len(A), len(A[0])
    factors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[A[r][c] for c in cols] for r in rows]
                g = gcd(g, int(oracle_det_fraction(sub)))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def oracle_toric_points(C: Clutter, F) -> frozenset:
    """Brute-force canonical point set: loop over all unit tuples with
    scalar field arithmetic, canonicalize by dividing by the first
    coordinate, collect encoded tuples."""
    units = F.units()
    pts = set()
    for x in itertools.product(units, repeat=C.n):
        coords = []
        for edge in C.edges:
            val = F.element(F.one.enc)
            for v in edge:
                val = val * x[v - 1]
            coords.append(val)
        first_inv = coords[0] ** (-1)
        pts.add(tuple((c * first_inv).enc for c in coords))
    return frozenset(pts)


def oracle_min_weight(F, G) -> int:
    """Exhaustive minimum weight over all nonzero messages, scalar loop.
    Only usable for q**k up to a few thousand."""
    k, n = G.shape
    rows = [[F.element(int(e)) for e in row] for row in np.asarray(G)]
    best = None
    elems = [F.element(i) for i in range(F.q)]
    zero = F.element(0)
    for msg in itertools.product(elems, repeat=k):
        if all(m.enc == 0 for m in msg):
            continue
        w = 0
        for j in range(n):
            acc = zero
            for i in range(k):
                acc = acc + msg[i] * rows[i][j]
            if acc.enc != 0:
                w += 1
        if best is None or w < best:
            best = w
    return best


def oracle_hilbert_IA(C: Clutter, d: int) -> int:
    """Distinct degree-d sums of edge incidence vectors."""
    cols = [tuple(col) for col in np.array(C.vectors, dtype=int)]
    sums = set()
    for combo in itertools.combinations_with_replacement(cols, d):
        sums.add(tuple(sum(v) for v in zip(*combo)))
    return len(sums)


def oracle_torus_h_vector(s: int, q: int) -> list[int]:
    """Coefficients of (1 + t + ... + t^(q-2))**(s-1)."""
    block = np.ones(q - 1, dtype=np.int64)
    out = np.array([1], dtype=np.int64)
    for _ in range(s - 1):
        out = np.polymul(out, block)
    return [int(c) for c in out]
