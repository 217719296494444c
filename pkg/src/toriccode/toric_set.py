"""Algebraic toric sets: X parameterized by a clutter, and the projective torus.

Points live in P^(s-1) over GF(q) and always have all coordinates nonzero,
so each is stored canonically (first coordinate scaled to 1) as the vector
of primitive-power exponents of its coordinates.  Point order is the
lexicographic order of those exponent vectors, which makes every downstream
computation deterministic.
"""

from __future__ import annotations

import numpy as np

from .clutter import Clutter, incidence, uniformity
from .errors import BudgetExceededError
from .finite_field import FieldElement, FiniteField
from .intlattice import rank_rational

DEFAULT_ENUM_BUDGET = 10 ** 8
_CHUNK = 1 << 16


class ProjectivePoint:
    """A point of P^(s-1), stored in canonical form (first nonzero coord = 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if not coords:
            raise ValueError("empty coordinate tuple")
        field = coords[0].field
        for c in coords:
            if not isinstance(c, FieldElement) or c.field != field:
                raise ValueError("coordinates must share one field")
        first = next((c for c in coords if c.enc != 0), None)
        if first is None:
            raise ValueError("projective point cannot be all-zero")
        inv = first ** (-1)
        self.coords = tuple(c * inv for c in coords)

    @property
    def field(self) -> FiniteField:
        return self.coords[0].field

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + ":".join(repr(c).split("#")[0] for c in self.coords) + "]"


class ToricSet:
    """A finite set of all-unit projective points over one field.

    ``logs`` is the |X| x s integer matrix of primitive-power exponents of
    the canonical coordinates, rows sorted lexicographically.  Immutable
    after construction.
    """

    def __init__(self, field: FiniteField, logs: np.ndarray, source: str):
        logs = np.asarray(logs, dtype=np.int64)
        if logs.ndim != 2:
            raise ValueError("logs must be 2-d")
        if logs.size and (logs.min() < 0 or logs.max() >= field.q - 1):
            raise ValueError("exponents out of range")
        self.field = field
        self.logs = logs
        self.logs.setflags(write=False)
        self.source = source
        self._hilbert_cache: dict[int, int] = {}

    @property
    def s(self) -> int:
        return self.logs.shape[1]

    def __len__(self):
        return self.logs.shape[0]

    def points(self) -> list[ProjectivePoint]:
        F = self.field
        enc = F.exp[self.logs]
        return [
            ProjectivePoint(FieldElement(F, int(e)) for e in row) for row in enc
        ]

    def coordinate_matrix(self) -> np.ndarray:
        """|X| x s matrix of canonical coordinates as field encodings."""
        return self.field.exp[self.logs]

    def __repr__(self):
        return f"ToricSet({len(self)} points in P^{self.s - 1} over {self.field!r}, {self.source})"


def _difference_matrix(C: Clutter) -> np.ndarray:
    V = np.array(C.vectors, dtype=np.int64)  # s x n
    return V - V[0]


def enumerate_X(C: Clutter, F: FiniteField, budget: int = DEFAULT_ENUM_BUDGET) -> ToricSet:
    """All points [ (x^v1 : ... : x^vs) ] for x in the affine torus (K*)^n.

    The walk is over (q-1)^n unit tuples; raises BudgetExceededError first
    if that count exceeds the budget.
    """
    n, s = C.n, C.s
    m = F.q - 1
    total = m ** n
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} tuples (= (q-1)^n) > budget {budget}"
        )
    B = _difference_matrix(C)  # s x n; row 0 is zero, giving the canonical 0 column
    radix = m ** np.arange(n, dtype=np.int64)
    chunks = []
    for start in range(0, total, _CHUNK):
        ids = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        a = (ids[:, None] // radix[None, :]) % m
        logs = (a @ B.T) % m
        chunks.append(np.unique(logs, axis=0))
        if len(chunks) > 64:
            chunks = [np.unique(np.concatenate(chunks), axis=0)]
    logs = np.unique(np.concatenate(chunks), axis=0)
    return ToricSet(F, logs, source=f"X({C})")


def projective_torus(s: int, F: FiniteField) -> ToricSet:
    """The torus T in P^(s-1): all points with every coordinate nonzero."""
    if s < 2:
        raise ValueError("need s >= 2")
    m = F.q - 1
    count = m ** (s - 1)
    ids = np.arange(count, dtype=np.int64)
    radix = m ** np.arange(s - 2, -1, -1, dtype=np.int64)  # big-endian: lex order
    logs = np.zeros((count, s), dtype=np.int64)
    logs[:, 1:] = (ids[:, None] // radix[None, :]) % m
    return ToricSet(F, logs, source=f"T(s={s})")


def equals_torus(X: ToricSet) -> bool:
    """Whether X is all of the projective torus in its ambient space."""
    m = X.field.q - 1
    if len(X) != m ** (X.s - 1):
        return False
    T = projective_torus(X.s, X.field)
    return bool(np.array_equal(X.logs, T.logs))


def profile(C: Clutter, F: FiniteField, budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """Size/rank report used to judge applicability of the torus bounds.

    Normality of the edge subring is asserted by the caller, never verified
    here; the note in the report says so.
    """
    X = enumerate_X(C, F, budget=budget)
    A = incidence(C).A
    r = rank_rational(A)
    uniform, _ = uniformity(C)
    expected = (F.q - 1) ** (C.n - 1)
    return {
        "n": C.n,
        "s": C.s,
        "q": F.q,
        "points": len(X),
        "rank": r,
        "rank_is_n": r == C.n,
        "uniform": uniform,
        "torus_bound_degree": expected,
        "degree_matches_torus_bound": len(X) == expected,
        "equals_ambient_torus": equals_torus(X),
        "note": "normality of the edge subring is user-asserted, not verified",
    }


def points_csv(X: ToricSet) -> str:
    """CSV dump of canonical coordinates as primitive-power indices
    (0 is reserved for the zero element and never occurs for X)."""
    header = ",".join(f"t{j + 1}" for j in range(X.s))
    lines = [header]
    for row in X.logs:
        lines.append(",".join(str(int(e) + 1) for e in row))
    return "\n".join(lines) + "\n"
