"""Clutters (Sperner hypergraphs) on vertices y1..yn and their incidence data.

A clutter is given by n and a list of edges, each a set of 1-based vertex
indices; no edge may contain another.  Edge input order is preserved: it
fixes the variable order t1..ts everywhere downstream.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np


class ClutterError(ValueError):
    pass


@dataclass(frozen=True)
class Clutter:
    n: int
    edges: tuple[tuple[int, ...], ...]  # each sorted, 1-based

    @property
    def s(self) -> int:
        return len(self.edges)

    @property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        """Characteristic vectors v1..vs in {0,1}^n, edge order preserved."""
        out = []
        for e in self.edges:
            v = [0] * self.n
            for i in e:
                v[i - 1] = 1
            out.append(tuple(v))
        return tuple(out)

    def __str__(self):
        return f"Clutter(n={self.n}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class IncidenceMatrix:
    """n x s matrix whose columns are the characteristic vectors."""

    A: np.ndarray

    def __post_init__(self):
        A = self.A
        if A.ndim != 2 or not np.isin(A, (0, 1)).all():
            raise ClutterError("incidence entries must be 0/1")
        for j in range(A.shape[1]):
            for jj in range(j + 1, A.shape[1]):
                if np.array_equal(A[:, j], A[:, jj]):
                    raise ClutterError("incidence columns must be distinct")


def parse_clutter(doc) -> Clutter:
    """Build a validated Clutter from a dict {"n":..,"edges":[[..],..]} or
    from the text shorthand (one edge per line, whitespace-separated indices)."""
    if isinstance(doc, str):
        edges = []
        for line in doc.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                edges.append([int(tok) for tok in line.split()])
            except ValueError:
                raise ClutterError(f"bad edge line: {line!r}")
        if not edges:
            raise ClutterError("no edges in clutter text")
        n = max((max(e) for e in edges if e), default=0)
        doc = {"n": n, "edges": edges}
    if not isinstance(doc, dict):
        raise ClutterError("clutter document must be a dict or text")
    try:
        n = int(doc["n"])
        raw_edges = list(doc["edges"])
    except (KeyError, TypeError, ValueError):
        raise ClutterError('clutter document needs integer "n" and list "edges"')
    if n < 1:
        raise ClutterError(f"n = {n} must be >= 1")
    if len(raw_edges) < 2:
        raise ClutterError("need at least two edges (s >= 2)")

    edges: list[tuple[int, ...]] = []
    for e in raw_edges:
        try:
            raw = [int(i) for i in e]
        except (TypeError, ValueError):
            raise ClutterError(f"bad edge: {e!r}")
        verts = sorted(set(raw))
        if len(verts) != len(raw):
            raise ClutterError(f"edge {e!r} repeats a vertex")
        if not verts:
            raise ClutterError("empty edge")
        if verts[0] < 1 or verts[-1] > n:
            raise ClutterError(f"edge {e!r} has out-of-range vertex (n = {n})")
        edges.append(tuple(verts))

    sets = [set(e) for e in edges]
    for i in range(len(sets)):
        for j in range(len(sets)):
            if i != j and sets[i] == sets[j]:
                raise ClutterError(f"duplicate edge {edges[i]}")
            if i != j and sets[i] < sets[j]:
                raise ClutterError(
                    f"edge {edges[i]} is contained in {edges[j]} (not a clutter)"
                )

    covered = set().union(*sets)
    isolated = sorted(set(range(1, n + 1)) - covered)
    if isolated:
        warnings.warn(f"isolated vertices (in no edge): {isolated}", stacklevel=2)

    return Clutter(n=n, edges=tuple(edges))


def load_clutter(path: str) -> Clutter:
    """Load a clutter from a JSON file or from the text shorthand."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ClutterError(f"bad JSON in {path}: {exc}")
        return parse_clutter(doc)
    return parse_clutter(text)


def incidence(C: Clutter) -> IncidenceMatrix:
    """The n x s incidence matrix; column j is the vector of edge j."""
    A = np.array(C.vectors, dtype=np.int64).T
    return IncidenceMatrix(A)


def uniformity(C: Clutter):
    """(True, d) if every edge has the same size d, else (False, None)."""
    sizes = {len(e) for e in C.edges}
    if len(sizes) == 1:
        return True, sizes.pop()
    return False, None
