"""Loopless connected multigraphs and chip configurations.

A multigraph on vertices 1..n is stored as a symmetric n x n matrix of edge
multiplicities with a zero diagonal.  Configurations are plain sequences of
Python ints (exact arithmetic throughout), one entry per vertex; vertex n is
the sink wherever a sink matters.  Public vertex arguments are 1-based, like
the JSON interchange format.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Sequence


class MultiGraph:
    """A connected multigraph without self-loops.

    Parameters
    ----------
    mult : square matrix of non-negative ints
        ``mult[i][j]`` is the number of edges between vertices i+1 and j+1.
        Must be symmetric with a zero diagonal, and the graph it describes
        must be connected (checked eagerly).

    Attributes
    ----------
    n : number of vertices
    m : number of edges (with multiplicity)
    mult : the multiplicity matrix, as a tuple of tuples
    degrees : tuple of vertex degrees
    """

    __slots__ = ("n", "m", "mult", "degrees", "_flat", "_hnf", "_eff_cache")

    def __init__(self, mult: Sequence[Sequence[int]]):
        rows = [tuple(int(x) for x in row) for row in mult]
        n = len(rows)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("multiplicity matrix must be square")
            if row[i] != 0:
                raise ValueError(f"self-loop at vertex {i + 1}")
            for j, e in enumerate(row):
                if e < 0:
                    raise ValueError("edge multiplicities must be >= 0")
                if rows[j][i] != e:
                    raise ValueError("multiplicity matrix must be symmetric")
        self.n = n
        self.mult = tuple(rows)
        self.degrees = tuple(sum(row) for row in rows)
        self.m = sum(self.degrees) // 2
        if not self._connected():
            raise ValueError("graph must be connected")
        self._flat = None       # flat buffers for the compiled kernels
        self._hnf = None        # lattice normal form, built on demand
        self._eff_cache = None  # effectiveness-by-class cache

    def _connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j, e in enumerate(self.mult[i]):
                if e and not seen[j]:
                    seen[j] = True
                    queue.append(j)
        return all(seen)

    # ---------- constructors ----------

    @classmethod
    def complete(cls, n: int) -> "MultiGraph":
        """The complete graph K_n (K_1 is the single-vertex graph)."""
        return cls([[0 if i == j else 1 for j in range(n)] for i in range(n)])

    @classmethod
    def wheel(cls, k: int) -> "MultiGraph":
        """Wheel W_k: a k-cycle plus a hub joined to every rim vertex.

        The hub is the last vertex (k+1), so it is the sink by convention.
        """
        if k < 3:
            raise ValueError("wheel needs a rim cycle of length >= 3")
        n = k + 1
        mult = [[0] * n for _ in range(n)]
        for i in range(k):
            j = (i + 1) % k
            mult[i][j] += 1
            mult[j][i] += 1
            mult[i][k] += 1
            mult[k][i] += 1
        return cls(mult)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "MultiGraph":
        """Build from an edge list with 1-based endpoints.

        Each item is ``(i, j)`` or ``(i, j, mult)``; repeated pairs accumulate.
        """
        mult = [[0] * n for _ in range(n)]
        for edge in edges:
            if len(edge) == 2:
                i, j = edge
                e = 1
            elif len(edge) == 3:
                i, j, e = edge
            else:
                raise ValueError(f"bad edge entry: {edge!r}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge endpoint out of range: {edge!r}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if e < 0:
                raise ValueError("edge multiplicity must be >= 0")
            mult[i - 1][j - 1] += e
            mult[j - 1][i - 1] += e
        return cls(mult)

    @classmethod
    def from_json(cls, text: str | dict) -> "MultiGraph":
        """Parse ``{"n": int, "edges": [[i, j], [i, j, mult], ...]}``."""
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise ValueError('graph JSON needs keys "n" and "edges"')
        return cls.from_edges(int(data["n"]), data["edges"])

    def to_json(self) -> str:
        edges = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.mult[i][j]:
                    edges.append([i + 1, j + 1, self.mult[i][j]])
        return json.dumps({"n": self.n, "edges": edges})

    # ---------- queries ----------

    def degree(self, i: int) -> int:
        """Degree of vertex i (1-based)."""
        self._check_vertex(i)
        return self.degrees[i - 1]

    def multiplicity(self, i: int, j: int) -> int:
        """Number of edges between vertices i and j (1-based)."""
        self._check_vertex(i)
        self._check_vertex(j)
        return self.mult[i - 1][j - 1]

    def laplacian_row(self, i: int) -> tuple:
        """Row of the Laplacian for vertex i: degree on the diagonal slot,
        minus the multiplicity towards every other vertex."""
        self._check_vertex(i)
        k = i - 1
        return tuple(
            self.degrees[k] if j == k else -self.mult[k][j] for j in range(self.n)
        )

    def is_complete(self) -> bool:
        return all(
            self.mult[i][j] == 1
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def spanning_tree_count(self) -> int:
        """Number of spanning trees, by an exact integer determinant of the
        reduced Laplacian (sink row and column removed)."""
        k = self.n - 1
        if k == 0:
            return 1
        reduced = [list(self.laplacian_row(i + 1)[:k]) for i in range(k)]
        return _det_bareiss(reduced)

    def _check_vertex(self, i: int) -> None:
        if not isinstance(i, int) or not (1 <= i <= self.n):
            raise ValueError(f"vertex {i} out of range 1..{self.n}")

    def flat(self) -> tuple:
        """(n, degrees, row-major multiplicities) — buffer view for kernels."""
        if self._flat is None:
            flat = tuple(e for row in self.mult for e in row)
            self._flat = (self.n, self.degrees, flat)
        return self._flat

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiGraph) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


# ---------- configurations ----------


def check_config(G: MultiGraph, f: Sequence[int]) -> tuple:
    """Validate one-entry-per-vertex and return the configuration as a tuple."""
    f = tuple(int(x) for x in f)
    if len(f) != G.n:
        raise ValueError(f"configuration must have {G.n} entries, got {len(f)}")
    return f


def degree(f: Sequence[int]) -> int:
    """Total number of chips: the sum of all entries."""
    return sum(f)


def laplacian_row(G: MultiGraph, i: int) -> tuple:
    return G.laplacian_row(i)


def topple(G: MultiGraph, f: Sequence[int], i: int) -> tuple:
    """Topple vertex i: it sends one chip along each incident edge.

    The result is f minus the Laplacian row of i.  No stability or sign
    condition is imposed here; this is the raw lattice move.
    """
    f = check_config(G, f)
    row = G.laplacian_row(i)
    return tuple(x - d for x, d in zip(f, row))


def _det_bareiss(a: list) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
