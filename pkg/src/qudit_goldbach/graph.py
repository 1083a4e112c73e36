"""A small immutable simple-graph type and its text formats.

Edge lists are ASCII, one ``u v`` pair per line with ``u < v``, 0-based
indices, sorted lexicographically.  A leading ``# order N`` comment
records the vertex count so that isolated vertices survive a round trip.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> Graph:
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T) or np.any(np.diag(a)):
            raise ValueError("adjacency matrix must be symmetric with zero diagonal")
        return cls(a.shape[0], tuple(frozenset(np.flatnonzero(row).tolist()) for row in a))

    def __len__(self) -> int:
        return self.n

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph on ``vertices``, relabelled 0.. in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            tuple(frozenset(index[u] for u in self.adj[v] if u in index) for v in vertices),
        )

    def complement(self) -> Graph:
        everything = frozenset(range(self.n))
        return Graph(self.n, tuple(everything - s - {v} for v, s in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex v renamed perm[v]."""
        nbrs: list[frozenset[int]] = [frozenset()] * self.n
        for v, s in enumerate(self.adj):
            nbrs[perm[v]] = frozenset(perm[u] for u in s)
        return Graph(self.n, tuple(nbrs))

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return False
        return True


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def write_edge_list(graph: Graph, fh: TextIO) -> None:
    fh.write(f"# order {graph.n}\n")
    for u, v in graph.edges():
        fh.write(f"{u} {v}\n")


def edge_list_text(graph: Graph) -> str:
    buf = io.StringIO()
    write_edge_list(graph, buf)
    return buf.getvalue()


def read_edge_list(text: str) -> Graph:
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "order":
                order = int(parts[1])
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(fields[0]), int(fields[1])))
    if order is None:
        order = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(order, edges)


def adjacency_csv(graph: Graph) -> str:
    rows = (",".join(str(x) for x in row) for row in graph.matrix().tolist())
    return "\n".join(rows) + "\n"


def read_adjacency_csv(text: str) -> Graph:
    rows = [[int(x) for x in line.split(",")] for line in text.splitlines() if line.strip()]
    return Graph.from_matrix(np.array(rows, dtype=np.int64).reshape(len(rows), -1))
