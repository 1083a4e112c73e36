"""Recognition of the named graphs that show up as dual Pauli graphs.

Each candidate family yields a model graph of the right order; the input
is accepted when a backtracking isomorphism test succeeds.  ``BP_r`` is
the exception: it is only known through its spectrum
{r, 1^r, (-1)^r, -r}, so it is matched spectrally (plus bipartiteness)
and reported with ``method="spectral"``.

``rookComplement(m, n)`` is the complement of the m x n rook's graph
K_m [] K_n: cells (i, j) and (i', j') are adjacent when i != i' and j != j'.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from qudit_goldbach.errors import CapacityError
from qudit_goldbach.graph import Graph
from qudit_goldbach.graphanalysis.automorphism import is_isomorphic
from qudit_goldbach.graphanalysis.components import connected_components
from qudit_goldbach.graphanalysis.spectrum import IntegerSpectrum, exact_integer_spectrum

MAX_NAMED_ORDER = 200


@dataclass(frozen=True)
class NamedGraph:
    kind: str
    params: tuple[int, ...] = ()
    method: str = "isomorphism"

    def __str__(self) -> str:
        if self.kind in ("cube", "unknown"):
            return self.kind
        return f"{self.kind}({','.join(map(str, self.params))})"


UNKNOWN = NamedGraph("unknown", method="none")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    label = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(label)
    return Graph.from_edges(n, ((u, v) for u, v in itertools.combinations(range(n), 2) if label[u] != label[v]))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def cube_graph() -> Graph:
    return Graph.from_edges(8, ((u, u ^ (1 << k)) for u in range(8) for k in range(3) if u < u ^ (1 << k)))


def rook_complement(m: int, n: int) -> Graph:
    cells = [(i, j) for i in range(m) for j in range(n)]
    return Graph.from_edges(
        len(cells),
        (
            (a, b)
            for a, b in itertools.combinations(range(len(cells)), 2)
            if cells[a][0] != cells[b][0] and cells[a][1] != cells[b][1]
        ),
    )


def bp_spectrum(r: int) -> IntegerSpectrum:
    """{r^1, 1^r, (-1)^r, (-r)^1}; r = 1 collapses to K_2 twice over."""
    counts: dict[int, int] = {}
    for lam, mult in ((r, 1), (1, r), (-1, r), (-r, 1)):
        counts[lam] = counts.get(lam, 0) + mult
    return IntegerSpectrum.from_mapping(counts)


def _candidates(graph: Graph) -> list[tuple[NamedGraph, Graph]]:
    n = graph.n
    degrees = graph.degrees()
    out: list[tuple[NamedGraph, Graph]] = []
    if all(d == n - 1 for d in degrees):
        out.append((NamedGraph("completeK", (n,)), complete_graph(n)))
        return out
    parts = sorted((len(c) for c in connected_components(graph.complement())), reverse=True)
    if len(parts) > 1:
        out.append((NamedGraph("completeMultipartite", tuple(parts)), complete_multipartite(*parts)))
    if n >= 3 and all(d == 2 for d in degrees):
        out.append((NamedGraph("cycle", (n,)), cycle_graph(n)))
    if n == 8 and all(d == 3 for d in degrees):
        out.append((NamedGraph("cube"), cube_graph()))
    for k in range(2, n):
        if n % k or n // k < k:
            continue
        m = n // k
        if all(d == (m - 1) * (k - 1) for d in degrees):
            out.append((NamedGraph("rookComplement", (m, k)), rook_complement(m, k)))
    return out


def recognize_named_graph(graph: Graph, capacity: int = MAX_NAMED_ORDER) -> NamedGraph:
    if graph.n > capacity:
        raise CapacityError(f"graph order {graph.n} exceeds recognition capacity {capacity}")
    if graph.n == 0:
        return UNKNOWN
    for name, model in _candidates(graph):
        if is_isomorphic(graph, model):
            return name
    if graph.n % 2 == 0 and graph.n >= 4 and graph.is_bipartite():
        r = (graph.n - 2) // 2
        if exact_integer_spectrum(graph) == bp_spectrum(r):
            return NamedGraph("bipartiteBP", (r,), method="spectral")
    return UNKNOWN
