"""Pauli graphs of a single qudit and their maximal-clique duals.

The Pauli graph G_q has the q^2 - 1 non-identity classes (b, c) as
vertices, joined when they commute.  Its maximal cliques are the
isotropic lines with (0, 0) removed.  The dual graph G_q* has those
cliques as vertices, joined when they are disjoint.

Lines generated by an admissible vector (free lines) are exactly the
non-isolated vertices of G_q*; the remaining lines meet every other line.
The projective part of G_q* is the subgraph induced on the free lines,
which is in bijection with the projective line over Z_q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from qudit_goldbach.errors import CapacityError, DomainError
from qudit_goldbach.graph import Graph
from qudit_goldbach.graphanalysis.components import connected_components, maximal_cliques
from qudit_goldbach.numtheory import dedekind_psi, divisor_sigma
from qudit_goldbach.symplectic import Point, enumerate_isotropic_lines

DEFAULT_CAPACITY = 36
#: Hard ceiling reachable through the ``capacity`` argument.
MAX_CAPACITY = 60
#: Bron-Kerbosch cross-checks stop here.
CLIQUE_CHECK_LIMIT = 18


def _check_q(q: int, capacity: int) -> None:
    if capacity > MAX_CAPACITY:
        raise CapacityError(f"capacity may not exceed {MAX_CAPACITY}")
    if q < 2:
        raise DomainError("q must be >= 2")
    if q > capacity:
        raise CapacityError(f"q = {q} exceeds capacity {capacity}")


@dataclass(frozen=True, eq=False)
class PauliGraph:
    q: int
    vertices: tuple[Point, ...]
    adjacency: np.ndarray

    @property
    def graph(self) -> Graph:
        return Graph.from_matrix(self.adjacency.astype(np.int64))

    def index(self, point: Point) -> int:
        b, c = point
        return b * self.q + c - 1


@dataclass(frozen=True, order=True)
class MaximalCommutingSet:
    q: int
    points: tuple[Point, ...]

    @property
    def is_free(self) -> bool:
        # an admissible vector has order q, so it generates the whole line
        return any(math.gcd(b, c, self.q) == 1 for b, c in self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True, eq=False)
class DualGraph:
    q: int
    sets: tuple[MaximalCommutingSet, ...]
    graph: Graph


def build_pauli_graph(q: int, capacity: int = DEFAULT_CAPACITY) -> PauliGraph:
    _check_q(q, capacity)
    pts = [(b, c) for b in range(q) for c in range(q) if (b, c) != (0, 0)]
    b = np.array([p[0] for p in pts], dtype=np.int64)
    c = np.array([p[1] for p in pts], dtype=np.int64)
    delta = (b[:, None] * c[None, :] - b[None, :] * c[:, None]) % q
    adjacency = delta == 0
    np.fill_diagonal(adjacency, False)
    adjacency.setflags(write=False)
    return PauliGraph(q, tuple(pts), adjacency)


@lru_cache(maxsize=64)
def maximal_commuting_sets(q: int, capacity: int = DEFAULT_CAPACITY) -> tuple[MaximalCommutingSet, ...]:
    """The isotropic lines minus the origin, in canonical order."""
    _check_q(q, capacity)
    return tuple(MaximalCommutingSet(q, line.nonzero()) for line in enumerate_isotropic_lines(q))


def clique_cross_check(q: int) -> bool:
    """Bron-Kerbosch on G_q gives exactly the isotropic-line family."""
    if q > CLIQUE_CHECK_LIMIT:
        raise CapacityError(f"clique cross-check limited to q <= {CLIQUE_CHECK_LIMIT}")
    pg = build_pauli_graph(q)
    cliques = {frozenset(pg.vertices[i] for i in clique) for clique in maximal_cliques(pg.graph)}
    lines = {frozenset(s.points) for s in maximal_commuting_sets(q)}
    return cliques == lines and all(len(cl) == q - 1 for cl in cliques)


@lru_cache(maxsize=64)
def build_dual_graph(q: int, capacity: int = DEFAULT_CAPACITY) -> DualGraph:
    sets = maximal_commuting_sets(q, capacity)
    members = [frozenset(s.points) for s in sets]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if members[i].isdisjoint(members[j])
    ]
    return DualGraph(q, sets, Graph.from_edges(len(sets), edges))


def d_set(q: int, capacity: int = DEFAULT_CAPACITY) -> list[MaximalCommutingSet]:
    """Maximal commuting sets meeting every other one (isolated in G_q*)."""
    dual = build_dual_graph(q, capacity)
    return [s for s, nbrs in zip(dual.sets, dual.graph.adj) if not nbrs]


def projective_indices(q: int, capacity: int = DEFAULT_CAPACITY) -> list[int]:
    """Dual-graph vertices that are free lines."""
    dual = build_dual_graph(q, capacity)
    return [i for i, s in enumerate(dual.sets) if s.is_free]


def projective_sets(q: int, capacity: int = DEFAULT_CAPACITY) -> list[MaximalCommutingSet]:
    dual = build_dual_graph(q, capacity)
    return [dual.sets[i] for i in projective_indices(q, capacity)]


def projective_component(q: int, capacity: int = DEFAULT_CAPACITY) -> Graph:
    """G_q* induced on the psi(q) free lines (vertex order as in :func:`projective_sets`)."""
    dual = build_dual_graph(q, capacity)
    return dual.graph.induced(projective_indices(q, capacity))


def connectivity_report(q: int, capacity: int = DEFAULT_CAPACITY) -> dict[str, list[int]]:
    """Component sizes of the full dual graph and of its projective part."""
    dual = build_dual_graph(q, capacity)
    proj = projective_component(q, capacity)
    return {
        "dual": sorted((len(c) for c in connected_components(dual.graph)), reverse=True),
        "projective": sorted((len(c) for c in connected_components(proj)), reverse=True),
    }


def decomposition(q: int, capacity: int = DEFAULT_CAPACITY) -> tuple[int, int]:
    """(free lines, other lines), counted on the geometry and checked against psi, sigma."""
    dual = build_dual_graph(q, capacity)
    free = sum(1 for s in dual.sets if s.is_free)
    extra = len(dual.sets) - free
    isolated = sum(1 for nbrs in dual.graph.adj if not nbrs)
    if free != dedekind_psi(q) or free + extra != divisor_sigma(q) or isolated != extra:
        raise RuntimeError(f"geometry of Z_{q}^2 disagrees with sigma/psi: {free}+{extra}")
    return free, extra
