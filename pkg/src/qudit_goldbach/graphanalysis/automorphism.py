"""Automorphism group orders and isomorphism tests.

Colour refinement (1-dimensional Weisfeiler-Leman) produces an equitable
partition; individualising a vertex and refining again drives the search.
The group order is assembled along a stabiliser chain,

    |Aut(G, pi)| = |orbit of v in Aut(G, pi)| * |Aut(G, pi with v fixed)|,

where each orbit is grown from automorphisms found by backtracking.  An
element w of v's cell is only searched for when the generators known so
far do not already carry v to w.
"""

from __future__ import annotations

import time
from collections import Counter
from typing import Sequence

from qudit_goldbach.errors import CapacityError
from qudit_goldbach.graph import Graph

MAX_AUTOMORPHISM_ORDER = 100

Colouring = list[int]
Adjacency = Sequence[frozenset[int]]


class SearchTimeout(TimeoutError):
    """The automorphism or isomorphism search ran past its deadline."""


def _signatures(adj: Adjacency, colours: Colouring) -> list[tuple[int, tuple[int, ...]]]:
    return [(colours[v], tuple(sorted(colours[u] for u in adj[v]))) for v in range(len(adj))]


def refine_pair(
    adj1: Adjacency, c1: Colouring, adj2: Adjacency, c2: Colouring
) -> tuple[Colouring, Colouring] | None:
    """Refine two colourings in lock step.

    Colours are renumbered through a table shared by both sides so that a
    colour means the same thing on the left and on the right.  Returns
    None as soon as the colour histograms differ.
    """
    classes = len(set(c1))
    while True:
        s1 = _signatures(adj1, c1)
        s2 = _signatures(adj2, c2)
        keys = sorted(set(s1) | set(s2))
        index = {k: i for i, k in enumerate(keys)}
        n1 = [index[s] for s in s1]
        n2 = [index[s] for s in s2]
        if Counter(n1) != Counter(n2):
            return None
        if len(keys) == classes:
            return n1, n2
        classes = len(keys)
        c1, c2 = n1, n2


def refine(adj: Adjacency, colours: Colouring) -> Colouring:
    out = refine_pair(adj, colours, adj, colours)
    assert out is not None
    return out[0]


def _individualise(colours: Colouring, v: int) -> Colouring:
    out = list(colours)
    out[v] = max(colours) + 1
    return out


def _target_cell(colours: Colouring) -> int | None:
    """Colour of the smallest non-singleton cell (ties: lowest colour)."""
    sizes = Counter(colours)
    multi = [(size, colour) for colour, size in sizes.items() if size > 1]
    return min(multi)[1] if multi else None


class _Search:
    def __init__(self, deadline: float | None) -> None:
        self.deadline = deadline

    def tick(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout("search exceeded its time budget")

    def find(self, adj1: Adjacency, c1: Colouring, adj2: Adjacency, c2: Colouring) -> list[int] | None:
        """An isomorphism adj1 -> adj2 that carries colour classes onto colour classes."""
        self.tick()
        refined = refine_pair(adj1, c1, adj2, c2)
        if refined is None:
            return None
        c1, c2 = refined
        cell = _target_cell(c1)
        if cell is None:
            where = {colour: w for w, colour in enumerate(c2)}
            perm = [where[colour] for colour in c1]
            ok = all(frozenset(perm[u] for u in adj1[v]) == adj2[perm[v]] for v in range(len(adj1)))
            return perm if ok else None
        x = c1.index(cell)
        left = _individualise(c1, x)
        for y in (w for w, colour in enumerate(c2) if colour == cell):
            found = self.find(adj1, left, adj2, _individualise(c2, y))
            if found is not None:
                return found
        return None


def _orbit(start: int, gens: list[list[int]]) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = g[v]
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def _order(adj: Adjacency, colours: Colouring, gens: list[list[int]], search: _Search) -> int:
    colours = refine(adj, colours)
    cell = _target_cell(colours)
    if cell is None:
        return 1
    v = colours.index(cell)
    fixed = _individualise(colours, v)
    stab = _order(adj, fixed, gens, search)
    orbit = _orbit(v, gens)
    for w in (u for u, colour in enumerate(colours) if colour == cell):
        if w in orbit:
            continue
        perm = search.find(adj, fixed, adj, _individualise(colours, w))
        if perm is not None:
            gens.append(perm)
            orbit = _orbit(v, gens)
    return len(orbit) * stab


def automorphism_order(
    graph: Graph,
    capacity: int = MAX_AUTOMORPHISM_ORDER,
    time_budget: float | None = None,
    colours: Sequence[int] | None = None,
) -> int:
    """Exact order of Aut(graph), optionally of the colour-preserving subgroup.

    Raises :class:`SearchTimeout` if ``time_budget`` seconds elapse first.
    """
    if graph.n > capacity:
        raise CapacityError(f"graph order {graph.n} exceeds automorphism capacity {capacity}")
    if graph.n == 0:
        return 1
    deadline = None if time_budget is None else time.monotonic() + time_budget
    start = list(colours) if colours is not None else [0] * graph.n
    return _order(graph.adj, start, [], _Search(deadline))


def automorphism_generators(graph: Graph, capacity: int = MAX_AUTOMORPHISM_ORDER) -> list[list[int]]:
    """Generators found while computing the order (a generating set of Aut)."""
    if graph.n > capacity:
        raise CapacityError(f"graph order {graph.n} exceeds automorphism capacity {capacity}")
    gens: list[list[int]] = []
    if graph.n:
        _order(graph.adj, [0] * graph.n, gens, _Search(None))
    return gens


def find_isomorphism(g1: Graph, g2: Graph, time_budget: float | None = None) -> list[int] | None:
    """A vertex map perm with g1.relabel(perm) == g2, or None."""
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    deadline = None if time_budget is None else time.monotonic() + time_budget
    return _Search(deadline).find(g1.adj, [0] * g1.n, g2.adj, [0] * g2.n)


def is_isomorphic(g1: Graph, g2: Graph, time_budget: float | None = None) -> bool:
    return find_isomorphism(g1, g2, time_budget) is not None
