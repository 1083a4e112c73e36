"""JSON-ready summaries of a graph's spectrum, class and symmetry."""

from __future__ import annotations

from typing import Any

from qudit_goldbach.graph import Graph
from qudit_goldbach.graphanalysis.automorphism import SearchTimeout, automorphism_order
from qudit_goldbach.graphanalysis.classify import UNCLASSIFIED, classify_spectrum
from qudit_goldbach.graphanalysis.spectrum import exact_integer_spectrum


def graph_record(graph: Graph, q: int | None = None, aut_time_budget: float | None = 60.0) -> dict[str, Any]:
    """``{order, edges, spectrum, certified, class, aut_order}``.

    ``aut_order`` is None when the automorphism search times out.
    """
    spec = exact_integer_spectrum(graph)
    cls = classify_spectrum(q, spec) if q is not None else UNCLASSIFIED
    try:
        aut: int | None = automorphism_order(graph, time_budget=aut_time_budget)
    except SearchTimeout:
        aut = None
    return {
        "order": graph.n,
        "edges": graph.num_edges,
        "spectrum": [[lam, mult] for lam, mult in spec.entries],
        "certified": spec.certified,
        "class": str(cls),
        "aut_order": aut,
    }
