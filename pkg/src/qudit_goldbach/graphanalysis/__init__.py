"""Spectra, named-graph recognition and automorphism orders."""

from qudit_goldbach.graphanalysis.automorphism import (
    SearchTimeout,
    automorphism_order,
    find_isomorphism,
    is_isomorphic,
)
from qudit_goldbach.graphanalysis.classify import SpectrumClass, classify_spectrum, closed_form
from qudit_goldbach.graphanalysis.components import connected_components, maximal_cliques
from qudit_goldbach.graphanalysis.named import NamedGraph, recognize_named_graph
from qudit_goldbach.graphanalysis.report import graph_record
from qudit_goldbach.graphanalysis.spectrum import IntegerSpectrum, bareiss_rank, exact_integer_spectrum

__all__ = [
    "IntegerSpectrum",
    "NamedGraph",
    "SearchTimeout",
    "SpectrumClass",
    "automorphism_order",
    "bareiss_rank",
    "classify_spectrum",
    "closed_form",
    "connected_components",
    "exact_integer_spectrum",
    "find_isomorphism",
    "graph_record",
    "is_isomorphic",
    "maximal_cliques",
    "recognize_named_graph",
]
