"""Exact integer spectra.

Candidate eigenvalues come from a floating-point symmetric eigensolver;
each candidate lambda is then certified by computing
``n - rank(A - lambda I)`` with fraction-free (Bareiss) elimination over
the integers, so the multiplicities carry no rounding error.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from qudit_goldbach.errors import CapacityError
from qudit_goldbach.graph import Graph

MAX_SPECTRUM_ORDER = 200


@dataclass(frozen=True)
class IntegerSpectrum:
    """Eigenvalue/multiplicity pairs, largest eigenvalue first."""

    entries: tuple[tuple[int, int], ...]
    order: int
    certified: bool
    numeric: tuple[float, ...] = field(default=(), compare=False, repr=False)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def trace(self) -> int:
        return sum(lam * m for lam, m in self.entries)

    def trace_of_square(self) -> int:
        return sum(lam * lam * m for lam, m in self.entries)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{lam}^{m}" for lam, m in self.entries) + "}"

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], certified: bool = True) -> IntegerSpectrum:
        entries = tuple(sorted(((lam, m) for lam, m in mapping.items() if m), reverse=True))
        return cls(entries, sum(m for _, m in entries), certified)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Every division below is exact: each entry after step k is a k x k minor
    of the pivot columns.
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        if rank == rows:
            break
        pivot_row = next((i for i in range(rank, rows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        top = m[rank]
        piv = top[col]
        for i in range(rank + 1, rows):
            row = m[i]
            lead = row[col]
            m[i] = [(piv * row[j] - lead * top[j]) // prev for j in range(cols)]
        prev = piv
        rank += 1
    return rank


def exact_integer_spectrum(graph: Graph, capacity: int = MAX_SPECTRUM_ORDER) -> IntegerSpectrum:
    if graph.n > capacity:
        raise CapacityError(f"graph order {graph.n} exceeds spectrum capacity {capacity}")
    a = graph.matrix()
    n = graph.n
    if n == 0:
        return IntegerSpectrum((), 0, True)
    values = np.linalg.eigvalsh(a.astype(np.float64))
    candidates = sorted({int(round(v)) for v in values}, reverse=True)
    found: dict[int, int] = {}
    for lam in candidates:
        shifted = (a - lam * np.eye(n, dtype=np.int64)).tolist()
        mult = n - bareiss_rank(shifted)
        if mult:
            found[lam] = mult
    entries = tuple(sorted(found.items(), reverse=True))
    certified = sum(found.values()) == n
    return IntegerSpectrum(entries, n, certified, tuple(float(v) for v in values[::-1]))


def spectrum_from_counter(counter: Counter[int] | dict[int, int]) -> IntegerSpectrum:
    return IntegerSpectrum.from_mapping(dict(counter))
