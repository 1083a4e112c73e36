"""Goldbach partitions, almost totally Goldbach indices and the Goldbach defect.

Conventions
-----------
* ``goldbach_pair_count(n)`` counts unordered pairs, so ``{p, p}`` counts once.
* The primes tested by the (almost) totally Goldbach definitions are the
  ``p < n - 1`` with ``p`` not dividing ``n``, except that ``p = n/2`` is
  re-admitted.
* The upper bound used by :func:`maximal_g_set` is the number of primes
  ``p`` with ``n/2 <= p <= n - 2`` (real ``n/2``, both ends inclusive).
  Using ``n - 1`` as the top end would, for instance, give a bound of 2
  at ``n = 4`` where only ``{2, 2}`` exists; the ``n - 2`` bound is the
  one for which equality holds exactly on
  ``{2..8, 10, 12, 14, 16, 18, 24, 30, 36, 42, 48, 60, 90, 210}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from qudit_goldbach.errors import CapacityError, DomainError
from qudit_goldbach.hardylittlewood import hl_R
from qudit_goldbach.numtheory import (
    DEFAULT_LIMIT,
    EXP_GAMMA,
    ZETA2,
    PrimeTable,
    dedekind_psi,
    default_table,
    primes_up_to,
)


@dataclass(frozen=True)
class GoldbachProfile:
    n: int
    pair_count: int
    max_possible: int
    atg_index: int
    totally_goldbach: bool
    #: eligible primes p for which n - p is prime (the "#tg" / "#atg" count)
    success_count: int


@dataclass(frozen=True)
class DefectRecord:
    q: int
    defect: float
    is_champion: bool


def _table_for(n: int, table: PrimeTable | None) -> PrimeTable:
    if table is None:
        return default_table() if n <= DEFAULT_LIMIT else primes_up_to(n)
    if n > table.limit:
        raise CapacityError(f"{n} exceeds sieve limit {table.limit}")
    return table


def goldbach_pair_count(n: int, table: PrimeTable | None = None) -> int:
    if n < 2:
        raise DomainError("goldbach_pair_count needs n >= 2")
    table = _table_for(n, table)
    p = table.primes[table.primes <= n // 2]
    return int(np.count_nonzero(table.prime_mask[n - p]))


def pair_counts(limit: int, table: PrimeTable | None = None) -> np.ndarray:
    """Unordered pair counts g(n) for 0 <= n <= limit via an FFT self-convolution."""
    if limit < 2:
        raise DomainError("limit must be >= 2")
    table = _table_for(limit, table)
    ind = table.prime_mask[: limit + 1].astype(np.float64)
    size = 1 << (2 * limit + 1).bit_length()
    spectrum = np.fft.rfft(ind, size)
    ordered = np.rint(np.fft.irfft(spectrum * spectrum, size)[: limit + 1]).astype(np.int64)
    diagonal = np.zeros(limit + 1, dtype=np.int64)
    diagonal[0::2] = ind[: limit // 2 + 1]
    return (ordered + diagonal) // 2


def max_possible_pairs(n: int, table: PrimeTable | None = None) -> int:
    """Number of primes p with n/2 <= p <= n - 2."""
    if n < 2:
        raise DomainError("n must be >= 2")
    table = _table_for(n, table)
    lo = (n + 1) // 2
    if n - 2 < lo:
        return 0
    return table.prime_count(n - 2) - table.prime_count(lo - 1)


def _eligible_primes(n: int, table: PrimeTable) -> np.ndarray:
    p = table.primes[table.primes < n - 1]
    return p[(n % p != 0) | (2 * p == n)]


def _split(n: int, table: PrimeTable | None) -> tuple[int, int]:
    if n < 1:
        raise DomainError("n must be >= 1")
    table = _table_for(n, table)
    p = _eligible_primes(n, table)
    good = int(np.count_nonzero(table.prime_mask[n - p]))
    return good, len(p) - good


def atg_index(n: int, table: PrimeTable | None = None) -> int:
    """Number of eligible primes p < n - 1 for which n - p is composite."""
    return _split(n, table)[1]


def totally_goldbach(n: int, table: PrimeTable | None = None) -> bool:
    return atg_index(n, table) == 0


def goldbach_successes(n: int, table: PrimeTable | None = None) -> int:
    """Number of eligible primes p < n - 1 for which n - p is prime."""
    return _split(n, table)[0]


def goldbach_profile(n: int, table: PrimeTable | None = None) -> GoldbachProfile:
    good, bad = _split(n, table)
    if n >= 2:
        pairs = goldbach_pair_count(n, table)
        bound = max_possible_pairs(n, table)
    else:
        pairs = bound = 0
    return GoldbachProfile(n, pairs, bound, bad, bad == 0, good)


def atg_table(max_index: int, max_n: int = 210, table: PrimeTable | None = None) -> dict[int, list[int]]:
    """Bucket k holds every n <= max_n whose index is exactly k.

    The cumulative sets A_k = A_{k-1} plus bucket k come from
    :func:`cumulative`.  The default bound 210 is the smallest one that
    reaches every member of the published index-0..10 rows (210 has
    index 4).
    """
    if max_index < 0:
        raise DomainError("max_index must be >= 0")
    table = _table_for(max_n, table)
    buckets: dict[int, list[int]] = {k: [] for k in range(max_index + 1)}
    for n in range(1, max_n + 1):
        k = atg_index(n, table)
        if k <= max_index:
            buckets[k].append(n)
    return buckets


def cumulative(buckets: dict[int, list[int]]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    acc: set[int] = set()
    for k in sorted(buckets):
        acc.update(buckets[k])
        out[k] = sorted(acc)
    return out


def maximal_g_set(limit: int, table: PrimeTable | None = None) -> list[int]:
    """Every 2 <= n <= limit at which g(n) attains its upper bound."""
    if limit < 2:
        raise DomainError("limit must be >= 2")
    table = _table_for(limit, table)
    g = pair_counts(limit, table)
    n = np.arange(limit + 1)
    counts = np.concatenate(([0], np.cumsum(table.prime_mask[: limit + 1])))
    # counts[k] = number of primes < k
    hi = np.maximum(n - 2, 0)
    lo = (n + 1) // 2
    bound = np.where(hi >= lo, counts[hi + 1] - counts[lo], 0)
    hits = np.flatnonzero(g[2:] == bound[2:]) + 2
    return [int(v) for v in hits]


# ---------------------------------------------------------------------------
# Goldbach defect
# ---------------------------------------------------------------------------


def goldbach_defect(q: int, table: PrimeTable | None = None) -> float:
    """zeta(2) q R(q) - psi(q) for even q."""
    if q < 2 or q % 2:
        raise DomainError("the Goldbach defect is defined for even q >= 2")
    return ZETA2 * q * hl_R(q, table) - dedekind_psi(q, table)


def defect_records(limit: int, table: PrimeTable | None = None) -> list[DefectRecord]:
    if limit < 2:
        raise DomainError("limit must be >= 2")
    out = []
    best = -math.inf
    for q in range(2, limit + 1, 2):
        d = goldbach_defect(q, table)
        out.append(DefectRecord(q, d, d > best))
        best = max(best, d)
    return out


def gd_champions(limit: int, table: PrimeTable | None = None) -> list[int]:
    """Even q <= limit at which the defect sets a new record."""
    return [rec.q for rec in defect_records(limit, table) if rec.is_champion]


def verify_sandwich(i: int, table: PrimeTable | None = None) -> bool:
    """zeta(2) psi(i) / (i ln ln i) > R(i) / ln ln i > e^gamma."""
    if i <= 2 or i % 2:
        raise DomainError("the sandwich inequality needs an even i > 2")
    lnln = math.log(math.log(i))
    upper = ZETA2 * dedekind_psi(i, table) / (i * lnln)
    middle = hl_R(i, table) / lnln
    return upper > middle > EXP_GAMMA
