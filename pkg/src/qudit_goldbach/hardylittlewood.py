"""Hardy-Littlewood singular series, primorial ratios and the related scans.

``R(q) = 2*C2 * prod (p-1)/(p-2)`` is taken over the *odd* primes dividing
``q``; the factor for p = 2 would be a division by zero.

Primorial quantities are kept in log space.  ``ln R(N_r)`` is accumulated as

    ln 2 + ln C2 + sum_{i=2..r} [ln(1 + 1/(p_i - 1)) - ln(1 - 1/(p_i - 1)**2)]

which is the split-product form with the convergent tail absorbed into C2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from qudit_goldbach.errors import CapacityError, DomainError
from qudit_goldbach.numtheory import (
    C2,
    DEFAULT_LIMIT,
    EXP_GAMMA,
    ZETA2,
    NeumaierSum,
    PrimeTable,
    chebyshev_theta,
    dedekind_psi,
    dedekind_psi_table,
    default_table,
    factorize,
    primes_up_to,
    primorial_log,
)

#: The set on which psi(q)/q > e^gamma ln ln q holds.
INEQUALITY_SET = (2, 3, 4, 5, 6, 8, 10, 12, 18, 30)


class DegenerateInputWarning(UserWarning):
    """Emitted when a value is returned for an argument outside the natural domain."""


@dataclass(frozen=True)
class PrimorialRecord:
    r: int
    p_r: int
    log_N: float
    R_log: float
    u: float
    u_minus_eg: float


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a finite scan.

    ``satisfied_set`` lists where the inequality holds, when that set is
    small enough to be worth listing; ``checked`` is the number of
    arguments examined.
    """

    bound: int
    satisfied_set: tuple[int, ...] = ()
    violations: tuple[int, ...] = ()
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def _table_for(n: int, table: PrimeTable | None) -> PrimeTable:
    if table is None:
        return default_table() if n <= DEFAULT_LIMIT else primes_up_to(n)
    if n > table.limit:
        raise CapacityError(f"{n} exceeds sieve limit {table.limit}")
    return table


# ---------------------------------------------------------------------------
# R(q) and friends
# ---------------------------------------------------------------------------


def hl_R(q: int, table: PrimeTable | None = None) -> float:
    if q < 2:
        raise DomainError("R(q) needs q >= 2")
    prod = 2.0 * C2
    for p in factorize(q, table).primes:
        if p > 2:
            prod *= (p - 1) / (p - 2)
    return prod


def hl_g_count_estimate(q: int, table: PrimeTable | None = None) -> float:
    """R(q) q / ln^2 q.

    With R carrying the factor 2, this estimates *ordered* prime pairs.
    """
    if q < 4 or q % 2:
        raise DomainError("the pair-count estimate needs an even q >= 4")
    return hl_R(q, table) * q / math.log(q) ** 2


def epsilon(q: int, table: PrimeTable | None = None) -> float:
    """psi(q)/q - e^gamma ln ln q."""
    if q < 2:
        raise DomainError("epsilon needs q >= 2")
    return dedekind_psi(q, table) / q - EXP_GAMMA * math.log(math.log(q))


def x_ratio(q: int, table: PrimeTable | None = None) -> float:
    """R(q) / (zeta(2) psi(q)/q), which stays below 1 for even q."""
    if q < 2 or q % 2:
        raise DomainError("x(q) is defined for even q >= 2")
    return hl_R(q, table) / (ZETA2 * dedekind_psi(q, table) / q)


# ---------------------------------------------------------------------------
# primorials
# ---------------------------------------------------------------------------


def _log_R_terms(primes: Iterable[int]) -> Iterator[float]:
    for p in primes:
        d = 1.0 / (p - 1)
        yield math.log1p(d) - math.log1p(-d * d)


def hl_R_primorial(r: int, table: PrimeTable | None = None) -> float:
    """ln R(N_r)."""
    if r < 1:
        raise DomainError("primorial order must be >= 1")
    if table is None:
        table = default_table()
    if r > len(table):
        raise CapacityError(f"p_{r} lies beyond sieve limit {table.limit}")
    terms = [math.log(2.0), math.log(C2)]
    terms.extend(_log_R_terms(table.primes[1:r].tolist()))
    return math.fsum(terms)


def _record(r: int, p_r: int, log_N: float, R_log: float) -> PrimorialRecord:
    u = math.exp(R_log) / math.log(log_N)
    return PrimorialRecord(r, p_r, log_N, R_log, u, u - EXP_GAMMA)


def u_ratio(r: int, table: PrimeTable | None = None) -> PrimorialRecord:
    """u_r = R(N_r) / ln ln N_r with its bookkeeping."""
    if r < 2:
        raise DomainError("u_r needs r >= 2 so that ln ln N_r > 0")
    if table is None:
        table = default_table()
    log_N = primorial_log(r, table)
    return _record(r, table.nth(r), log_N, hl_R_primorial(r, table))


def primorial_records(max_r: int, table: PrimeTable | None = None) -> Iterator[PrimorialRecord]:
    """Stream records for r = 2..max_r using running compensated sums."""
    if max_r < 2:
        raise DomainError("max_r must be >= 2")
    if table is None:
        table = default_table()
    if max_r > len(table):
        raise CapacityError(f"p_{max_r} lies beyond sieve limit {table.limit}")
    primes = table.primes[:max_r].tolist()
    log_N = NeumaierSum()
    log_R = NeumaierSum()
    log_R.add(math.log(2.0))
    log_R.add(math.log(C2))
    log_N.add(math.log(2.0))
    for r, (p, term) in enumerate(zip(primes[1:], _log_R_terms(primes[1:])), start=2):
        log_N.add(math.log(p))
        log_R.add(term)
        yield _record(r, p, log_N.value, log_R.value)


def conjecture1_scan(max_r: int, table: PrimeTable | None = None) -> ScanReport:
    """Look for r in [2, max_r] with u_r <= e^gamma."""
    bad = [rec.r for rec in primorial_records(max_r, table) if rec.u_minus_eg <= 0.0]
    return ScanReport(bound=max_r, violations=tuple(bad), checked=max_r - 1)


def theorem2_check(r: int, table: PrimeTable | None = None) -> bool:
    """psi(N_r) / (N_r ln ln N_r) > e^gamma / zeta(2), evaluated in log space."""
    if r <= 2:
        raise DomainError("the primorial psi inequality is stated for r > 2")
    if table is None:
        table = default_table()
    if r > len(table):
        raise CapacityError(f"p_{r} lies beyond sieve limit {table.limit}")
    primes = table.primes[:r].astype(np.float64)
    log_ratio = math.fsum(np.log1p(1.0 / primes).tolist())
    lhs = log_ratio - math.log(math.log(primorial_log(r, table)))
    return lhs > math.log(EXP_GAMMA) - math.log(ZETA2)


# ---------------------------------------------------------------------------
# the f and g functions of the equivalence argument
# ---------------------------------------------------------------------------


def nicolas_f(x: float, table: PrimeTable | None = None) -> float:
    """e^gamma ln theta(x) prod_{p<=x} (1 - 1/p).

    For 2 <= x < 3, theta(x) = ln 2 < 1 and the value is negative; it is
    still returned, with a :class:`DegenerateInputWarning`.
    """
    if x < 2:
        raise DomainError("f(x) needs x >= 2")
    if table is None:
        table = default_table()
    theta = chebyshev_theta(x, table)
    if theta <= 1.0:
        warnings.warn(f"theta({x}) <= 1, ln theta is not positive", DegenerateInputWarning, stacklevel=2)
    k = table.prime_count(x)
    p = table.primes[:k].astype(np.float64)
    log_mertens = math.fsum(np.log1p(-1.0 / p).tolist())
    return EXP_GAMMA * math.log(theta) * math.exp(log_mertens)


def hl_g_function(x: float, table: PrimeTable | None = None) -> float:
    """(e^gamma / 2 C2) ln theta(x) prod_{3<=p<=x} (p-2)/(p-1).

    The p = 2 factor is left out, since it vanishes.
    """
    if x < 3:
        raise DomainError("g(x) needs x >= 3")
    if table is None:
        table = default_table()
    theta = chebyshev_theta(x, table)
    k = table.prime_count(x)
    p = table.primes[1:k].astype(np.float64)
    log_prod = math.fsum(np.log1p(-1.0 / (p - 1.0)).tolist())
    return EXP_GAMMA / (2.0 * C2) * math.log(theta) * math.exp(log_prod)


# ---------------------------------------------------------------------------
# range scans
# ---------------------------------------------------------------------------


def epsilon_table(limit: int, table: PrimeTable | None = None) -> np.ndarray:
    """epsilon(q) for 0 <= q <= limit; entries 0 and 1 are NaN."""
    psi = dedekind_psi_table(limit, _table_for(limit, table))
    q = np.arange(limit + 1, dtype=np.float64)
    eps = np.full(limit + 1, np.nan)
    eps[2:] = psi[2:] / q[2:] - EXP_GAMMA * np.log(np.log(q[2:]))
    return eps


def theorem1_scan(limit: int, table: PrimeTable | None = None) -> ScanReport:
    """Find every q <= limit with epsilon(q) > 0.

    ``violations`` lists members of the satisfied set outside the expected
    set {2,3,4,5,6,8,10,12,18,30}.
    """
    if limit < 2:
        raise DomainError("limit must be >= 2")
    eps = epsilon_table(limit, table)
    hits = tuple(int(q) for q in np.flatnonzero(eps[2:] > 0) + 2)
    extra = tuple(q for q in hits if q not in INEQUALITY_SET)
    return ScanReport(bound=limit, satisfied_set=hits, violations=extra, checked=limit - 1)


def log_x_table(limit: int, table: PrimeTable | None = None) -> np.ndarray:
    """ln x(q) for every q <= limit (odd entries and q < 2 are NaN)."""
    table = _table_for(limit, table)
    logx = np.zeros(limit + 1)
    logx[2::2] = math.log(2.0 * C2) - math.log(ZETA2) - math.log(1.5)
    for p in table.primes[1:][table.primes[1:] <= limit].tolist():
        logx[2 * p :: 2 * p] += math.log((p - 1) / (p - 2)) - math.log1p(1.0 / p)
    logx[1::2] = np.nan
    logx[0] = np.nan
    return logx


def proposition2_scan(limit: int, table: PrimeTable | None = None) -> ScanReport:
    """Check x(q) < 1 for every even q <= limit."""
    if limit < 2:
        raise DomainError("limit must be >= 2")
    logx = log_x_table(limit, table)
    evens = np.arange(2, limit + 1, 2)
    bad = evens[logx[evens] >= 0.0]
    return ScanReport(bound=limit, violations=tuple(int(q) for q in bad), checked=len(evens))


def _left_to_right_maxima(qs: np.ndarray, values: np.ndarray) -> list[int]:
    out: list[int] = []
    best = -math.inf
    for q, v in zip(qs.tolist(), values.tolist()):
        if v > best:
            best = v
            out.append(q)
    return out


def x_champions(limit: int, table: PrimeTable | None = None) -> list[int]:
    """Left-to-right maxima of x over even q <= limit."""
    if limit < 2:
        raise DomainError("limit must be >= 2")
    logx = log_x_table(limit, table)
    evens = np.arange(2, limit + 1, 2)
    return _left_to_right_maxima(evens, logx[evens])
