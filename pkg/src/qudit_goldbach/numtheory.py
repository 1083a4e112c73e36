"""Sieve-backed arithmetic functions, embedded constants and primorial logs.

Every logarithm here is natural.  Sums of many logarithms go through
:func:`math.fsum` (exactly rounded) or :class:`NeumaierSum` when partial
sums are needed, because the primorial differences of interest are of order 1e-4 on
top of quantities of order 1e6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

from qudit_goldbach.errors import CapacityError, DomainError

#: Default sieve bound; covers p_100000 = 1299709.
DEFAULT_LIMIT = 1_300_000


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

_GAMMA_STR = "0.57721566490153286060651209008240243104215933593992"
_EXP_GAMMA_STR = "1.78107241799019798523650410310717954916964521430343"
_ZETA2_STR = "1.64493406684822643647241516664602518921894990120680"
_C2_STR = "0.66016181584686957392781211001455577843262336028473"


@dataclass(frozen=True)
class Constants:
    """High-precision literals; floats are derived from these strings."""

    gamma: Decimal = Decimal(_GAMMA_STR)
    exp_gamma: Decimal = Decimal(_EXP_GAMMA_STR)
    zeta2: Decimal = Decimal(_ZETA2_STR)
    c2: Decimal = Decimal(_C2_STR)


CONSTANTS = Constants()

GAMMA = float(CONSTANTS.gamma)
EXP_GAMMA = float(CONSTANTS.exp_gamma)
ZETA2 = float(CONSTANTS.zeta2)
C2 = float(CONSTANTS.c2)


def verify_exp_gamma(digits: int = 25) -> bool:
    """Check exp(gamma) against the embedded e^gamma literal."""
    with localcontext() as ctx:
        ctx.prec = 60
        computed = CONSTANTS.gamma.exp()
        return abs(computed - CONSTANTS.exp_gamma) < Decimal(10) ** (-digits)


def verify_gamma(digits: int = 30) -> bool:
    """Check gamma against mpmath's independent evaluation."""
    import mpmath

    with mpmath.workdps(digits + 10):
        return abs(mpmath.mpf(_GAMMA_STR) - mpmath.euler) < mpmath.mpf(10) ** (-digits)


def verify_zeta2(digits: int = 30) -> bool:
    """Check zeta(2) against pi^2/6."""
    import mpmath

    with mpmath.workdps(digits + 10):
        return abs(mpmath.mpf(_ZETA2_STR) - mpmath.pi**2 / 6) < mpmath.mpf(10) ** (-digits)


def verify_c2(bound: int = 10**7) -> bool:
    """Bracket C2 by the partial product over 2 < p <= bound.

    The tail factor lies in [1 - 1/bound, 1], so the partial product P
    must satisfy P * (1 - 1/bound) <= C2 <= P.
    """
    p = _odd_primes(bound).astype(np.float64)
    log_partial = math.fsum(np.log1p(-1.0 / (p - 1.0) ** 2).tolist())
    log_c2 = math.log(C2)
    return log_partial + math.log1p(-1.0 / bound) <= log_c2 <= log_partial


def _odd_primes(bound: int) -> np.ndarray:
    # plain boolean sieve; avoids caching a large spf table
    mask = np.ones(bound + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask)[1:]


def verify_constants() -> dict[str, bool]:
    return {
        "gamma": verify_gamma(),
        "exp_gamma": verify_exp_gamma(),
        "zeta2": verify_zeta2(),
        "c2": verify_c2(),
    }


# ---------------------------------------------------------------------------
# sieve
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Primes up to ``limit`` with a smallest-prime-factor table.

    ``spf[n]`` is defined for ``2 <= n <= limit``; entries 0 and 1 are 0.
    Instances are never mutated after construction.
    """

    limit: int
    primes: np.ndarray
    spf: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)

    def is_prime(self, n: int) -> bool:
        if n > self.limit:
            raise CapacityError(f"{n} exceeds sieve limit {self.limit}")
        return n >= 2 and int(self.spf[n]) == n

    @cached_property
    def prime_mask(self) -> np.ndarray:
        mask = self.spf == np.arange(self.limit + 1)
        mask[:2] = False
        mask.setflags(write=False)
        return mask

    def prime_count(self, x: float) -> int:
        """Number of primes <= x."""
        if x > self.limit:
            raise CapacityError(f"{x} exceeds sieve limit {self.limit}")
        return int(np.searchsorted(self.primes, math.floor(x), side="right"))

    def nth(self, r: int) -> int:
        """The r-th prime, 1-based."""
        if r < 1:
            raise DomainError("prime index must be >= 1")
        if r > len(self.primes):
            raise CapacityError(f"p_{r} lies beyond sieve limit {self.limit}")
        return int(self.primes[r - 1])


@lru_cache(maxsize=4)
def primes_up_to(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes recording smallest prime factors."""
    if limit < 2:
        raise DomainError("sieve limit must be >= 2")
    spf = np.zeros(limit + 1, dtype=np.int64 if limit >= 2**31 else np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    idx = np.arange(limit + 1, dtype=np.int64)
    unset = spf == 0
    unset[:2] = False
    spf[unset] = idx[unset].astype(spf.dtype)
    primes = idx[unset]
    primes.setflags(write=False)
    spf.setflags(write=False)
    return PrimeTable(limit=limit, primes=primes, spf=spf)


def default_table() -> PrimeTable:
    return primes_up_to(DEFAULT_LIMIT)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# factorization and multiplicative functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def factorize(q: int, table: PrimeTable | None = None) -> Factorization:
    if q < 1:
        raise DomainError("factorize needs q >= 1")
    if table is None:
        table = default_table()
    out: dict[int, int] = {}
    n = q
    if n <= table.limit:
        while n > 1:
            p = int(table.spf[n])
            out[p] = out.get(p, 0) + 1
            n //= p
    else:
        for p in table.primes.tolist():
            if p * p > n:
                break
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d = int(table.primes[-1]) + 2
        while n > 1 and d * d <= n:
            while n % d == 0:
                out[d] = out.get(d, 0) + 1
                n //= d
            d += 2
        if n > 1:
            out[n] = out.get(n, 0) + 1
    return Factorization(q, tuple(sorted(out.items())))


def divisor_sigma(q: int, table: PrimeTable | None = None) -> int:
    """Sum of divisors, from the prime-power formula."""
    f = factorize(q, table)
    return math.prod((p ** (e + 1) - 1) // (p - 1) for p, e in f.factors)


def dedekind_psi(q: int, table: PrimeTable | None = None) -> int:
    """q * prod_{p | q} (1 + 1/p), exact."""
    f = factorize(q, table)
    return math.prod(p**e + p ** (e - 1) for p, e in f.factors)


def dedekind_psi_table(limit: int, table: PrimeTable | None = None) -> np.ndarray:
    """psi(n) for 0 <= n <= limit (entry 0 is 0), exact int64."""
    table = table if table is not None and table.limit >= limit else primes_up_to(max(limit, 2))
    psi = np.arange(limit + 1, dtype=np.int64)
    for p in table.primes[table.primes <= limit].tolist():
        seg = psi[p::p]
        seg //= p
        seg *= p + 1
    return psi


# ---------------------------------------------------------------------------
# log-space primorial arithmetic
# ---------------------------------------------------------------------------


class NeumaierSum:
    """Running compensated sum (Kahan-Babuska-Neumaier)."""

    __slots__ = ("_s", "_c")

    def __init__(self) -> None:
        self._s = 0.0
        self._c = 0.0

    def add(self, x: float) -> None:
        t = self._s + x
        if abs(self._s) >= abs(x):
            self._c += (self._s - t) + x
        else:
            self._c += (x - t) + self._s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


def running_sums(values: Iterable[float]) -> Iterator[float]:
    acc = NeumaierSum()
    for v in values:
        acc.add(v)
        yield acc.value


def chebyshev_theta(x: float, table: PrimeTable | None = None) -> float:
    """Sum of ln p over primes p <= x."""
    if x < 2:
        raise DomainError("chebyshev_theta needs x >= 2")
    if table is None:
        table = default_table()
    k = table.prime_count(x)
    return math.fsum(np.log(table.primes[:k].astype(np.float64)).tolist())


def primorial_log(r: int, table: PrimeTable | None = None) -> float:
    """ln N_r where N_r is the product of the first r primes."""
    if r < 1:
        raise DomainError("primorial order must be >= 1")
    if table is None:
        table = default_table()
    if r > len(table):
        raise CapacityError(f"p_{r} lies beyond sieve limit {table.limit}")
    return math.fsum(np.log(table.primes[:r].astype(np.float64)).tolist())


def primorial_scientific(r: int, table: PrimeTable | None = None) -> tuple[float, int]:
    """(mantissa, exponent) with mantissa * 10**exponent == N_r."""
    log10 = primorial_log(r, table) / math.log(10)
    exponent = math.floor(log10)
    mantissa = 10 ** (log10 - exponent)
    if mantissa >= 10.0:
        mantissa /= 10.0
        exponent += 1
    return mantissa, exponent
