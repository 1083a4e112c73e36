"""Symplectic geometry of the module Z_q^2.

A point ``(b, c)`` stands for the class of ``X^b Z^c`` in the central
quotient of the single-qudit Pauli group, which is isomorphic to the
additive group Z_q^2.  Two classes commute exactly when the symplectic
product ``b c' - b' c`` vanishes mod q.

Internally points are plain ``(b, c)`` tuples; :class:`LatticePoint` is the
validated public form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from qudit_goldbach.errors import CapacityError, DomainError

Point = tuple[int, int]

#: Largest dimension for the dense matrix checks.
MAX_MATRIX_Q = 64


@dataclass(frozen=True, order=True)
class LatticePoint:
    b: int
    c: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise DomainError("modulus must be >= 1")
        if not (0 <= self.b < self.q and 0 <= self.c < self.q):
            raise DomainError(f"({self.b}, {self.c}) is not reduced mod {self.q}")

    @classmethod
    def of(cls, b: int, c: int, q: int) -> LatticePoint:
        return cls(b % q, c % q, q)

    @property
    def pair(self) -> Point:
        return (self.b, self.c)


@dataclass(frozen=True)
class Submodule:
    q: int
    elements: tuple[Point, ...]

    @classmethod
    def from_points(cls, q: int, points: Iterable[Point]) -> Submodule:
        return cls(q, tuple(sorted(set(points))))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: object) -> bool:
        if isinstance(p, LatticePoint):
            p = p.pair
        return p in self._set

    @property
    def _set(self) -> frozenset[Point]:
        return frozenset(self.elements)

    def is_closed(self) -> bool:
        s = self._set
        q = self.q
        if (0, 0) not in s:
            return False
        for (b, c), (d, e) in itertools.product(self.elements, repeat=2):
            if ((b + d) % q, (c + e) % q) not in s:
                return False
        return all(((u * b) % q, (u * c) % q) in s for u in range(q) for b, c in self.elements)

    def is_isotropic(self) -> bool:
        q = self.q
        return all(_delta(v, w, q) == 0 for v, w in itertools.combinations(self.elements, 2))


@dataclass(frozen=True)
class IsotropicLine:
    """A Lagrangian submodule: q points, pairwise perpendicular."""

    module: Submodule

    @property
    def q(self) -> int:
        return self.module.q

    @property
    def points(self) -> tuple[Point, ...]:
        return self.module.elements

    def nonzero(self) -> tuple[Point, ...]:
        return tuple(p for p in self.points if p != (0, 0))

    @property
    def is_free(self) -> bool:
        """True when the line is generated by a single admissible vector."""
        return any(math.gcd(b, c, self.q) == 1 for b, c in self.points)

    def __len__(self) -> int:
        return len(self.module)


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Canonical admissible generator: the smallest unit multiple in lex order."""

    b: int
    c: int
    q: int

    def submodule(self) -> Submodule:
        return cyclic_submodule(LatticePoint(self.b, self.c, self.q))


def _delta(v: Point, w: Point, q: int) -> int:
    return (v[0] * w[1] - w[0] * v[1]) % q


def symplectic_product(p1: LatticePoint, p2: LatticePoint) -> int:
    """(b1 c2 - b2 c1) mod q."""
    if p1.q != p2.q:
        raise DomainError(f"moduli differ: {p1.q} vs {p2.q}")
    return _delta(p1.pair, p2.pair, p1.q)


def _orbit(q: int, b: int, c: int) -> frozenset[Point]:
    return frozenset(((u * b) % q, (u * c) % q) for u in range(q))


def cyclic_submodule(p: LatticePoint) -> Submodule:
    """Z_q (b, c) = {(ub, uc) : u in Z_q}."""
    return Submodule.from_points(p.q, _orbit(p.q, p.b, p.c))


def is_admissible(p: LatticePoint) -> bool:
    """u -> (ub, uc) is injective, i.e. gcd(b, c, q) = 1."""
    return math.gcd(p.b, p.c, p.q) == 1


def _units(q: int) -> list[int]:
    return [u for u in range(1, q) if math.gcd(u, q) == 1] if q > 1 else [0]


def canonical_generator(b: int, c: int, q: int) -> Point:
    return min(((u * b) % q, (u * c) % q) for u in _units(q))


def projective_line(q: int) -> list[ProjectivePoint]:
    """One canonical representative per unit-orbit of admissible vectors."""
    if q < 2:
        raise DomainError("q must be >= 2")
    reps = {
        canonical_generator(b, c, q)
        for b in range(q)
        for c in range(q)
        if math.gcd(b, c, q) == 1
    }
    return [ProjectivePoint(b, c, q) for b, c in sorted(reps)]


def _sum_module(q: int, a: frozenset[Point], b: frozenset[Point]) -> frozenset[Point]:
    return frozenset(((x + z) % q, (y + w) % q) for x, y in a for z, w in b)


def enumerate_isotropic_lines(q: int) -> list[IsotropicLine]:
    """All Lagrangian submodules of Z_q^2, in canonical order.

    Every submodule of Z_q^2 is generated by two vectors, so it is a sum
    C(v) + C(w) of cyclic submodules.  Generator pairs are therefore taken
    over distinct cyclic submodules rather than over all of (Z_q^2)^2; the
    result is the same as :func:`isotropic_lines_bruteforce`.
    """
    if q < 2:
        raise DomainError("q must be >= 2")
    cyclics: dict[frozenset[Point], Point] = {}
    for b in range(q):
        for c in range(q):
            if (b, c) != (0, 0):
                cyclics.setdefault(_orbit(q, b, c), (b, c))
    items = list(cyclics.items())
    found: set[frozenset[Point]] = {mod for mod in cyclics if len(mod) == q}
    for (m1, v), (m2, w) in itertools.combinations(items, 2):
        if _delta(v, w, q):
            continue
        # |C1 + C2| = |C1| |C2| / |C1 n C2|
        if len(m1) * len(m2) != q * len(m1 & m2):
            continue
        found.add(_sum_module(q, m1, m2))
    return _as_lines(q, found)


def isotropic_lines_bruteforce(q: int) -> list[IsotropicLine]:
    """Reference enumeration over every generator pair (v, w) in (Z_q^2)^2."""
    if q < 2:
        raise DomainError("q must be >= 2")
    pts = [(b, c) for b in range(q) for c in range(q)]
    found: set[frozenset[Point]] = set()
    for v, w in itertools.product(pts, repeat=2):
        mod = frozenset(
            ((s * v[0] + t * w[0]) % q, (s * v[1] + t * w[1]) % q) for s in range(q) for t in range(q)
        )
        if len(mod) == q and all(_delta(x, y, q) == 0 for x, y in itertools.combinations(mod, 2)):
            found.add(mod)
    return _as_lines(q, found)


def _as_lines(q: int, modules: Iterable[frozenset[Point]]) -> list[IsotropicLine]:
    subs = sorted((Submodule.from_points(q, m) for m in modules), key=lambda s: s.elements)
    return [IsotropicLine(s) for s in subs]


# ---------------------------------------------------------------------------
# dense matrix checks
# ---------------------------------------------------------------------------


def weyl_matrices(q: int) -> tuple[np.ndarray, np.ndarray, complex]:
    """Shift X, clock Z and omega = exp(2 pi i / q)."""
    if q < 2:
        raise DomainError("q must be >= 2")
    if q > MAX_MATRIX_Q:
        raise CapacityError(f"dense {q}x{q} check limited to q <= {MAX_MATRIX_Q}")
    omega = np.exp(2j * np.pi / q)
    x = np.roll(np.eye(q, dtype=complex), 1, axis=0)
    z = np.diag(omega ** np.arange(q))
    return x, z, omega


def _pauli(x: np.ndarray, z: np.ndarray, b: int, c: int) -> np.ndarray:
    return np.linalg.matrix_power(x, b) @ np.linalg.matrix_power(z, c)


def _sample_pairs(q: int, samples: int, seed: int) -> list[tuple[Point, Point]]:
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, q, size=(samples, 4)).tolist()
    pairs = [((b, c), (b2, c2)) for b, c, b2, c2 in draws]
    return [((1, 0), (0, 1))] + pairs


def verify_weyl_pair(
    q: int, tolerance: float = 1e-12, samples: int = 32, seed: int = 0
) -> bool:
    """ZX = omega XZ, plus group-commutator phases on sampled exponent pairs.

    For A = X^b Z^c and B = X^b' Z^c' the commutator A B A^-1 B^-1 must
    equal omega^(c b' - c' b) I.
    """
    x, z, omega = weyl_matrices(q)
    if np.max(np.abs(z @ x - omega * x @ z)) >= tolerance:
        return False
    eye = np.eye(q)
    for (b, c), (b2, c2) in _sample_pairs(q, samples, seed):
        a = _pauli(x, z, b, c)
        m = _pauli(x, z, b2, c2)
        comm = a @ m @ a.conj().T @ m.conj().T
        phase = omega ** ((c * b2 - c2 * b) % q)
        if np.max(np.abs(comm - phase * eye)) >= tolerance:
            return False
        commute = np.max(np.abs(a @ m - m @ a)) < tolerance
        if commute != (_delta((b, c), (b2, c2), q) == 0):
            return False
    return True


def verify_central_quotient(q: int, tolerance: float = 1e-12) -> bool:
    """(b, c) -> X^b Z^c is a bijection onto classes mod phases, additive up to phase.

    Checks X^b Z^c X^b' Z^c' = omega^(c b') X^(b+b') Z^(c+c') for every pair
    of exponent vectors, and that distinct exponents give trace-orthogonal
    matrices (so no two are phase multiples).
    """
    x, z, omega = weyl_matrices(q)
    mats = {(b, c): _pauli(x, z, b, c) for b in range(q) for c in range(q)}
    for (b, c), a in mats.items():
        for (b2, c2), m in mats.items():
            target = omega ** ((c * b2) % q) * mats[((b + b2) % q, (c + c2) % q)]
            if np.max(np.abs(a @ m - target)) >= tolerance:
                return False
    flat = np.array([m.ravel() for m in mats.values()])
    gram = flat.conj() @ flat.T
    return bool(np.max(np.abs(gram - q * np.eye(q * q))) < tolerance * q * q)
