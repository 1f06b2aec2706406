"""Finite verification of the integer decomposition property."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .ehrhart import lattice_points
from .errors import DomainError, PreconditionError
from .exact_linalg import Vector
from .polytope import Location, Polytope, contains_point


@dataclass(frozen=True)
class IdpLevel:
    c: int
    points_checked: int
    failures: tuple[Vector, ...]

    @property
    def holds(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class IdpReport:
    c_max: int
    per_level: tuple[IdpLevel, ...]

    @property
    def holds_up_to_c_max(self) -> bool:
        return all(level.holds for level in self.per_level)


def _add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=1024)
def sumset(p: Polytope, c: int) -> frozenset[Vector]:
    """All sums of ``c`` lattice points of ``p``."""
    if c == 1:
        return frozenset(lattice_points(p, 1))
    base = lattice_points(p, 1)
    prev = sumset(p, c - 1)
    return frozenset(_add(s, x) for s in prev for x in base)


def idp_check(p: Polytope, c_max: int) -> IdpReport:
    """Compare the c-fold sumset of ``P ∩ Z^d`` with ``cP ∩ Z^d`` for c = 1..c_max.

    Every level is evaluated even after a failure.
    """
    if c_max < 1:
        raise DomainError("c_max must be at least 1")
    levels = []
    for c in range(1, c_max + 1):
        target = lattice_points(p, c)
        reach = sumset(p, c)
        failures = tuple(z for z in target if z not in reach)
        levels.append(IdpLevel(c, len(target), failures))
    return IdpReport(c_max, tuple(levels))


def _preference(z: Sequence[int], c: int):
    # closest to the average z / c first; ties go to the lexicographically larger point
    def key(x: Vector):
        dist = sum((Fraction(zi, c) - xi) ** 2 for zi, xi in zip(z, x))
        return (dist, tuple(-xi for xi in x))
    return key


def decompose_point(p: Polytope, z: Sequence[int], c: int) -> tuple[Vector, ...] | None:
    """Write ``z`` as a sum of ``c`` lattice points of ``p``, or return None.

    Greedy over reachable sets: the first part is the lattice point nearest
    the average ``z / c`` (ties: lexicographically larger) whose remainder is
    still a sum of ``c - 1`` points; then recurse.  Deterministic.
    """
    z = tuple(int(x) for x in z)
    if c < 1:
        raise DomainError("c must be positive")
    if contains_point(p, z, c) is Location.OUTSIDE:
        raise PreconditionError(f"{z} is not in {c}P")
    if z not in sumset(p, c):
        return None
    parts: list[Vector] = []
    rest = z
    for k in range(c, 1, -1):
        candidates = sorted(lattice_points(p, 1), key=_preference(rest, k))
        reach = sumset(p, k - 1)
        for x in candidates:
            r = tuple(a - b for a, b in zip(rest, x))
            if r in reach:
                parts.append(x)
                rest = r
                break
    parts.append(rest)
    return tuple(parts)
