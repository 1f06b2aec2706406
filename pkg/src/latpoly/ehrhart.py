"""Lattice-point counts of dilates, the Ehrhart polynomial and the delta-vector."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .errors import DomainError, InternalInconsistencyError
from .exact_linalg import Vector
from .polytope import Polytope, normalized_volume


@dataclass(frozen=True)
class LatticePointCount:
    m: int
    total: int
    boundary: int

    @property
    def interior(self) -> int:
        return self.total - self.boundary


@dataclass(frozen=True)
class DeltaVector:
    delta: tuple[int, ...]
    d: int

    def __getitem__(self, i: int) -> int:
        return self.delta[i]

    def __len__(self) -> int:
        return len(self.delta)

    @property
    def is_palindromic(self) -> bool:
        return self.delta == self.delta[::-1]


@dataclass(frozen=True)
class EhrhartPolynomial:
    """``L(m) = sum(coefficients[i] * m**i)``."""

    coefficients: tuple[Fraction, ...]

    def __call__(self, m: int) -> Fraction:
        return sum((c * m**i for i, c in enumerate(self.coefficients)), Fraction(0))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for i in reversed(range(len(self.coefficients))):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("m" if i == 1 else f"m^{i}")
            coef = str(c)
            if mono and c == 1:
                coef = ""
            elif mono:
                coef = f"({c})*" if c.denominator != 1 else f"{c}*"
            terms.append(coef + mono if mono else coef)
        return " + ".join(terms) if terms else "0"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _scan(p: Polytope, m: int, want_list: bool):
    """Walk mP line by line along the last coordinate.

    For each integer prefix the feasible range of the last coordinate is an
    interval given by the facet inequalities; boundary points are the ones
    where some inequality is tight.
    """
    d = p.dim
    lo = [m * min(v[i] for v in p.vertices) for i in range(d)]
    hi = [m * max(v[i] for v in p.vertices) for i in range(d)]
    ineqs = [(f.normal[:-1], f.normal[-1], m * f.offset) for f in p.facets]
    total = 0
    boundary = 0
    points: list[Vector] = []
    for prefix in product(*(range(lo[i], hi[i] + 1) for i in range(d - 1))):
        a_lo, a_hi = lo[-1], hi[-1]
        tight: set[int] = set()
        full_tight = False
        for head, last, rhs in ineqs:
            slack = rhs - sum(x * y for x, y in zip(head, prefix))
            if last == 0:
                if slack < 0:
                    break
                if slack == 0:
                    full_tight = True
                continue
            if last > 0:
                a_hi = min(a_hi, slack // last)
            else:
                a_lo = max(a_lo, _ceil_div(slack, last))
            if slack % last == 0:
                tight.add(slack // last)
        else:
            if a_lo > a_hi:
                continue
            count = a_hi - a_lo + 1
            total += count
            if full_tight:
                nb = count
            else:
                nb = sum(1 for t in tight if a_lo <= t <= a_hi)
            boundary += nb
            if want_list:
                points.extend(prefix + (t,) for t in range(a_lo, a_hi + 1))
    return total, boundary, points


def count_lattice_points(p: Polytope, m: int = 1, want_list: bool = False):
    """Exact ``|mP ∩ Z^d|`` and boundary count.

    With ``want_list`` a pair ``(count, points)`` is returned, points in
    lexicographic order.
    """
    if m < 0:
        raise DomainError("dilation must be nonnegative")
    if m == 0:
        # 0P is the origin; counted as a boundary point by convention
        count = LatticePointCount(0, 1, 1)
        return (count, [(0,) * p.dim]) if want_list else count
    total, boundary, points = _scan(p, m, want_list)
    count = LatticePointCount(m, total, boundary)
    return (count, points) if want_list else count


@lru_cache(maxsize=4096)
def lattice_points(p: Polytope, m: int = 1) -> tuple[Vector, ...]:
    return tuple(count_lattice_points(p, m, want_list=True)[1])


@lru_cache(maxsize=4096)
def ehrhart_counts(p: Polytope, upto: int) -> tuple[int, ...]:
    """``(L_P(0), ..., L_P(upto))``."""
    return tuple(count_lattice_points(p, m).total for m in range(upto + 1))


def delta_from_counts(counts: tuple[int, ...], d: int) -> tuple[int, ...]:
    return tuple(
        sum((-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1))
        for i in range(d + 1)
    )


@lru_cache(maxsize=4096)
def delta_vector(p: Polytope) -> DeltaVector:
    d = p.dim
    delta = delta_from_counts(ehrhart_counts(p, d), d)
    if any(x < 0 for x in delta) or delta[0] != 1:
        raise InternalInconsistencyError(f"impossible delta-vector {delta} for {p}")
    return DeltaVector(delta, d)


def _interpolate(ys: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Coefficients of the polynomial through ``(m, ys[m])`` for m = 0..n-1."""
    n = len(ys)
    coeffs = [Fraction(0)] * n
    for k in range(n):
        # Lagrange basis for node k, expanded as a coefficient list
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == k:
                continue
            denom *= k - j
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= j * basis[i + 1]
        for i in range(n):
            coeffs[i] += Fraction(ys[k]) * basis[i] / denom
    return tuple(coeffs)


def ehrhart_polynomial(p: Polytope) -> EhrhartPolynomial:
    d = p.dim
    coeffs = _interpolate(ehrhart_counts(p, d))
    expected = Fraction(normalized_volume(p), factorial(d))
    if coeffs[-1] != expected or coeffs[0] != 1:
        raise InternalInconsistencyError(
            f"Ehrhart leading coefficient {coeffs[-1]} != vol {expected}"
        )
    return EhrhartPolynomial(coeffs)


def check_volume_identity(p: Polytope) -> bool:
    """Sum of the delta-vector equals the normalized volume."""
    return sum(delta_vector(p).delta) == normalized_volume(p)
