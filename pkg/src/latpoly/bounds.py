"""Closed-form face-count and volume bounds, and evaluation of the
conjectured sharp volume bound for smooth Fano polytopes over a dataset."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .ehrhart import count_lattice_points, delta_vector
from .errors import DegenerateInputError, DomainError
from .polytope import FVector, Polytope, is_centrally_symmetric, lattice_equivalent, normalized_volume
from .reflexive import is_reflexive, is_smooth_fano

# above this dimension attainer equivalence is reported as undecided
EQUIVALENCE_MAX_DIM = 4

N_AS_DIMENSION_NOTE = (
    "the conjectured bound is stated in terms of an unbound n; it is evaluated here with n = d"
)
HALF_FACTOR_NOTE = (
    "for even d the attainment value is also quoted without the factor 1/2; "
    "the bound with the factor 1/2 is used here"
)


def _check_nd(n: int, d: int) -> None:
    if d < 2:
        raise DomainError(f"dimension must be at least 2, got {d}")
    if n < d + 1:
        raise DomainError(f"need n >= d + 1, got n={n}, d={d}")


def cyclic_facet_count(n: int, d: int) -> int:
    """Number of facets of the cyclic d-polytope with n vertices."""
    _check_nd(n, d)
    return comb(n - (d + 1) // 2, n - d) + comb(n - (d + 2) // 2, n - d)


def stacked_f_vector(n: int, d: int) -> FVector:
    """f-vector of a stacked d-polytope with n vertices."""
    _check_nd(n, d)
    f = [n]
    for k in range(1, d - 1):
        f.append(comb(d, k) * n - comb(d + 1, k + 1) * k)
    f.append((d - 1) * n - (d + 1) * (d - 2))
    return FVector(tuple(f))


def mcmullen_h_bound(n: int, d: int, i: int) -> int:
    _check_nd(n, d)
    if not 0 <= i <= d:
        raise DomainError(f"index {i} outside 0..{d}")
    return comb(n - d + i - 1, i)


def boundary_point_count(p: Polytope) -> int:
    return count_lattice_points(p, 1).boundary


def is_unimodal(seq: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1


@dataclass(frozen=True)
class UnimodalityResult:
    unimodal: bool
    mcmullen_ok: bool
    smooth_fano: bool  # False means the bounds were evaluated outside their hypothesis


def check_delta_unimodal(p: Polytope) -> UnimodalityResult:
    delta = delta_vector(p).delta
    d = p.dim
    n = boundary_point_count(p)
    ok = all(delta[i] <= mcmullen_h_bound(n, d, i) for i in range(d // 2 + 1))
    return UnimodalityResult(is_unimodal(delta), ok, is_smooth_fano(p))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: int
    upper: int
    actual: int
    within: bool
    notes: tuple[str, ...] = ()


def check_volume_sandwich(p: Polytope) -> BoundsReport:
    d = p.dim
    n = boundary_point_count(p)
    lower = (d - 1) * n - (d + 1) * (d - 2)
    upper = cyclic_facet_count(n, d)
    actual = normalized_volume(p)
    notes = []
    if not is_reflexive(p):
        notes.append("not reflexive: neither bound is claimed")
    elif not is_smooth_fano(p):
        notes.append("reflexive but not smooth Fano: only the lower bound is claimed")
    return BoundsReport(n, lower, upper, actual, lower <= actual <= upper, tuple(notes))


def casagrande_volume_bound(d: int) -> int:
    if d < 2:
        raise DomainError("dimension must be at least 2")
    return 2 * comb(5 * d // 2, 2 * d)


@dataclass(frozen=True)
class SondowCheck:
    lower: Fraction
    value: int
    upper: Fraction

    @property
    def holds(self) -> bool:
        return self.lower <= self.value <= self.upper


def sondow_bounds_check(r: Fraction | int, s: int) -> SondowCheck:
    """Evaluate ``(1/4rs) A**s <= C((r+1)s, s) <= A**s`` with ``A = (r+1)**(r+1) / r**r``.

    When ``(r+1)s`` is an integer so is ``rs``, hence ``A**s`` equals
    ``(r+1)**((r+1)s) / r**(rs)``: a ratio of rational powers with integer
    exponents, so no real powers are needed.
    """
    r = Fraction(r)
    if r < 1:
        raise DomainError("r must be at least 1")
    if s < 1:
        raise DomainError("s must be a positive integer")
    top = (r + 1) * s
    if top.denominator != 1:
        raise DomainError(f"(r+1)s = {top} is not an integer")
    big = int(top)
    small = int(r * s)
    upper = (r + 1) ** big / r**small
    lower = upper / (4 * r * s)
    return SondowCheck(lower, comb(big, s), upper)


def conjecture_bound(d: int) -> int:
    if d < 2:
        raise DomainError("dimension must be at least 2")
    return (3 - (-1) ** d) * 6 ** (d // 2) // 2


def conjecture_vertex_count(d: int) -> int:
    return (6 * d + (-1) ** d - 1) // 2


@dataclass
class ConjectureRecord:
    dim: int
    max_normalized_volume: int
    attainers: list[str]
    bound: int
    attainer_vertex_counts: list[int]
    centrally_symmetric_flags: list[bool]
    attainer_classes: int | None  # None: equivalence not decided
    skipped: list[str] = field(default_factory=list)
    claims: dict[str, bool | None] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _classes(polys: list[Polytope]) -> list[list[int]]:
    groups: list[list[int]] = []
    for i, p in enumerate(polys):
        for g in groups:
            if lattice_equivalent(polys[g[0]], p):
                g.append(i)
                break
        else:
            groups.append([i])
    return groups


def evaluate_conjecture(dataset: Sequence[tuple[str, Polytope]], d: int) -> ConjectureRecord:
    """Test the conjectured sharp bound and its attainer description on ``dataset``.

    Entries that are not d-dimensional smooth Fano are skipped and listed.
    Attainers are grouped up to lattice equivalence, so duplicates in the
    data do not inflate the attainer count.
    """
    bound = conjecture_bound(d)
    good: list[tuple[str, Polytope, int]] = []
    skipped = []
    for ident, p in dataset:
        if p.dim != d or not is_smooth_fano(p):
            skipped.append(ident)
            continue
        good.append((ident, p, normalized_volume(p)))
    if not good:
        raise DegenerateInputError(f"no {d}-dimensional smooth Fano polytopes in dataset")
    best = max(v for _, _, v in good)
    att = [(ident, p) for ident, p, v in good if v == best]

    classes: list[list[int]] | None = None
    if d <= EQUIVALENCE_MAX_DIM:
        classes = _classes([p for _, p in att])
    reps = [att[g[0]][1] for g in classes] if classes is not None else [p for _, p in att]

    f0 = conjecture_vertex_count(d)
    claims: dict[str, bool | None] = {
        "bound_holds": best <= bound,
        "sharp": best == bound,
        "attainer_vertex_count": all(len(p.vertices) == f0 for p in reps),
    }
    sym = [is_centrally_symmetric(p) for p in reps]
    if classes is None:
        claims["attainer_count"] = None
        claims["symmetry"] = None
    elif d % 2:
        claims["attainer_count"] = len(classes) == 2
        claims["symmetry"] = sum(sym) == 1
    else:
        claims["attainer_count"] = len(classes) == 1
        claims["symmetry"] = all(sym)
    notes = [N_AS_DIMENSION_NOTE]
    if d % 2 == 0:
        notes.append(HALF_FACTOR_NOTE)
    if classes is None:
        notes.append(f"attainer equivalence not decided for d > {EQUIVALENCE_MAX_DIM}")
    if not claims["sharp"]:
        notes.append(f"bound {bound} not attained in dataset (max {best})")
    return ConjectureRecord(
        dim=d,
        max_normalized_volume=best,
        attainers=[ident for ident, _ in att],
        bound=bound,
        attainer_vertex_counts=[len(p.vertices) for _, p in att],
        centrally_symmetric_flags=[is_centrally_symmetric(p) for _, p in att],
        attainer_classes=len(classes) if classes is not None else None,
        skipped=skipped,
        claims=claims,
        notes=notes,
    )
