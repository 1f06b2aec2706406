"""Reflexivity, smooth Fano polytopes and the equivalence suites tying them
to volumes, delta-vectors and h-vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exact_linalg as la
from .ehrhart import delta_vector
from .errors import PreconditionError, TheoremViolation, UnsupportedShapeError
from .polytope import (
    Polytope,
    boundary_faces,
    f_vector,
    h_vector,
    normalized_boundary_volume,
    normalized_volume,
    origin_in_interior,
)


@dataclass(frozen=True)
class ReflexivityReport:
    has_interior_origin: bool
    dual_is_lattice: bool
    volume_identity_holds: bool
    palindromic: bool

    @property
    def verdicts_agree(self) -> bool:
        return self.dual_is_lattice == self.volume_identity_holds == self.palindromic


@dataclass(frozen=True)
class SmoothFanoReport:
    is_simplicial: bool
    is_reflexive: bool
    facet_basis_ok: bool | None = None
    h_equals_delta: bool | None = None
    facets_equal_volume: bool | None = None
    h: tuple[int, ...] | None = None
    delta: tuple[int, ...] | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def applicable(self) -> bool:
        return self.is_simplicial and self.is_reflexive

    @property
    def verdicts_agree(self) -> bool:
        if not self.applicable:
            return True
        return self.facet_basis_ok == self.h_equals_delta == self.facets_equal_volume


def dual_polytope(p: Polytope) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices ``a / b`` of the polar ``{u : <u, v> <= 1 for all v in P}``.

    One vertex per facet ``<a, x> <= b``; sorted lexicographically.
    """
    if not origin_in_interior(p):
        raise PreconditionError("dual polytope needs the origin in the interior")
    return tuple(sorted(tuple(Fraction(x, f.offset) for x in f.normal) for f in p.facets))


def is_reflexive(p: Polytope) -> bool:
    # normals are primitive, so the dual vertex a/b is integral iff b == 1
    return origin_in_interior(p) and all(f.offset == 1 for f in p.facets)


def check_reflexive_equivalences(p: Polytope) -> ReflexivityReport:
    """Evaluate the three reflexivity criteria independently of each other."""
    if not origin_in_interior(p):
        raise PreconditionError("equivalence suite needs the origin in the interior")
    dual_ok = all(x.denominator == 1 for v in dual_polytope(p) for x in v)
    # d * vol(P) = vol(dP) after clearing factorials
    vol_ok = normalized_boundary_volume(p) == normalized_volume(p)
    pal = delta_vector(p).is_palindromic
    return ReflexivityReport(True, dual_ok, vol_ok, pal)


def facet_bases_unimodular(p: Polytope) -> bool:
    return all(
        la.is_unimodular_basis(p.facet_vertices(f), p.dim) for f in p.facets
    )


def is_smooth_fano(p: Polytope) -> bool:
    return p.is_simplicial and is_reflexive(p) and facet_bases_unimodular(p)


def is_smooth_vertex_cones(p: Polytope) -> bool:
    """Every vertex cone ``cone(P - v)`` is smooth.

    Only simplicial polytopes are accepted; a vertex with more than ``d``
    incident edges cannot have a smooth cone and gives False.
    """
    if not p.is_simplicial:
        raise UnsupportedShapeError("vertex-cone smoothness is only implemented for simplicial polytopes")
    edges = boundary_faces(p)[2]
    for i, v in enumerate(p.vertices):
        dirs = []
        for e in edges:
            if i in e:
                (j,) = e - {i}
                w = p.vertices[j]
                dirs.append(la.primitive_vector(tuple(a - b for a, b in zip(w, v))))
        if len(dirs) != p.dim or not la.is_unimodular_basis(dirs, p.dim):
            return False
    return True


def check_smooth_fano_equivalences(p: Polytope) -> SmoothFanoReport:
    """Facet bases, h = delta, and f_{d-1} = d! vol must agree on reflexive simplicial input."""
    simplicial = p.is_simplicial
    reflexive = is_reflexive(p)
    if not (simplicial and reflexive):
        why = "not simplicial" if not simplicial else "not reflexive"
        return SmoothFanoReport(simplicial, reflexive, notes=(f"criteria not applicable: {why}",))
    basis_ok = facet_bases_unimodular(p)
    h = h_vector(p).h
    delta = delta_vector(p).delta
    facets_ok = f_vector(p)[-1] == normalized_volume(p)
    report = SmoothFanoReport(True, True, basis_ok, h == delta, facets_ok, h, delta)
    if not report.verdicts_agree:
        raise TheoremViolation(
            f"smooth Fano criteria disagree on {p}: basis={basis_ok}, h==delta={h == delta}, "
            f"f_(d-1)==vol={facets_ok}"
        )
    return report
