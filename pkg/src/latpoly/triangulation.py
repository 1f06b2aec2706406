"""Boundary and cone triangulations, unimodularity certificates and the
h-vector comparison with the delta-vector."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from . import exact_linalg as la
from .ehrhart import delta_vector, lattice_points
from .errors import DegenerateInputError, PreconditionError, TheoremViolation, UnsupportedShapeError
from .exact_linalg import Vector
from .polytope import HVector, Polytope, h_from_f, normalized_volume, origin_in_interior
from .reflexive import is_reflexive, is_smooth_fano

BOUNDARY = "boundary"
FULL_CONE = "full-cone"


@dataclass(frozen=True)
class LatticeSimplex:
    vertices: tuple[Vector, ...]
    det: int
    facet: int | None = None  # index of the facet this simplex lies on / cones over

    @property
    def is_unimodular(self) -> bool:
        return self.det == 1


@dataclass(frozen=True)
class Triangulation:
    simplices: tuple[LatticeSimplex, ...]
    kind: str
    dim: int

    @property
    def vertex_set(self) -> frozenset[Vector]:
        return frozenset(v for s in self.simplices for v in s.vertices)

    @property
    def dets(self) -> tuple[int, ...]:
        return tuple(s.det for s in self.simplices)


@dataclass(frozen=True)
class HibiResult:
    holds: bool
    equality: bool
    unimodular: bool
    h: tuple[int, ...]
    delta: tuple[int, ...]


def _sub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def relative_simplex_det(vertices: Sequence[Vector]) -> int:
    """Index of a k-simplex's edge lattice inside the lattice of its affine hull.

    For a boundary simplex (d points in Z^d) this is the normalized volume
    relative to the hyperplane lattice: the gcd of the maximal minors of the
    edge matrix.
    """
    base = vertices[0]
    rows = [_sub(v, base) for v in vertices[1:]]
    if not rows:
        return 1
    n = len(rows[0])
    if len(rows) == n:
        g = abs(la.determinant(rows))
    else:
        g = 0
        for cols in combinations(range(n), len(rows)):
            g = gcd(g, la.determinant([[r[c] for c in cols] for r in rows]))
            if g == 1:
                break
    if g == 0:
        raise DegenerateInputError("simplex vertices are affinely dependent")
    return g


def placing_triangulation(points: Sequence[Vector]) -> list[tuple[Vector, ...]]:
    """Lexicographic placing triangulation using every point.

    Points are placed in lexicographic order.  Each new point lies outside the
    hull of the earlier ones (it is lexicographically larger than all of
    them), so it is coned either over everything (if it raises the affine
    dimension) or over the boundary faces it can see.  Restricted to a face of
    the hull the result is again the placing triangulation of that face, so
    triangulating facets separately yields a consistent complex.
    """
    pts = sorted(set(points))
    if not pts:
        return []
    origin = pts[0]
    simplices: list[tuple[int, ...]] = [(0,)]
    spanning: list[Vector] = []
    proj: tuple[int, ...] = ()

    def side(face: tuple[int, ...], x: Vector) -> int:
        f0 = pts[face[0]]
        rows = [_sub(pts[i], f0) for i in face[1:]] + [_sub(x, f0)]
        det = la.determinant([[r[c] for c in proj] for r in rows])
        return (det > 0) - (det < 0)

    for k in range(1, len(pts)):
        p = pts[k]
        diff = _sub(p, origin)
        if la.rank(spanning + [diff]) > len(spanning):
            spanning.append(diff)
            proj = la.nonsingular_columns(spanning)
            simplices = [s + (k,) for s in simplices]
            continue
        r = len(spanning)
        counts: Counter[tuple[int, ...]] = Counter()
        opposite: dict[tuple[int, ...], int] = {}
        for s in simplices:
            for face in combinations(s, r):
                counts[face] += 1
                (opposite[face],) = set(s) - set(face)
        new = []
        for face, c in counts.items():
            if c != 1:
                continue
            if side(face, p) * side(face, pts[opposite[face]]) < 0:
                new.append(face + (k,))
        simplices.extend(new)
    return [tuple(pts[i] for i in s) for s in simplices]


def boundary_triangulation(p: Polytope, use_all_boundary_points: bool = False) -> Triangulation:
    """Triangulation of the boundary of ``p``.

    Without the flag this is the boundary complex (``p`` must be simplicial).
    With it, every facet is triangulated by the lexicographic placing
    triangulation of all lattice points on that facet, so the vertex set is
    the full set of boundary lattice points.
    """
    simplices = []
    if not use_all_boundary_points:
        if not p.is_simplicial:
            raise UnsupportedShapeError("boundary complex is a triangulation only for simplicial polytopes")
        for i, f in enumerate(p.facets):
            verts = p.facet_vertices(f)
            simplices.append(LatticeSimplex(verts, relative_simplex_det(verts), i))
    else:
        if not is_reflexive(p):
            raise PreconditionError("full boundary-point triangulation requires a reflexive polytope")
        pts = lattice_points(p)
        for i, f in enumerate(p.facets):
            on_facet = [x for x in pts if sum(a * b for a, b in zip(f.normal, x)) == f.offset]
            for s in placing_triangulation(on_facet):
                simplices.append(LatticeSimplex(s, relative_simplex_det(s), i))
    return Triangulation(tuple(simplices), BOUNDARY, p.dim)


def cone_triangulation(p: Polytope) -> Triangulation:
    """Cone from the origin over every facet of a simplicial polytope."""
    if not p.is_simplicial:
        raise UnsupportedShapeError("cone triangulation needs a simplicial polytope")
    if not origin_in_interior(p):
        raise PreconditionError("cone triangulation needs the origin in the interior")
    zero = (0,) * p.dim
    simplices = []
    for i, f in enumerate(p.facets):
        verts = p.facet_vertices(f)
        simplices.append(LatticeSimplex((zero,) + verts, abs(la.determinant(verts)), i))
    t = Triangulation(tuple(simplices), FULL_CONE, p.dim)
    # star-shaped from 0 plus exact volume partition certifies a triangulation
    if sum(t.dets) != normalized_volume(p):
        raise TheoremViolation(f"cone simplices do not partition the volume of {p}")
    return t


def is_unimodular_triangulation(t: Triangulation) -> bool:
    return all(s.det == 1 for s in t.simplices)


def complex_f_vector(t: Triangulation) -> tuple[int, ...]:
    faces: set[frozenset[Vector]] = set()
    for s in t.simplices:
        vs = s.vertices
        for k in range(1, len(vs) + 1):
            faces.update(frozenset(c) for c in combinations(vs, k))
    sizes = Counter(len(f) for f in faces)
    top = max(len(s.vertices) for s in t.simplices)
    return tuple(sizes[k] for k in range(1, top + 1))


def triangulation_h_vector(t: Triangulation, d: int) -> HVector:
    if t.kind != BOUNDARY:
        raise PreconditionError("h-vector is defined here for boundary triangulations")
    return h_from_f(complex_f_vector(t), d)


def check_hibi_inequality(p: Polytope, t: Triangulation) -> HibiResult:
    """Compare ``h(t)`` with ``delta(p)``; equality must coincide with unimodularity."""
    if not is_reflexive(p):
        raise PreconditionError("Hibi comparison needs a reflexive polytope")
    h = triangulation_h_vector(t, p.dim).h
    delta = delta_vector(p).delta
    holds = all(a <= b for a, b in zip(h, delta))
    equality = h == delta
    unimodular = is_unimodular_triangulation(t)
    if equality != unimodular or not holds:
        raise TheoremViolation(
            f"h={h} delta={delta} unimodular={unimodular} on {p}"
        )
    return HibiResult(holds, equality, unimodular, h, delta)


def triangulation_index_lcm(t: Triangulation) -> int:
    if not t.simplices:
        raise DegenerateInputError("empty triangulation")
    return lcm(*t.dets)


def verify_oda_theorem(p: Polytope) -> bool:
    """Build the cone triangulation of a smooth Fano polytope and certify it unimodular."""
    if not is_smooth_fano(p):
        raise PreconditionError("input is not smooth Fano")
    t = cone_triangulation(p)
    if not is_unimodular_triangulation(t):
        raise TheoremViolation(f"cone triangulation of smooth Fano {p} is not unimodular: {t.dets}")
    return True
