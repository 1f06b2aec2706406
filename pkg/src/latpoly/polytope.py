"""Full-dimensional lattice polytopes in V-representation.

Facets are found by brute force over d-subsets of points: every facet
hyperplane is spanned by d affinely independent vertices, so testing each
candidate hyperplane against all points is complete and exact.  At the sizes
this package targets (d <= 8, a few dozen vertices) that is fast enough.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

from . import exact_linalg as la
from .errors import (
    DegenerateInputError,
    DimensionError,
    DomainError,
    InconsistentInputError,
    UnsupportedShapeError,
)
from .exact_linalg import Vector


@dataclass(frozen=True)
class Facet:
    """Facet ``{x : <normal, x> = offset}`` with ``<normal, v> <= offset`` on the polytope."""

    normal: Vector
    offset: int
    vertex_indices: frozenset[int]


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple[Vector, ...]
    facets: tuple[Facet, ...] = field(compare=False, repr=False)

    @property
    def is_simplicial(self) -> bool:
        return all(len(f.vertex_indices) == self.dim for f in self.facets)

    def facet_vertices(self, facet: Facet) -> tuple[Vector, ...]:
        return tuple(self.vertices[i] for i in sorted(facet.vertex_indices))

    def __str__(self) -> str:
        return f"Polytope(dim={self.dim}, vertices={list(self.vertices)})"


@dataclass(frozen=True)
class FVector:
    f: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.f[i]

    def __len__(self) -> int:
        return len(self.f)


@dataclass(frozen=True)
class HVector:
    h: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.h[i]

    def __len__(self) -> int:
        return len(self.h)


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _hull_facets(d: int, points: Sequence[Vector]) -> list[tuple[Vector, int]]:
    """(outer primitive normal, offset) of every facet of conv(points)."""
    found: set[tuple[Vector, int]] = set()
    if d == 1:
        xs = [p[0] for p in points]
        return sorted({((1,), max(xs)), ((-1,), -min(xs))})
    for subset in combinations(range(len(points)), d):
        base = points[subset[0]]
        rows = [_sub(points[i], base) for i in subset[1:]]
        normal = la.integer_normal(rows)
        if not any(normal):
            continue
        normal = la.primitive_vector(normal)
        b = _dot(normal, base)
        values = [_dot(normal, p) for p in points]
        if all(v <= b for v in values):
            found.add((normal, b))
        elif all(v >= b for v in values):
            found.add((tuple(-x for x in normal), -b))
    return sorted(found)


def make_polytope(d: int, points: Iterable[Sequence[int]]) -> Polytope:
    """Convex hull of integer points, keeping only extreme points as vertices.

    Vertices are stored in lexicographic order; duplicates are dropped.
    """
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if d < 1:
        raise DimensionError("dimension must be positive")
    if not pts:
        raise DegenerateInputError("no points given")
    if any(len(p) != d for p in pts):
        raise DimensionError(f"all points must have {d} coordinates")
    diffs = [_sub(p, pts[0]) for p in pts[1:]]
    if la.rank(diffs) < d:
        raise DegenerateInputError(f"points do not span a {d}-dimensional polytope")

    hull = _hull_facets(d, pts)
    # a point is a vertex iff the normals of the facets through it span R^d
    vertices = []
    for p in pts:
        tight = [a for a, b in hull if _dot(a, p) == b]
        if len(tight) >= d and la.rank(tight) == d:
            vertices.append(p)
    facets = tuple(
        Facet(a, b, frozenset(i for i, v in enumerate(vertices) if _dot(a, v) == b))
        for a, b in hull
    )
    return Polytope(d, tuple(vertices), facets)


def facet_enumeration(p: Polytope) -> tuple[Facet, ...]:
    return p.facets


def _require_simplicial(p: Polytope) -> None:
    if not p.is_simplicial:
        raise UnsupportedShapeError("operation is only implemented for simplicial polytopes")


def boundary_faces(p: Polytope) -> dict[int, set[frozenset[int]]]:
    """Proper faces of a simplicial polytope keyed by number of vertices."""
    _require_simplicial(p)
    faces: dict[int, set[frozenset[int]]] = {k: set() for k in range(1, p.dim + 1)}
    for f in p.facets:
        idx = sorted(f.vertex_indices)
        for k in range(1, p.dim + 1):
            faces[k].update(frozenset(c) for c in combinations(idx, k))
    return faces


def f_vector(p: Polytope) -> FVector:
    faces = boundary_faces(p)
    return FVector(tuple(len(faces[k]) for k in range(1, p.dim + 1)))


def h_from_f(f: FVector | Sequence[int], d: int) -> HVector:
    fs = tuple(f.f if isinstance(f, FVector) else f)
    if len(fs) != d:
        raise DimensionError(f"f-vector of length {len(fs)} given for d={d}")
    ext = (1,) + fs  # ext[i] = f_{i-1}
    h = []
    for k in range(d + 1):
        h.append(sum((-1) ** (k - i) * comb(d - i, d - k) * ext[i] for i in range(k + 1)))
    if any(x < 0 for x in h):
        raise InconsistentInputError(f"f-vector {fs} yields negative h-vector {h}")
    return HVector(tuple(h))


def h_vector(p: Polytope) -> HVector:
    return h_from_f(f_vector(p), p.dim)


@lru_cache(maxsize=4096)
def facet_lattice_coordinates(p: Polytope, facet_index: int) -> tuple[Vector, ...]:
    """Vertices of a facet in coordinates of the lattice ``Z^d`` cut by its hyperplane.

    The facet is translated by its first vertex so the hyperplane becomes
    linear, then expressed in an HNF-derived basis of that rank d-1 lattice.
    """
    facet = p.facets[facet_index]
    verts = p.facet_vertices(facet)
    _, coord = la.hyperplane_lattice_basis(facet.normal)
    return tuple(la.vec_mat(_sub(v, verts[0]), coord) for v in verts)


@lru_cache(maxsize=4096)
def facet_normalized_volume(p: Polytope, facet_index: int) -> int:
    """(d-1)! times the relative volume of a facet in its own lattice."""
    if p.dim == 1:
        return 1
    coords = facet_lattice_coordinates(p, facet_index)
    return normalized_volume(make_polytope(p.dim - 1, coords))


@lru_cache(maxsize=4096)
def normalized_volume(p: Polytope) -> int:
    """``d! * vol(P)`` as an exact integer.

    Pyramid decomposition from the first vertex: each facet not containing
    the apex contributes (lattice height of apex) * (normalized facet volume).
    """
    if p.dim == 1:
        return p.vertices[-1][0] - p.vertices[0][0]
    apex = p.vertices[0]
    total = 0
    for i, f in enumerate(p.facets):
        height = f.offset - _dot(f.normal, apex)
        if height:
            total += height * facet_normalized_volume(p, i)
    return total


@lru_cache(maxsize=4096)
def normalized_boundary_volume(p: Polytope) -> int:
    """Sum over facets of the facet's normalized volume in its own lattice."""
    return sum(facet_normalized_volume(p, i) for i in range(len(p.facets)))


def is_centrally_symmetric(p: Polytope) -> bool:
    vs = set(p.vertices)
    return all(tuple(-x for x in v) in vs for v in vs)


def contains_point(p: Polytope, x: Sequence[int], m: int = 1) -> Location:
    """Classify ``x`` against the dilate ``mP``.

    For ``m == 0`` the dilate is the single point 0, reported as boundary.
    """
    if m < 0:
        raise DomainError("dilation must be nonnegative")
    on_boundary = False
    for f in p.facets:
        v = _dot(f.normal, x)
        if v > m * f.offset:
            return Location.OUTSIDE
        if v == m * f.offset:
            on_boundary = True
    return Location.BOUNDARY if on_boundary else Location.INTERIOR


def origin_in_interior(p: Polytope) -> bool:
    return all(f.offset > 0 for f in p.facets)


def lattice_equivalent(p: Polytope, q: Polytope) -> bool:
    """Whether some ``M`` in GL(d, Z) maps the vertex set of ``p`` onto that of ``q``.

    Only linear maps are considered, so this is the right notion for polytopes
    whose unique interior lattice point is the origin (e.g. reflexive ones).
    Requires ``p`` and ``q`` simplicial with the origin in the interior.
    """
    if p.dim != q.dim:
        return False
    if len(p.vertices) != len(q.vertices) or len(p.facets) != len(q.facets):
        return False
    _require_simplicial(p)
    _require_simplicial(q)
    if not (origin_in_interior(p) and origin_in_interior(q)):
        raise DegenerateInputError("lattice_equivalent needs the origin in both interiors")
    d = p.dim
    src = p.facet_vertices(p.facets[0])
    src_det = abs(la.determinant(src))
    src_inv = la.rational_inverse(src)
    target = set(q.vertices)
    for g in q.facets:
        dst = q.facet_vertices(g)
        if abs(la.determinant(dst)) != src_det:
            continue
        for perm in permutations(dst):
            # rows: src @ M = perm  =>  M = src^-1 @ perm
            m = [[sum(src_inv[i][k] * perm[k][j] for k in range(d)) for j in range(d)]
                 for i in range(d)]
            if any(x.denominator != 1 for row in m for x in row):
                continue
            mi = [[int(x) for x in row] for row in m]
            if abs(la.determinant(mi)) != 1:
                continue
            if {la.vec_mat(v, mi) for v in p.vertices} == target:
                return True
    return False
