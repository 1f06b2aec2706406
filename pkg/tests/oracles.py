"""Independent reference computations for the test-suite.

None of these use latpoly's facet enumeration, determinant or counting
code; they are slow but simple, and only meant for small inputs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb

import numpy as np
from scipy.spatial import ConvexHull


def cofactor_det(m):
    """Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inv
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def shoelace_normalized_area(vertices):
    """2 * area of a polygon given its vertices in any order (sorted by angle)."""
    cx = Fraction(sum(v[0] for v in vertices), len(vertices))
    cy = Fraction(sum(v[1] for v in vertices), len(vertices))
    ordered = sorted(vertices, key=lambda v: math.atan2(v[1] - cy, v[0] - cx))
    s = 0
    for (x1, y1), (x2, y2) in zip(ordered, ordered[1:] + ordered[:1]):
        s += x1 * y2 - x2 * y1
    return abs(s)


class SimplexMembership:
    """Point-in-hull by Caratheodory: x is in conv(V) iff it lies in some
    full-dimensional simplex spanned by vertices.  Exact rationals."""

    def __init__(self, vertices):
        self.vertices = [tuple(v) for v in vertices]
        self.d = len(self.vertices[0])
        d = self.d
        self.systems = []
        for subset in combinations(self.vertices, d + 1):
            base = subset[0]
            mat = [[Fraction(subset[k][i] - base[i]) for k in range(1, d + 1)] for i in range(d)]
            inv = _inverse(mat)
            if inv is not None:
                self.systems.append((base, inv))
        cen = [Fraction(sum(v[i] for v in self.vertices), len(self.vertices)) for i in range(d)]
        self.centroid = cen

    def contains(self, x, m=1):
        d = self.d
        for base, inv in self.systems:
            rhs = [Fraction(x[i]) - m * base[i] for i in range(d)]
            lam = [sum(inv[i][j] * rhs[j] for j in range(d)) for i in range(d)]
            if all(t >= 0 for t in lam) and sum(lam) <= m:
                return True
        return False

    def interior(self, x, m=1, eps=Fraction(1, 10**6)):
        # push x away from the (scaled) centroid; boundary points fall outside
        c = [m * ci for ci in self.centroid]
        pushed = [c[i] + (1 + eps) * (x[i] - c[i]) for i in range(self.d)]
        return self.contains(pushed, m)


def _inverse(mat):
    n = len(mat)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [v / p for v in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [u - f * w for u, w in zip(a[i], a[c])]
    return [row[n:] for row in a]


def brute_force_points(vertices, m):
    """Lattice points of mP as a sorted list, with boundary flags."""
    mem = SimplexMembership(vertices)
    d = mem.d
    lo = [m * min(v[i] for v in vertices) for i in range(d)]
    hi = [m * max(v[i] for v in vertices) for i in range(d)]
    pts = []
    for x in product(*(range(lo[i], hi[i] + 1) for i in range(d))):
        if m == 0:
            pts.append((x, True))
        elif mem.contains(x, m):
            pts.append((x, not mem.interior(x, m)))
    return pts


def brute_force_counts(vertices, upto):
    return [len(brute_force_points(vertices, m)) for m in range(upto + 1)]


def delta_by_series(counts, d):
    """Multiply sum L(m) t^m by (1 - t)^(d+1) and read off degrees 0..d."""
    factor = [(-1) ** j * comb(d + 1, j) for j in range(d + 2)]
    return [sum(factor[j] * counts[i - j] for j in range(i + 1)) for i in range(d + 1)]


def centroid_volume(vertices):
    """d! vol via a triangulated hull from scipy, coned from the vertex centroid.

    Floating point only decides the combinatorics; every simplex volume is
    exact.
    """
    pts = np.array(vertices, dtype=float)
    hull = ConvexHull(pts)
    d = pts.shape[1]
    c = [Fraction(sum(v[i] for v in vertices), len(vertices)) for i in range(d)]
    total = Fraction(0)
    for simplex in hull.simplices:
        rows = [[Fraction(vertices[k][i]) - c[i] for i in range(d)] for k in simplex]
        total += abs(_frac_det(rows))
    assert total.denominator == 1
    return int(total)


def _frac_det(rows):
    n = len(rows)
    a = [r[:] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [u - f * w for u, w in zip(a[i], a[c])]
    return det


def all_c_sums(points, c):
    """Every sum of c (not necessarily distinct) points."""
    out = set()
    for combo in combinations_with_replacement(points, c):
        out.add(tuple(sum(x[i] for x in combo) for i in range(len(points[0]))))
    return out


def hull_facets_by_pairs(vertices):
    """Polygon edges: pairs of vertices with all others weakly on one side."""
    out = set()
    for a, b in combinations(vertices, 2):
        n = (b[1] - a[1], a[0] - b[0])
        vals = [n[0] * (v[0] - a[0]) + n[1] * (v[1] - a[1]) for v in vertices]
        if all(x <= 0 for x in vals) or all(x >= 0 for x in vals):
            out.add(frozenset((a, b)))
    return out
