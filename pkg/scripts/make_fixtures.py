"""Regenerate the classification fixtures under fixtures/.

Reflexive polygons: search over lattice polygons whose only interior lattice
point is the origin, growing and shrinking by one point at a time inside a
box.  Smooth Fano 2- and 3-polytopes: search from the simplex using toric
blow-ups (add the sum of the vertices of a face) and blow-downs (drop a
vertex), keeping only smooth Fano results.  Both searches deduplicate up to
GL(d, Z).  The tests re-certify every fixture independently.

    python scripts/make_fixtures.py [outdir]
"""

from __future__ import annotations

import sys
from itertools import product
from pathlib import Path

from latpoly.dataset_io import PolytopeRecord, format_polytopes
from latpoly.ehrhart import count_lattice_points
from latpoly.errors import DegenerateInputError
from latpoly.polytope import Polytope, boundary_faces, lattice_equivalent, make_polytope, origin_in_interior
from latpoly.reflexive import is_reflexive, is_smooth_fano


def _try(d, pts):
    try:
        return make_polytope(d, pts)
    except DegenerateInputError:
        return None


def _add_new(found: list[Polytope], p: Polytope) -> bool:
    for q in found:
        if lattice_equivalent(p, q):
            return False
    found.append(p)
    return True


def reflexive_polygons(box: int = 3) -> list[Polytope]:
    def ok(p):
        return p is not None and origin_in_interior(p) and count_lattice_points(p).interior == 1

    seeds = [make_polytope(2, [(1, 0), (0, 1), (-1, -1)])]
    found: list[Polytope] = []
    frontier = list(seeds)
    for s in seeds:
        _add_new(found, s)
    grid = list(product(range(-box, box + 1), repeat=2))
    while frontier:
        p = frontier.pop()
        neighbours = [_try(2, p.vertices + (x,)) for x in grid if x not in p.vertices]
        neighbours += [_try(2, [v for v in p.vertices if v != w]) for w in p.vertices]
        for q in neighbours:
            if ok(q) and _add_new(found, q):
                frontier.append(q)
    return found


def smooth_fano(d: int) -> list[Polytope]:
    simplex = [tuple(int(i == j) for j in range(d)) for i in range(d)] + [(-1,) * d]
    start = make_polytope(d, simplex)
    found = [start]
    frontier = [start]
    while frontier:
        p = frontier.pop()
        faces = boundary_faces(p)
        candidates = []
        for k in range(2, d + 1):
            for face in faces[k]:
                new = tuple(sum(p.vertices[i][c] for i in face) for c in range(d))
                candidates.append(_try(d, p.vertices + (new,)))
        candidates += [_try(d, [v for v in p.vertices if v != w]) for w in p.vertices]
        for q in candidates:
            if q is not None and is_smooth_fano(q) and _add_new(found, q):
                frontier.append(q)
    return found


def _records(prefix: str, polys: list[Polytope]) -> list[PolytopeRecord]:
    polys = sorted(polys, key=lambda p: (len(p.vertices), p.vertices))
    return [PolytopeRecord(f"{prefix}-{i + 1:02d}", p.dim, p.vertices) for i, p in enumerate(polys)]


SINGLES = {
    "cross2": (2, [(1, 0), (0, 1), (-1, 0), (0, -1)]),
    "hexagon": (2, [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)]),
    "square": (2, [(1, 1), (1, -1), (-1, 1), (-1, -1)]),
    "octahedron": (3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]),
}


def main(argv: list[str]) -> int:
    out = Path(argv[1]) if len(argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures"
    (out / "reflexive").mkdir(parents=True, exist_ok=True)
    (out / "smooth_fano").mkdir(parents=True, exist_ok=True)

    polygons = reflexive_polygons()
    assert all(is_reflexive(p) for p in polygons)
    sf2 = smooth_fano(2)
    sf3 = smooth_fano(3)
    print(f"reflexive polygons: {len(polygons)}, smooth Fano d=2: {len(sf2)}, d=3: {len(sf3)}")

    header = "# generated by scripts/make_fixtures.py; representatives up to GL(d, Z)\n"
    (out / "reflexive" / "polygons.poly").write_text(
        header + format_polytopes(_records("refl2", polygons)), encoding="utf-8")
    (out / "smooth_fano" / "dim2.poly").write_text(
        header + format_polytopes(_records("sf2", sf2)), encoding="utf-8")
    (out / "smooth_fano" / "dim3.poly").write_text(
        header + format_polytopes(_records("sf3", sf3)), encoding="utf-8")
    for name, (d, verts) in SINGLES.items():
        rec = PolytopeRecord(name, d, make_polytope(d, verts).vertices)
        (out / f"{name}.poly").write_text(format_polytopes([rec]), encoding="utf-8")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
