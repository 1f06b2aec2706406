from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fixture_polytopes, shape
from latpoly.bounds import (
    HALF_FACTOR_NOTE,
    N_AS_DIMENSION_NOTE,
    boundary_point_count,
    casagrande_volume_bound,
    check_delta_unimodal,
    check_volume_sandwich,
    conjecture_bound,
    conjecture_vertex_count,
    cyclic_facet_count,
    evaluate_conjecture,
    is_unimodal,
    mcmullen_h_bound,
    sondow_bounds_check,
    stacked_f_vector,
)
from latpoly.errors import DegenerateInputError, DomainError
from latpoly.polytope import f_vector, h_vector, make_polytope
from strategies import lattice_polytopes


@pytest.mark.parametrize("n, d, expected", [(6, 3, 8), (8, 4, 20), (7, 3, 10), (5, 2, 5)])
def test_cyclic_examples(n, d, expected):
    assert cyclic_facet_count(n, d) == expected


@pytest.mark.parametrize("d", range(2, 9))
def test_cyclic_simplex(d):
    assert cyclic_facet_count(d + 1, d) == d + 1


def test_cyclic_domain():
    with pytest.raises(DomainError):
        cyclic_facet_count(3, 3)
    with pytest.raises(DomainError):
        cyclic_facet_count(5, 1)


@given(st.integers(3, 60))
def test_cyclic_polygon_and_3d(n):
    assert cyclic_facet_count(n, 2) == n
    if n >= 4:
        assert cyclic_facet_count(n, 3) == 2 * n - 4


def test_stacked_examples():
    assert stacked_f_vector(6, 3).f == (6, 12, 8)
    assert stacked_f_vector(7, 4).f[-1] == 11
    for d in range(2, 8):
        assert stacked_f_vector(d + 1, d).f == tuple(comb(d + 1, k + 1) for k in range(d))


@given(st.integers(4, 60))
def test_stacked_3d(n):
    assert stacked_f_vector(n, 3).f[-1] == 2 * n - 4


@given(st.integers(2, 8).flatmap(lambda d: st.tuples(st.just(d), st.integers(d + 1, d + 20))))
def test_stacked_below_cyclic(dn):
    d, n = dn
    assert stacked_f_vector(n, d).f[-1] <= cyclic_facet_count(n, d)


def test_mcmullen_examples():
    assert mcmullen_h_bound(10, 4, 0) == 1
    assert mcmullen_h_bound(10, 4, 1) == 6
    assert mcmullen_h_bound(6, 3, 1) == 3 == h_vector(shape("octahedron")).h[1]
    with pytest.raises(DomainError):
        mcmullen_h_bound(6, 3, 4)


@pytest.mark.parametrize("seq, expected", [
    ((1, 4, 1), True), ((1, 3, 3, 1), True), ((1, 1), True), ((1, 2, 1, 2), False), ((2, 1, 2), False),
])
def test_is_unimodal(seq, expected):
    assert is_unimodal(seq) is expected


def test_delta_unimodal_examples():
    r = check_delta_unimodal(shape("hexagon"))
    assert r.unimodal and r.mcmullen_ok and r.smooth_fano
    r = check_delta_unimodal(shape("octahedron"))
    assert r.unimodal and r.mcmullen_ok and r.smooth_fano
    r = check_delta_unimodal(shape("square"))
    # n = 8 boundary points, bound C(7, 1) = 7 >= 6; hypothesis not met
    assert r.unimodal and r.mcmullen_ok and not r.smooth_fano


@pytest.mark.parametrize("name, n, lower, upper, actual", [
    ("octahedron", 6, 8, 8, 8),
    ("hexagon", 6, 6, 6, 6),
    ("cross2", 4, 4, 4, 4),
])
def test_sandwich_examples(name, n, lower, upper, actual):
    b = check_volume_sandwich(shape(name))
    assert (b.n, b.lower, b.upper, b.actual, b.within) == (n, lower, upper, actual, True)
    assert not b.notes


def test_sandwich_notes():
    assert "lower bound" in check_volume_sandwich(shape("square")).notes[0]
    assert check_volume_sandwich(shape("long_diamond")).notes


@pytest.mark.parametrize("d, expected", [(2, 10), (3, 14), (4, 90)])
def test_casagrande(d, expected):
    assert casagrande_volume_bound(d) == expected


@pytest.mark.parametrize("d", range(2, 9))
def test_casagrande_dominates_sandwich_at_3d(d):
    assert casagrande_volume_bound(d) >= cyclic_facet_count(3 * d, d)
    # the upper sandwich bound grows with n
    assert all(cyclic_facet_count(n, d) <= cyclic_facet_count(n + 1, d) for n in range(d + 1, 3 * d))


def test_sondow_examples():
    s = sondow_bounds_check(1, 2)
    assert (s.lower, s.value, s.upper) == (2, 6, 16) and s.holds
    s = sondow_bounds_check(1, 1)
    assert (s.lower, s.value, s.upper) == (1, 2, 4) and s.holds
    s = sondow_bounds_check(Fraction(3, 2), 2)
    assert s.value == 10 and s.holds
    assert s.upper == Fraction(5, 2) ** 5 / Fraction(3, 2) ** 3


def test_sondow_domain():
    with pytest.raises(DomainError):
        sondow_bounds_check(Fraction(3, 2), 1)
    with pytest.raises(DomainError):
        sondow_bounds_check(Fraction(1, 2), 2)


@given(st.integers(1, 6), st.integers(1, 3), st.integers(1, 8))
def test_sondow_holds_where_defined(p, q, s):
    r = Fraction(p + q, q)
    if ((r + 1) * s).denominator != 1:
        with pytest.raises(DomainError):
            sondow_bounds_check(r, s)
    else:
        assert sondow_bounds_check(r, s).holds


@pytest.mark.parametrize("d, expected", [(2, 6), (3, 12), (4, 36), (5, 72)])
def test_conjecture_bound(d, expected):
    assert conjecture_bound(d) == expected


def test_conjecture_vertex_count():
    assert conjecture_vertex_count(2) == 6
    assert conjecture_vertex_count(3) == 8


def test_conjecture_d2():
    rec = evaluate_conjecture(fixture_polytopes("smooth_fano/dim2.poly"), 2)
    assert rec.max_normalized_volume == 6 == rec.bound
    assert len(rec.attainers) == 1 and rec.attainer_classes == 1
    assert rec.attainer_vertex_counts == [6] and rec.centrally_symmetric_flags == [True]
    assert all(rec.claims.values())
    assert N_AS_DIMENSION_NOTE in rec.notes and HALF_FACTOR_NOTE in rec.notes


def test_conjecture_d3():
    rec = evaluate_conjecture(fixture_polytopes("smooth_fano/dim3.poly"), 3)
    assert rec.max_normalized_volume == 12 == rec.bound
    assert rec.attainer_classes == 2
    assert rec.attainer_vertex_counts == [8, 8]
    assert sorted(rec.centrally_symmetric_flags) == [False, True]
    assert all(rec.claims.values())
    assert HALF_FACTOR_NOTE not in rec.notes


def test_conjecture_singleton_octahedron():
    rec = evaluate_conjecture([("oct", shape("octahedron"))], 3)
    assert rec.max_normalized_volume == 8 and rec.bound == 12
    assert rec.claims["bound_holds"] and not rec.claims["sharp"]
    assert any("not attained" in n for n in rec.notes)


def test_conjecture_skips_and_errors():
    data = [("sq", shape("square")), ("hex", shape("hexagon")), ("oct", shape("octahedron"))]
    rec = evaluate_conjecture(data, 2)
    assert rec.skipped == ["sq", "oct"] and rec.attainers == ["hex"]
    with pytest.raises(DegenerateInputError):
        evaluate_conjecture([], 2)
    with pytest.raises(DegenerateInputError):
        evaluate_conjecture([("sq", shape("square"))], 2)


def test_conjecture_duplicates_do_not_inflate_classes():
    hexagon = shape("hexagon")
    sheared = make_polytope(2, [(x + y, y) for x, y in hexagon.vertices])
    rec = evaluate_conjecture([("a", hexagon), ("b", sheared)], 2)
    assert rec.attainers == ["a", "b"] and rec.attainer_classes == 1
    assert rec.claims["attainer_count"]


def _corpus():
    return [p for _, p in fixture_polytopes("reflexive") + fixture_polytopes("smooth_fano")] + [
        shape(n) for n in ("octahedron", "hexagon", "cross2", "triangle")
    ]


def _check_face_theorems(p):
    f = f_vector(p).f
    n, d = f[0], p.dim
    assert f[-1] <= cyclic_facet_count(n, d)
    assert all(a >= b for a, b in zip(f, stacked_f_vector(n, d).f))
    h = h_vector(p).h
    assert h == h[::-1]
    assert all(h[i] <= h[i + 1] for i in range(d // 2))
    assert all(h[i] <= mcmullen_h_bound(n, d, i) for i in range(d + 1))


def test_face_theorems_on_corpus():
    for p in _corpus():
        if p.is_simplicial:
            _check_face_theorems(p)


@settings(max_examples=60, deadline=None)
@given(lattice_polytopes(max_extra=6))
def test_face_theorems_random(p):
    if p.is_simplicial:
        _check_face_theorems(p)


def test_smooth_fano_delta_and_sandwich_on_dataset():
    for _, p in fixture_polytopes("smooth_fano"):
        r = check_delta_unimodal(p)
        assert r.smooth_fano and r.unimodal and r.mcmullen_ok
        b = check_volume_sandwich(p)
        assert b.within and b.n == boundary_point_count(p)
        assert b.actual <= casagrande_volume_bound(p.dim)


def test_reflexive_lower_bound_on_dataset():
    for _, p in fixture_polytopes("reflexive"):
        b = check_volume_sandwich(p)
        assert b.lower <= b.actual
