"""Simple polytope combinatorics and characteristic functions."""

from math import comb

import pytest

from tritoric.polytopes import (
    PolytopeError,
    parse_polytope,
    simplex_polytope,
    square_polytope,
    cube_polytope,
    validate_characteristic,
)


def test_parse_triangle():
    Q = parse_polytope([[1, 2], [0, 2], [0, 1]], 2)
    assert Q.n == 2
    assert Q.m == 3
    assert Q.n_vertices == 3


def test_parse_square():
    Q = square_polytope()
    assert Q.n_vertices == 4
    assert len(Q.face_lattice()) == 9  # 1 + 4 + 4


def test_parse_rejects_nonsimple():
    octa = [[0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 6, 7], [4, 5, 6, 7],
            [0, 2, 4, 6], [1, 3, 5, 7]]
    with pytest.raises(PolytopeError):
        parse_polytope(octa, 3)


def test_parse_rejects_duplicate_supports():
    with pytest.raises(PolytopeError):
        parse_polytope([[0, 1], [0, 1]], 2)


def test_simplex_polytope_incidence():
    for n in (1, 2, 3):
        Q = simplex_polytope(n)
        assert Q.n_vertices == n + 1
        for vi, vf in enumerate(Q.vertex_facets):
            assert vi not in vf  # F_i is the facet not containing v_i
            assert len(vf) == n


def test_face_lattice_simplex_counts():
    for n in (1, 2, 3):
        Q = simplex_polytope(n)
        lattice = Q.face_lattice()
        assert len(lattice) == 2 ** (n + 1) - 1
        # C(n+1, k+1) faces of dimension k
        for k in range(n + 1):
            dim_k = [f for f in lattice if f.codim == n - k]
            assert len(dim_k) == comb(n + 1, k + 1)


def test_face_lattice_cube():
    assert len(cube_polytope().face_lattice()) == 27  # 1 + 6 + 12 + 8


def test_codim_matches_facet_count():
    Q = simplex_polytope(3)
    for f in Q.face_lattice():
        assert f.codim == len(f.facet_set)
        assert f.support  # realized by at least one vertex


def test_faces_above_codim_k_face():
    # a codim-k face lies below exactly 2^k faces (one per facet subset)
    Q = cube_polytope()
    lattice = Q.face_lattice()
    for f in lattice:
        above = [g for g in lattice if g.facet_set <= f.facet_set]
        assert len(above) == 2 ** f.codim


def test_validate_characteristic_simplex():
    for n in (1, 2, 3):
        Q = simplex_polytope(n)
        assert validate_characteristic(Q, list(range(n + 1)))


def test_validate_characteristic_square():
    Q = square_polytope()
    assert validate_characteristic(Q, [1, 2, 1, 2])
    assert not validate_characteristic(Q, [1, 1, 2, 2])


def test_characteristic_shape_errors():
    Q = square_polytope()
    with pytest.raises(PolytopeError):
        validate_characteristic(Q, [1, 2, 1])  # wrong length
    with pytest.raises(PolytopeError):
        validate_characteristic(Q, [1, 2, 1, 5])  # symbol out of range
