"""Block complexes: fundamental cells, translates, and their invariants."""

from itertools import combinations
from math import comb

import pytest

from tritoric.blocks import (
    BlockError,
    CENTER,
    FactorSpec,
    b_spec,
    block_action,
    block_vertex_count,
    build_block,
    c_spec,
    cone_circle,
    fundamental_cell,
    torus_spec,
)
from tritoric.complexes import is_equivariant, is_subcomplex
from tritoric.homology import homology
from tritoric.torus import torus_complex


def all_specs(n):
    """Every block spec on n factors: a coned-own subset plus at most one
    coned-zero host among the remaining slots."""
    out = []
    slots = range(1, n + 1)
    for size in range(n + 1):
        for coned in combinations(slots, size):
            out.append(c_spec(n, coned))
            for host in slots:
                if host not in coned:
                    out.append(b_spec(n, host, coned))
    return out


def test_cone_circle():
    D = cone_circle()
    assert D.f_vector() == (4, 6, 3)
    assert D.euler_characteristic() == 1
    boundary = D.link(CENTER)
    assert boundary.f_vector() == (3, 3)


def test_spec_validation():
    with pytest.raises(BlockError):
        FactorSpec(("coned-zero", "coned-zero"))
    with pytest.raises(BlockError):
        b_spec(2, 1, [1])
    with pytest.raises(BlockError):
        FactorSpec(("nope",))


def test_spec_describe():
    assert torus_spec(2).describe() == "T^2"
    assert c_spec(3, [1, 3]).describe() == "C(1,3)"
    assert b_spec(3, 2, [1]).describe() == "B(2;1)"


def test_fundamental_cell_single_factors():
    assert fundamental_cell(torus_spec(1)).f_vector() == (2, 1)
    cellB = fundamental_cell(b_spec(1, 1))
    assert cellB.f_vector() == (3, 3, 1)  # single triangle


def test_fundamental_cell_edge_times_triangle():
    cell = fundamental_cell(b_spec(2, 2))
    assert len(cell.facets) == 3
    assert len(cell.vertices) == 6


def test_fundamental_cell_counts():
    for spec in all_specs(2) + [c_spec(3, [1, 2, 3])]:
        cell = fundamental_cell(spec)
        cones = len(spec.coned_positions)
        circles = spec.n - cones
        want_dim = circles + 2 * cones
        from math import factorial

        want = factorial(want_dim)
        for _ in range(cones):
            want //= 2
        assert len(cell.facets) == want
        assert len(cell.vertices) == 2 ** circles * 3 ** cones


def test_block_vertex_counts():
    assert block_vertex_count(torus_spec(3)) == 27
    assert block_vertex_count(c_spec(3, [1])) == 36
    assert block_vertex_count(c_spec(3, [1, 2, 3])) == 64
    for spec in all_specs(2):
        assert block_vertex_count(spec) == len(build_block(spec, validate=False).vertices)


def test_all_circle_block_is_the_torus():
    for n in (1, 2, 3):
        B = build_block(torus_spec(n), validate=(n < 3))
        assert B == torus_complex(n)


def test_block_b_equals_c_locally():
    # the two disk flavors differ only in global meaning, not locally
    assert build_block(b_spec(1, 1)) == build_block(c_spec(1, [1]))
    assert build_block(b_spec(2, 1)) == build_block(c_spec(2, [1]))


def test_cone_circle_is_single_factor_block():
    B = build_block(c_spec(1, [1]))
    ref = cone_circle().relabel(lambda v: (v,))
    assert B == ref


def test_block_overlap_validation_runs():
    # validation is on by default and passes for every small spec
    for spec in all_specs(2):
        build_block(spec, validate=True)


def test_torus_subcomplex_of_every_block():
    for n in (1, 2, 3):
        T = torus_complex(n)
        for spec in all_specs(n):
            B = build_block(spec, validate=False)
            assert is_subcomplex(T, B), spec.describe()


def test_subblock_chains():
    # un-coning any subset of coned slots yields a subcomplex
    for n in (1, 2, 3):
        for spec in all_specs(n):
            B = build_block(spec, validate=False)
            coned = spec.coned_positions
            for size in range(1, len(coned) + 1):
                for drop in combinations(coned, size):
                    sub = build_block(spec.uncone(drop), validate=False)
                    assert is_subcomplex(sub, B), (spec.describe(), drop)


def test_block_equivariance():
    for n in (1, 2, 3):
        for spec in all_specs(n):
            B = build_block(spec, validate=False)
            assert is_equivariant(B, block_action(spec)), spec.describe()


def test_block_euler_product():
    # chi = product over factors: 0 for circles, 1 for disks
    for spec in all_specs(2):
        B = build_block(spec, validate=False)
        want = 1 if not spec.circle_positions else 0
        assert B.euler_characteristic() == want, spec.describe()


def test_block_purity_and_boundary():
    for spec in all_specs(2):
        B = build_block(spec, validate=False)
        cones = len(spec.coned_positions)
        assert B.is_pure()
        assert B.dim == spec.n + cones
        if cones:
            assert B.is_pseudomanifold(allow_boundary=True)
            assert B.boundary_ridges()
        else:
            assert B.is_pseudomanifold()


def test_bc_flip_symmetry():
    # B(k, I) and B(l, I) agree under flipping coordinates k and l
    for n in (2, 3):
        for own in ([], [3]) if n == 3 else ([],):
            hosts = [p for p in range(1, n + 1) if p not in own]
            for k in hosts:
                for l in hosts:
                    if k >= l:
                        continue
                    Bk = build_block(b_spec(n, k, own), validate=False)
                    Bl = build_block(b_spec(n, l, own), validate=False)

                    def flip(v, k=k, l=l):
                        w = list(v)
                        w[k - 1], w[l - 1] = w[l - 1], w[k - 1]
                        return tuple(w)

                    assert Bk.relabel(flip) == Bl


def test_block_homology_disk_and_solid_torus():
    h1 = homology(build_block(c_spec(1, [1])))
    assert h1.betti == (1, 0, 0)
    h2 = homology(build_block(c_spec(2, [1]), validate=False))
    assert h2.betti == (1, 1, 0, 0)  # D^2 x S^1


def test_c12_block_shape():
    B = build_block(c_spec(2, [1, 2]), validate=False)
    assert len(B.vertices) == 16
    assert B.euler_characteristic() == 1
    # single-cone blocks nest inside by the sub-block chain
    assert is_subcomplex(build_block(c_spec(2, [1]), validate=False), B)
    assert is_subcomplex(build_block(c_spec(2, [2]), validate=False), B)
