"""Equivariant triangulations of tori, blocks, projective spaces, and
toric quotients over simple polytopes, with exact integer homology."""

from .assembly import (
    AssembledComplex,
    CubicalCell,
    assemble_cpn,
    assemble_toric,
    block_spec_for_face,
    cubical_subdivision,
    vertex_count_formula,
)
from .blocks import (
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
from .complexes import (
    ComplexError,
    GroupAction,
    SimplicialComplex,
    is_equivariant,
    is_subcomplex,
    make_complex,
    staircase_product,
)
from .homology import (
    SNF_BACKEND,
    ChainComplex,
    HomologyProfile,
    boundary_matrices,
    homology,
    smith_normal_form,
    snf_oracle_minor_gcd,
)
from .polytopes import (
    CharacteristicFunction,
    Face,
    SimplePolytope,
    parse_polytope,
    simplex_polytope,
    square_polytope,
    validate_characteristic,
)
from .torus import (
    SimplicialMap,
    freudenthal_cube,
    subtorus_inclusion,
    subtorus_projection,
    torus_complex,
    torus_k_complex,
    triangulate_In,
    z3n_action,
)

__version__ = "0.1.0"

__all__ = [
    "AssembledComplex", "CubicalCell", "assemble_cpn", "assemble_toric",
    "block_spec_for_face", "cubical_subdivision", "vertex_count_formula",
    "CENTER", "FactorSpec", "b_spec", "block_action", "block_vertex_count",
    "build_block", "c_spec", "cone_circle", "fundamental_cell", "torus_spec",
    "ComplexError", "GroupAction", "SimplicialComplex", "is_equivariant",
    "is_subcomplex", "make_complex", "staircase_product",
    "SNF_BACKEND", "ChainComplex", "HomologyProfile", "boundary_matrices",
    "homology", "smith_normal_form", "snf_oracle_minor_gcd",
    "CharacteristicFunction", "Face", "SimplePolytope", "parse_polytope",
    "simplex_polytope", "square_polytope", "validate_characteristic",
    "SimplicialMap", "freudenthal_cube", "subtorus_inclusion",
    "subtorus_projection", "torus_complex", "torus_k_complex",
    "triangulate_In", "z3n_action",
]
