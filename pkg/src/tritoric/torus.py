"""Triangulated cubes and tori with a free (Z_3)^n translation action.

The unit n-cube is cut into 3^n subcubes of side 1/3 on the grid
{0, 1/3, 2/3, 1}; each subcube carries the Freudenthal (staircase)
triangulation.  Reducing grid coordinates mod 3 identifies opposite cube
faces and yields a triangulated n-torus on 3^n vertices, on which (Z_3)^n
acts freely by coordinate translation.

Grid coordinates are stored as integer thirds (0..3); torus vertices as
Z_3 residue tuples.  No floating point anywhere.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

from .complexes import (
    ComplexError,
    GroupAction,
    SimplicialComplex,
    make_complex,
)

N_MAX_DEFAULT = 6


def _check_n(n: int, n_max: int = N_MAX_DEFAULT):
    if not 1 <= n <= n_max:
        raise ComplexError(f"n={n} out of range 1..{n_max}")


def freudenthal_cube(n: int) -> SimplicialComplex:
    """Triangulation of the unit n-cube on its 2^n corners by monotone chains.

    Facets are the n! chains 0 = u_0 < u_1 < ... < u_n = 1 in the
    componentwise order; every edge joins comparable corners, so each
    coordinate is monotone along every edge, and the main diagonal edge
    from (0,..,0) to (1,..,1) is present in every facet.
    """
    _check_n(n, 16)
    facets = []
    for perm in permutations(range(n)):
        chain = []
        v = [0] * n
        chain.append(tuple(v))
        for i in perm:
            v[i] += 1
            chain.append(tuple(v))
        facets.append(chain)
    return make_complex(facets)


def triangulate_In(n: int, n_max: int = N_MAX_DEFAULT) -> SimplicialComplex:
    """Triangulated n-cube on the 4^n grid vertices {0,1,2,3}^n (thirds).

    Each of the 3^n subcubes carries the translated Freudenthal
    triangulation; adjacent subcubes agree on shared faces.
    """
    _check_n(n, n_max)
    facets = []
    perms = list(permutations(range(n)))
    for base in product(range(3), repeat=n):
        for perm in perms:
            v = list(base)
            chain = [tuple(v)]
            for i in perm:
                v[i] += 1
                chain.append(tuple(v))
            facets.append(chain)
    return make_complex(facets)


def torus_complex(n: int, n_max: int = N_MAX_DEFAULT) -> SimplicialComplex:
    """The 3^n-vertex triangulated n-torus: grid coordinates reduced mod 3.

    The reduction is required to be simplicial (strict relabel); a collapse
    would indicate a construction bug.
    """
    _check_n(n, n_max)
    cube = triangulate_In(n, n_max)
    torus = cube.relabel(lambda v: tuple(c % 3 for c in v), strict=True)
    torus.metadata["kind"] = "torus"
    torus.metadata["n"] = n
    return torus


def z3n_action(n: int) -> GroupAction:
    """(Z_3)^n acting on torus vertices; generator i adds 1 mod 3 to coordinate i."""
    _check_n(n, 16)
    verts = list(product(range(3), repeat=n))
    gens = []
    for i in range(n):
        g = {}
        for v in verts:
            w = list(v)
            w[i] = (w[i] + 1) % 3
            g[v] = tuple(w)
        gens.append(g)
    return GroupAction(n, gens)


# -- coordinate subtorus maps ----------------------------------------------


class SimplicialMap:
    """A vertex map between complexes whose simplex images are simplices."""

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex,
                 vertex_map: dict):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        missing = source.vertices - self.vertex_map.keys()
        if missing:
            raise ComplexError(f"map not total: missing {sorted(missing)[:3]!r}")
        for f in source.facets:
            image = frozenset(self.vertex_map[v] for v in f)
            if not target.has_face(image):
                raise ComplexError(f"image of facet {f!r} is not a simplex of the target")

    def image_complex(self) -> SimplicialComplex:
        return self.source.relabel(self.vertex_map)


def subtorus_inclusion(n: int, indices: Sequence[int]) -> SimplicialMap:
    """Inclusion of the coordinate k-torus into the n-torus, zero elsewhere.

    ``indices`` are 1-based coordinate positions, strictly increasing.
    """
    idx = list(indices)
    if idx != sorted(set(idx)) or any(not 1 <= i <= n for i in idx):
        raise ComplexError(f"bad index set {indices!r} for n={n}")
    k = len(idx)
    if k == 0:
        raise ComplexError("inclusion needs at least one coordinate")
    src = torus_complex(k)
    dst = torus_complex(n)
    vmap = {}
    for v in src.vertices:
        w = [0] * n
        for pos, i in enumerate(idx):
            w[i - 1] = v[pos]
        vmap[v] = tuple(w)
    return SimplicialMap(src, dst, vmap)


def subtorus_projection(n: int, indices: Sequence[int]) -> SimplicialMap:
    """Projection of the n-torus onto the selected coordinates.

    Images of simplices may be degenerate (lower-dimensional); with an empty
    index set everything maps to the unique 0-coordinate point ().
    """
    idx = list(indices)
    if idx != sorted(set(idx)) or any(not 1 <= i <= n for i in idx):
        raise ComplexError(f"bad index set {indices!r} for n={n}")
    src = torus_complex(n)
    if not idx:
        dst = make_complex([[()]])
        return SimplicialMap(src, dst, {v: () for v in src.vertices})
    dst = torus_complex(len(idx))
    vmap = {v: tuple(v[i - 1] for i in idx) for v in src.vertices}
    return SimplicialMap(src, dst, vmap)


# -- the k-th factor as the diagonal circle ---------------------------------


def torus_k_complex(n: int, k: int) -> SimplicialComplex:
    """The n-torus triangulation with factor k read as the diagonal circle.

    The simplex set is identical to ``torus_complex(n)``; the complex is
    tagged with metadata recording the special factor.  As an internal
    verification, the same facet set is rebuilt from the sheared-
    parallelepiped decomposition (wedge regions of the cube translated by
    0/1 vectors) and compared.
    """
    _check_n(n, N_MAX_DEFAULT)
    if not 1 <= k <= n:
        raise ComplexError(f"k={k} out of range 1..{n}")
    direct = torus_complex(n)
    rebuilt = _torus_via_wedges(n, k)
    if rebuilt != direct.facets:
        raise ComplexError(
            "parallelepiped decomposition disagrees with the direct torus build")
    out = SimplicialComplex(direct.facets)
    out.metadata["kind"] = "torus"
    out.metadata["n"] = n
    out.metadata["diagonal_factor"] = k
    return out


def _torus_via_wedges(n: int, k: int) -> frozenset:
    """Facets of the torus regrouped by the wedge regions x_i <= x_k / x_i >= x_k.

    Every grid facet lies in the closed wedge of at least one sign pattern;
    translating each wedge piece by its 0/1 vector tiles the sheared
    parallelepiped, and reducing mod 3 must reproduce the torus facets.
    """
    cube = triangulate_In(n)
    others = [i for i in range(n) if i != k - 1]
    facets_out = set()
    for f in cube.facets:
        placed = False
        for sigma_bits in product((0, 1), repeat=len(others)):
            ok = True
            for i, bit in zip(others, sigma_bits):
                if bit:  # region x_i <= x_k
                    if any(v[i] > v[k - 1] for v in f):
                        ok = False
                        break
                else:  # region x_i >= x_k
                    if any(v[i] < v[k - 1] for v in f):
                        ok = False
                        break
            if ok:
                placed = True
                shift = [0] * n
                for i, bit in zip(others, sigma_bits):
                    shift[i] = 3 * bit  # one full unit in thirds
                image = tuple(sorted(
                    tuple((c + s) % 3 for c, s in zip(v, shift)) for v in f))
                facets_out.add(image)
        if not placed:
            raise ComplexError(f"facet {f!r} fits no wedge region")
    return frozenset(facets_out)
