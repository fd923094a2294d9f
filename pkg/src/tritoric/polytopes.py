"""Simple polytopes as pure combinatorics: vertex-facet incidence in,
face lattice and characteristic functions out.

A face is keyed by the set of facets whose intersection defines it (the
empty set is the whole polytope); its vertex support is derived.  No
coordinates are ever used.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence


class PolytopeError(ValueError):
    """Invalid polytope data or characteristic function."""


@dataclass(frozen=True)
class Face:
    """A face of a simple polytope, keyed by its defining facet set."""

    facet_set: frozenset  # facet indices whose intersection is this face
    support: frozenset  # vertex indices lying on the face

    @property
    def codim(self) -> int:
        return len(self.facet_set)

    def key(self) -> tuple:
        return tuple(sorted(self.facet_set))


class SimplePolytope:
    """Combinatorial simple n-polytope from vertex-facet incidence."""

    def __init__(self, incidence: Sequence[Sequence[int]], n: int, m: int | None = None):
        if n < 1:
            raise PolytopeError(f"dimension must be >= 1, got {n}")
        if not incidence:
            raise PolytopeError("no vertices")
        self.n = n
        sets = []
        for vi, fs in enumerate(incidence):
            s = frozenset(fs)
            if len(s) != len(list(fs)):
                raise PolytopeError(f"vertex {vi}: repeated facet index")
            if len(s) != n:
                raise PolytopeError(
                    f"vertex {vi} lies in {len(s)} facets, not {n}: polytope is not simple")
            sets.append(s)
        if len(set(sets)) != len(sets):
            raise PolytopeError("two vertices share the same facet set")
        self.vertex_facets: list[frozenset] = sets
        all_facets = sorted(set().union(*sets))
        self.m = m if m is not None else (max(all_facets) + 1 if all_facets else 0)
        if any(f < 0 or f >= self.m for f in all_facets):
            raise PolytopeError("facet index out of range")
        self.facet_indices = list(range(self.m))
        self._lattice: list[Face] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_facets)

    def face_lattice(self) -> list[Face]:
        """All faces, graded by codimension, including the polytope itself.

        A facet subset S defines a face iff some vertex contains S and S is
        exactly the common facet set of its supporting vertices.
        """
        if self._lattice is not None:
            return self._lattice
        faces: dict[frozenset, frozenset] = {}
        for k in range(0, self.n + 1):
            for vi, vf in enumerate(self.vertex_facets):
                for sub in combinations(sorted(vf), k):
                    s = frozenset(sub)
                    if s in faces:
                        continue
                    support = frozenset(
                        i for i, wf in enumerate(self.vertex_facets) if s <= wf)
                    common = frozenset.intersection(
                        *(self.vertex_facets[i] for i in support))
                    if common == s:
                        faces[s] = support
        self._lattice = sorted(
            (Face(facet_set=s, support=sup) for s, sup in faces.items()),
            key=lambda f: (f.codim, f.key()))
        return self._lattice

    def face_by_key(self, key: Sequence[int]) -> Face:
        s = frozenset(key)
        for f in self.face_lattice():
            if f.facet_set == s:
                return f
        raise PolytopeError(f"no face with facet set {sorted(s)}")

    def __repr__(self):
        return f"SimplePolytope(n={self.n}, facets={self.m}, vertices={self.n_vertices})"


def parse_polytope(incidence: Sequence[Sequence[int]], n: int) -> SimplePolytope:
    """Validate vertex-facet incidence data as a simple n-polytope."""
    return SimplePolytope(incidence, n)


def simplex_polytope(n: int) -> SimplePolytope:
    """The n-simplex: vertices v_0..v_n, facet F_i the one not containing v_i."""
    if n < 1:
        raise PolytopeError(f"n must be >= 1, got {n}")
    incidence = [[j for j in range(n + 1) if j != i] for i in range(n + 1)]
    return SimplePolytope(incidence, n, m=n + 1)


def square_polytope() -> SimplePolytope:
    """The square with facets cyclically ordered 0,1,2,3."""
    return SimplePolytope([[3, 0], [0, 1], [1, 2], [2, 3]], 2, m=4)


def cube_polytope() -> SimplePolytope:
    """The 3-cube; facet 2i is x_i = 0, facet 2i+1 is x_i = 1."""
    incidence = []
    for bits in range(8):
        fs = []
        for i in range(3):
            fs.append(2 * i + ((bits >> i) & 1))
        incidence.append(fs)
    return SimplePolytope(incidence, 3, m=6)


# -- characteristic functions -------------------------------------------------

# Symbols e_0..e_n are encoded by their index; e_0 stands for e_1 + ... + e_n.


class CharacteristicFunction:
    """Facet -> symbol assignment, symbols in {e_0, ..., e_n} by index."""

    def __init__(self, Q: SimplePolytope, assignment: Sequence[int]):
        if len(assignment) != Q.m:
            raise PolytopeError(
                f"need one symbol per facet ({Q.m}), got {len(assignment)}")
        if any(not 0 <= s <= Q.n for s in assignment):
            raise PolytopeError(f"symbols must be in 0..{Q.n}")
        self.Q = Q
        self.assignment = list(assignment)

    def symbol(self, facet: int) -> int:
        return self.assignment[facet]

    def symbols_of_face(self, face: Face) -> list[int]:
        return [self.assignment[f] for f in sorted(face.facet_set)]

    def is_standard(self) -> bool:
        """Distinctness of the n symbols meeting at every vertex."""
        for vf in self.Q.vertex_facets:
            syms = [self.assignment[f] for f in vf]
            if len(set(syms)) != len(syms):
                return False
        return True


def validate_characteristic(Q: SimplePolytope, assignment: Sequence[int]) -> bool:
    """True iff the facet symbols are pairwise distinct at every vertex."""
    return CharacteristicFunction(Q, assignment).is_standard()
