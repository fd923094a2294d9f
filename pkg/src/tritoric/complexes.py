"""Abstract simplicial complexes over ordered vertex labels.

Vertices may be any hashable, mutually comparable objects (ints, tuples,
strings).  A complex is stored by its maximal simplices (facets); the full
face set is derived on demand and cached.  All complexes are immutable
after construction.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Callable, Hashable, Iterable, Sequence

Vertex = Hashable
Simplex = tuple  # sorted duplicate-free tuple of vertices


class ComplexError(ValueError):
    """Invalid construction or query on a simplicial complex."""


def _as_simplex(vertices: Iterable[Vertex]) -> Simplex:
    vs = tuple(sorted(vertices))
    if len(vs) == 0:
        raise ComplexError("empty simplex")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ComplexError(f"duplicate vertex {a!r} within a simplex")
    return vs


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets."""

    __slots__ = ("facets", "vertices", "_faces_by_dim", "metadata")

    def __init__(self, facets: Iterable[Iterable[Vertex]]):
        cleaned = {_as_simplex(f) for f in facets}
        if not cleaned:
            raise ComplexError("a complex needs at least one facet")
        # drop any simplex contained in another (absorption)
        maximal = []
        by_len = sorted(cleaned, key=len, reverse=True)
        kept: list[frozenset] = []
        for f in by_len:
            fs = frozenset(f)
            if not any(fs < k for k in kept):
                kept.append(fs)
                maximal.append(f)
        self.facets: frozenset[Simplex] = frozenset(maximal)
        self.vertices: frozenset = frozenset(chain.from_iterable(maximal))
        self._faces_by_dim: dict[int, frozenset] | None = None
        self.metadata: dict = {}

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def faces_by_dim(self) -> dict[int, frozenset]:
        """All faces, grouped by dimension (0 = vertices)."""
        if self._faces_by_dim is None:
            seen: dict[int, set] = {}
            for f in self.facets:
                n = len(f)
                for k in range(1, n + 1):
                    bucket = seen.setdefault(k - 1, set())
                    for c in combinations(f, k):
                        bucket.add(c)
            self._faces_by_dim = {d: frozenset(s) for d, s in seen.items()}
        return self._faces_by_dim

    def faces(self, d: int) -> frozenset:
        return self.faces_by_dim().get(d, frozenset())

    def has_face(self, simplex: Iterable[Vertex]) -> bool:
        s = frozenset(simplex)
        return any(s <= set(f) for f in self.facets)

    def f_vector(self) -> tuple[int, ...]:
        fb = self.faces_by_dim()
        return tuple(len(fb[d]) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return (f"SimplicialComplex(dim={self.dim}, vertices={len(self.vertices)},"
                f" facets={len(self.facets)})")

    # -- local structure -----------------------------------------------

    def star(self, v: Vertex) -> "SimplicialComplex":
        """Subcomplex of all faces containing v, plus their faces."""
        if v not in self.vertices:
            raise ComplexError(f"unknown vertex {v!r}")
        return SimplicialComplex(f for f in self.facets if v in f)

    def link(self, v: Vertex) -> "SimplicialComplex":
        """Faces of star(v) that do not contain v."""
        if v not in self.vertices:
            raise ComplexError(f"unknown vertex {v!r}")
        return SimplicialComplex(
            tuple(x for x in f if x != v) for f in self.facets if v in f
        )

    def cone(self, apex: Vertex) -> "SimplicialComplex":
        if apex in self.vertices:
            raise ComplexError(f"cone apex {apex!r} collides with an existing vertex")
        return SimplicialComplex(f + (apex,) for f in self.facets)

    def induced(self, vertex_subset: Iterable[Vertex]) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset (maximal faces within it)."""
        vs = frozenset(vertex_subset)
        found = set()
        for f in self.facets:
            inter = tuple(x for x in f if x in vs)
            if inter:
                found.add(inter)
        if not found:
            raise ComplexError("induced subcomplex is empty")
        return SimplicialComplex(found)

    # -- relabeling / quotients ------------------------------------------

    def relabel(self, f: Callable[[Vertex], Vertex] | dict,
                strict: bool = False) -> "SimplicialComplex":
        """Image complex under a total vertex map.

        Simplices whose vertices collide collapse to lower-dimensional
        simplices; in strict mode a collision raises instead (used for
        quotients that must stay simplicial).
        """
        fn = f.__getitem__ if isinstance(f, dict) else f
        out = set()
        for fac in self.facets:
            image = tuple(fn(v) for v in fac)
            uniq = set(image)
            if strict and len(uniq) != len(image):
                raise ComplexError(
                    f"relabel collapsed a simplex in strict mode: {fac!r} -> {image!r}")
            out.add(tuple(sorted(uniq)))
        return SimplicialComplex(out)

    # -- structural predicates -------------------------------------------

    def ridges(self) -> dict:
        """Map ridge (codim-1 face of a facet) -> number of facets containing it."""
        counts: dict[tuple, int] = {}
        for f in self.facets:
            for r in combinations(f, len(f) - 1):
                counts[r] = counts.get(r, 0) + 1
        return counts

    def is_strongly_connected(self) -> bool:
        facets = list(self.facets)
        if len(facets) <= 1:
            return True
        index: dict[tuple, list[int]] = {}
        for i, f in enumerate(facets):
            for r in combinations(f, len(f) - 1):
                index.setdefault(r, []).append(i)
        seen = {0}
        todo = [0]
        while todo:
            i = todo.pop()
            for r in combinations(facets[i], len(facets[i]) - 1):
                for j in index[r]:
                    if j not in seen:
                        seen.add(j)
                        todo.append(j)
        return len(seen) == len(facets)

    def is_pseudomanifold(self, allow_boundary: bool = False) -> bool:
        """Pure + every ridge in exactly 2 facets (<= 2 with boundary) + strongly connected."""
        if not self.is_pure():
            return False
        limit_ok = all(
            (c <= 2 if allow_boundary else c == 2) for c in self.ridges().values()
        )
        return limit_ok and self.is_strongly_connected()

    def boundary_ridges(self) -> list[tuple]:
        """Ridges lying in exactly one facet."""
        return [r for r, c in self.ridges().items() if c == 1]


def make_complex(facets: Sequence[Iterable[Vertex]]) -> SimplicialComplex:
    """Build a complex from facet lists, deduplicating and absorbing subsets."""
    return SimplicialComplex(facets)


def is_subcomplex(small: SimplicialComplex, big: SimplicialComplex) -> bool:
    """True iff every facet of ``small`` is a face of some facet of ``big``."""
    by_vertex: dict[Vertex, list[frozenset]] = {}
    for f in big.facets:
        fs = frozenset(f)
        for v in f:
            by_vertex.setdefault(v, []).append(fs)
    for f in small.facets:
        fs = frozenset(f)
        v0 = f[0]
        if v0 not in by_vertex:
            return False
        if not any(fs <= host for host in by_vertex[v0]):
            return False
    return True


# -- products ------------------------------------------------------------


def staircase_product(*complexes: SimplicialComplex) -> SimplicialComplex:
    """Triangulation of |K1| x ... x |Km| on the vertex set V(K1) x ... x V(Km).

    For each facet tuple, the product cell is cut into the simplices spanned
    by maximal chains of the componentwise partial order (each factor ordered
    by its natural vertex order).  No new vertices are introduced, and the
    restriction to any face tuple is the staircase product of the faces.
    """
    if len(complexes) < 2:
        raise ComplexError("staircase_product needs at least two factors")
    facets: set[tuple] = set()
    factor_facets = [sorted(k.facets) for k in complexes]

    def rec(chosen: list[Simplex], idx: int):
        if idx == len(factor_facets):
            facets.update(_staircase_cell(chosen))
            return
        for f in factor_facets[idx]:
            rec(chosen + [f], idx + 1)

    rec([], 0)
    return SimplicialComplex(facets)


def _staircase_cell(simplices: Sequence[Simplex]) -> list[tuple]:
    """Maximal monotone chains through the grid s_1 x ... x s_m (each sorted)."""
    m = len(simplices)
    tops = [len(s) - 1 for s in simplices]
    out: list[tuple] = []

    def walk(pos: list[int], path: list[tuple]):
        if pos == tops:
            out.append(tuple(sorted(path)))
            return
        for j in range(m):
            if pos[j] < tops[j]:
                pos[j] += 1
                path.append(tuple(s[i] for s, i in zip(simplices, pos)))
                walk(pos, path)
                path.pop()
                pos[j] -= 1

    start = [0] * m
    walk(start, [tuple(s[0] for s in simplices)])
    return out


# -- group actions ---------------------------------------------------------


class GroupAction:
    """A (Z_3)^n action given by n commuting generator permutations of a vertex set."""

    def __init__(self, n: int, generators: Sequence[dict]):
        if len(generators) != n:
            raise ComplexError(f"expected {n} generators, got {len(generators)}")
        self.n = n
        self.generators = [dict(g) for g in generators]
        for g in self.generators:
            for v in g:
                w = g[g[g[v]]]
                if w != v:
                    raise ComplexError("generator order does not divide 3")
        for a in self.generators:
            for b in self.generators:
                for v in a:
                    if a[b[v]] != b[a[v]]:
                        raise ComplexError("generators do not commute")

    def element(self, exponents: Sequence[int]) -> dict:
        """Permutation for the group element with the given generator exponents."""
        verts = list(self.generators[0]) if self.generators else []
        perm = {v: v for v in verts}
        for g, e in zip(self.generators, exponents):
            for _ in range(e % 3):
                perm = {v: g[perm[v]] for v in perm}
        return perm

    def elements(self):
        """All 3^n permutations (exponent vector, permutation) pairs."""
        from itertools import product

        for exps in product(range(3), repeat=self.n):
            yield exps, self.element(exps)


def is_equivariant(K: SimplicialComplex, action) -> bool:
    """True iff every generator maps every facet of K to a facet of K.

    ``action`` may be a GroupAction, a single vertex permutation, or an
    iterable of them.  Each generator must be a genuine permutation of the
    vertex set of K; anything else raises.
    """
    if isinstance(action, GroupAction):
        generators = action.generators
    elif isinstance(action, dict):
        generators = [action]
    else:
        generators = list(action)
    for g in generators:
        missing = K.vertices - g.keys()
        if missing:
            raise ComplexError(
                f"action not defined on vertices: {sorted(missing)[:3]!r}...")
        image = {g[v] for v in K.vertices}
        if image != K.vertices:
            raise ComplexError("generator is not a permutation of the vertex set")
        for f in K.facets:
            image_f = tuple(sorted(g[v] for v in f))
            if image_f not in K.facets:
                return False
    return True
