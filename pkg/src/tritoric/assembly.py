"""Global equivariant triangulations of toric quotients over simple polytopes.

The manifold decomposes over the cubical subdivision of the base polytope:
the piece over a face with facet set S is a product of circles (one per
coordinate not matched by S) and disks (one per facet in S).  Each piece is
tiled by 3^n product cells: arcs on circle factors, cone triangles on disk
factors.  Every cell face is triangulated exactly once, in a shared
registry keyed by its global vertex set:

  * a face whose cone pieces all touch their disk centers is new to its
    piece and is triangulated by pulling from its canonical corner (disk
    centers, arc tops) over its already-triangulated boundary;
  * any other face lies over a larger polytope face, whose piece was built
    earlier (pieces are built by increasing codimension), and receives the
    induced restriction of that triangulation.

Gluing between pieces is therefore by construction; every face's
triangulation is still checked against the expected simplex count, and the
assembled complex is validated for vertex stratification, subcomplex
relations between pieces, and equivariance.

Vertex labels are pairs (face key, digit vector): the digit vector are the
coordinates of a 3-torsion point of the torus over the face's center, in
the canonical basis of its surviving circle factors.  A disk factor for a
facet with symbol e_j sits at slot j; the e_0 disk sits at the smallest
free slot and its boundary circle winds diagonally, contributing to every
coordinate, which the digit reduction accounts for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Sequence

from .blocks import CIRCLE, CONED_OWN, CONED_ZERO, FactorSpec
from .complexes import (
    ComplexError,
    GroupAction,
    SimplicialComplex,
    is_subcomplex,
    make_complex,
)
from .polytopes import (
    CharacteristicFunction,
    Face,
    PolytopeError,
    SimplePolytope,
    simplex_polytope,
)

N_MAX_ASSEMBLY = 3


class GluingError(ComplexError):
    """Two pieces induce different triangulations on a shared face."""


# -- cubical subdivision -------------------------------------------------------


@dataclass(frozen=True)
class CubicalCell:
    """The cube over a face: its vertices are the centers of larger faces."""

    base_key: tuple  # facet set of the face sigma
    cube_vertex_keys: tuple  # facet sets of all faces tau >= sigma

    @property
    def dim(self) -> int:
        return len(self.base_key)


def cubical_subdivision(Q: SimplePolytope) -> list[CubicalCell]:
    """One cube per face of Q; the cube over sigma has 2^codim(sigma) vertices."""
    lattice = Q.face_lattice()
    by_key = {f.facet_set: f for f in lattice}
    cells = []
    for f in lattice:
        ups = tuple(sorted(
            tuple(sorted(s)) for s in by_key if s <= f.facet_set))
        cells.append(CubicalCell(base_key=f.key(), cube_vertex_keys=ups))
    return cells


def cubical_face_relation(a: CubicalCell, b: CubicalCell) -> bool:
    """True iff the cube of b is a face of the cube of a (base of a inside base of b)."""
    return set(b.base_key) <= set(a.base_key)


# -- block specs from the characteristic function ------------------------------


def block_spec_for_face(Q: SimplePolytope, xi: CharacteristicFunction,
                        face: Face) -> FactorSpec:
    """Factor kinds of the piece over a face: coned at the slots named by the
    facet symbols, with the e_0 disk hosted at the smallest free slot."""
    if not xi.is_standard():
        raise PolytopeError("characteristic function is not standard")
    symbols = xi.symbols_of_face(face)
    if len(set(symbols)) != len(symbols):
        raise PolytopeError(
            f"symbols repeat on face {face.key()}: not standard there")
    kinds = [CIRCLE] * Q.n
    for s in symbols:
        if s >= 1:
            kinds[s - 1] = CONED_OWN
    if 0 in symbols:
        free = [p for p in range(1, Q.n + 1) if kinds[p - 1] == CIRCLE]
        kinds[free[0] - 1] = CONED_ZERO
    return FactorSpec(tuple(kinds))


# -- per-face label arithmetic --------------------------------------------------


class _FaceContext:
    """Digit basis and coset reduction for the torus over one face's center."""

    __slots__ = ("key", "facet_set", "n", "own", "has_zero", "host",
                 "digit_positions", "facet_at", "dim")

    def __init__(self, Q: SimplePolytope, xi: CharacteristicFunction, face: Face):
        self.key = face.key()
        self.facet_set = face.facet_set
        self.n = Q.n
        symbols = {xi.assignment[f]: f for f in face.facet_set}
        if len(symbols) != len(face.facet_set):
            raise PolytopeError(f"repeated symbols on face {self.key}")
        self.own = sorted(s for s in symbols if s >= 1)
        self.has_zero = 0 in symbols
        free = [p for p in range(1, self.n + 1) if p not in self.own]
        self.host = free[0] if self.has_zero else None
        coned = set(self.own) | ({self.host} if self.has_zero else set())
        self.digit_positions = tuple(
            p for p in range(1, self.n + 1) if p not in coned)
        self.facet_at = {}
        for s, f in symbols.items():
            self.facet_at[s if s >= 1 else self.host] = f
        self.dim = len(self.digit_positions)

    def reduce(self, w: Sequence[int]) -> tuple:
        """Canonical digits of the coset of w in Z_3^n modulo the face's symbols."""
        w = [x % 3 for x in w]
        if self.has_zero:
            s = w[self.host - 1]
            for p in self.digit_positions:
                w[p - 1] = (w[p - 1] - s) % 3
        return tuple(w[p - 1] for p in self.digit_positions)

    def lift(self, digits: Sequence[int]) -> list:
        w = [0] * self.n
        for p, d in zip(self.digit_positions, digits):
            w[p - 1] = d % 3
        return w


# -- cell face descriptors -------------------------------------------------------

# Per-slot piece faces of a product cell.  Residues live on the slot's
# circle (the diagonal circle for a zero slot).
_ARC = "arc"  # boundary arc r -> r+1           (dim 1)
_BV = "bv"  # boundary vertex r                 (dim 0)
_TRI = "tri"  # full cone triangle over arc r   (dim 2)
_RAD = "rad"  # radial edge center -> r         (dim 1)
_CV = "cv"  # center vertex                     (dim 0)

_PIECE_DIM = {_ARC: 1, _BV: 0, _TRI: 2, _RAD: 1, _CV: 0}


def _piece_vertices(piece) -> list:
    kind = piece[0]
    if kind == _ARC:
        r = piece[1]
        return [("r", r), ("r", (r + 1) % 3)]
    if kind == _BV:
        return [("r", piece[1])]
    if kind == _TRI:
        r = piece[1]
        return [("r", r), ("r", (r + 1) % 3), ("c",)]
    if kind == _RAD:
        return [("c",), ("r", piece[1])]
    return [("c",)]


def _piece_facets(piece) -> list:
    kind = piece[0]
    if kind == _ARC:
        r = piece[1]
        return [(_BV, r), (_BV, (r + 1) % 3)]
    if kind == _TRI:
        r = piece[1]
        return [(_RAD, r), (_RAD, (r + 1) % 3), (_ARC, r)]
    if kind == _RAD:
        return [(_CV,), (_BV, piece[1])]
    return []


def _piece_top(piece) -> tuple:
    kind = piece[0]
    if kind == _ARC:
        return ("r", (piece[1] + 1) % 3)
    if kind == _BV:
        return ("r", piece[1])
    return ("c",)


def _face_dim(desc) -> int:
    return sum(_PIECE_DIM[p[0]] for p in desc)


def _expected_facets(desc) -> int:
    """Simplex count of any no-new-vertex triangulation of the product cell
    (its normalized volume): multinomial over the piece dimensions."""
    total = _face_dim(desc)
    out = factorial(total)
    for p in desc:
        out //= factorial(_PIECE_DIM[p[0]])
    return out


# -- the assembler ---------------------------------------------------------------


@dataclass
class AssembledComplex:
    """Result of a toric assembly, with per-face pieces and provenance."""

    complex: SimplicialComplex
    blocks: dict  # face key -> SimplicialComplex
    provenance: dict  # facet (sorted label tuple) -> face key of its piece
    Q: SimplePolytope
    xi: CharacteristicFunction
    n: int
    contexts: dict = field(default_factory=dict)

    def action(self) -> GroupAction:
        """The global (Z_3)^n action on assembled vertex labels."""
        gens = []
        for i in range(1, self.n + 1):
            g = {}
            for v in self.complex.vertices:
                key, digits = v
                ctx = self.contexts[key]
                w = ctx.lift(digits)
                w[i - 1] += 1
                g[v] = (key, ctx.reduce(w))
            gens.append(g)
        return GroupAction(self.n, gens)

    def vertices_over(self, face_key: tuple) -> list:
        return [v for v in self.complex.vertices if v[0] == tuple(face_key)]


class _Assembler:
    def __init__(self, Q: SimplePolytope, xi: CharacteristicFunction):
        if not xi.is_standard():
            raise PolytopeError("characteristic function is not standard")
        self.Q = Q
        self.xi = xi
        self.n = Q.n
        self.lattice = sorted(Q.face_lattice(), key=lambda f: (f.codim, f.key()))
        self.ctx = {f.key(): _FaceContext(Q, xi, f) for f in self.lattice}
        self.registry: dict[frozenset, tuple] = {}
        self.blocks: dict[tuple, list] = {}
        self._label_cache: dict = {}

    # vertex labels ---------------------------------------------------------

    def _label(self, marks: tuple, ctx: _FaceContext) -> tuple:
        got = self._label_cache.get((marks, ctx.key))
        if got is not None:
            return got
        collapsed = []
        w = [0] * self.n
        for p in range(1, self.n + 1):
            mark = marks[p - 1]
            if mark[0] == "c":
                collapsed.append(ctx.facet_at[p])
            else:
                r = mark[1]
                if ctx.has_zero and p == ctx.host:
                    # the diagonal circle winds through every coordinate
                    for j in range(self.n):
                        w[j] += r
                else:
                    w[p - 1] += r
        tau_key = tuple(sorted(collapsed))
        tau_ctx = self.ctx[tau_key]
        label = (tau_key, tau_ctx.reduce(w))
        self._label_cache[(marks, ctx.key)] = label
        return label

    def _face_labels(self, desc, ctx) -> list:
        per_slot = [_piece_vertices(p) for p in desc]
        return [self._label(marks, ctx) for marks in product(*per_slot)]

    # face triangulation ----------------------------------------------------

    def _triangulate(self, desc: tuple, ctx: _FaceContext) -> tuple:
        labels = self._face_labels(desc, ctx)
        key = frozenset(labels)
        hit = self.registry.get(key)
        if hit is not None:
            return hit
        rho_min = frozenset(
            ctx.facet_at[p + 1]
            for p, piece in enumerate(desc) if piece[0] in (_TRI, _RAD, _CV))
        if rho_min != ctx.facet_set:
            tri = self._restrict(desc, key, rho_min)
        elif _face_dim(desc) == 0:
            tri = ((labels[0],),)
        else:
            tri = self._pull(desc, ctx)
        self._check(desc, tri, ctx)
        self.registry[key] = tri
        return tri

    def _restrict(self, desc, key: frozenset, rho_min: frozenset) -> tuple:
        """Induced triangulation of an already-covered face, read off the
        piece built for the polytope face it lies over."""
        host_key = tuple(sorted(rho_min))
        host_facets = self.blocks.get(host_key)
        if host_facets is None:
            raise GluingError(
                f"face over {host_key} requested before its piece was built")
        found = set()
        for F in host_facets:
            inter = tuple(v for v in F if v in key)
            if inter:
                found.add(inter)
        maximal = [s for s in found
                   if not any(set(s) < set(t) for t in found if len(t) > len(s))]
        want = _face_dim(desc)
        top = [tuple(s) for s in maximal if len(s) == want + 1]
        if len(top) != len(maximal):
            raise GluingError(
                f"restriction to a shared face over {host_key} is not pure: "
                f"dims {sorted({len(s) - 1 for s in maximal})}, expected {want}")
        return tuple(sorted(top))

    def _pull(self, desc, ctx) -> tuple:
        apex_marks = tuple(_piece_top(p) for p in desc)
        apex = self._label(apex_marks, ctx)
        boundary: set = set()
        for slot, piece in enumerate(desc):
            for pf in _piece_facets(piece):
                sub = desc[:slot] + (pf,) + desc[slot + 1:]
                boundary.update(self._triangulate(sub, ctx))
        out = []
        for F in boundary:
            if apex not in F:
                out.append(tuple(sorted(F + (apex,))))
        return tuple(sorted(out))

    def _check(self, desc, tri, ctx):
        want_dim = _face_dim(desc)
        want_count = _expected_facets(desc)
        if len(tri) != want_count or any(len(F) != want_dim + 1 for F in tri):
            raise GluingError(
                f"face {desc!r} over {ctx.key} triangulated with "
                f"{len(tri)} facets (expected {want_count}) "
                f"dims {sorted({len(F) - 1 for F in tri})} (expected {want_dim})")

    # pieces ------------------------------------------------------------------

    def _build_block(self, face: Face):
        ctx = self.ctx[face.key()]
        options = []
        for p in range(1, self.n + 1):
            if p in ctx.facet_at:
                options.append([(_TRI, r) for r in range(3)])
            else:
                options.append([(_ARC, r) for r in range(3)])
        facets: set = set()
        for cell in product(*options):
            facets.update(self._triangulate(tuple(cell), ctx))
        self.blocks[face.key()] = sorted(facets)

    def run(self) -> AssembledComplex:
        for face in self.lattice:
            self._build_block(face)
        provenance = {}
        all_facets = []
        for face in self.lattice:
            key = face.key()
            for F in self.blocks[key]:
                all_facets.append(F)
                # deepest contributing face wins (longest facet set)
                old = provenance.get(F)
                if old is None or len(key) > len(old):
                    provenance[F] = key
        assembled = make_complex(all_facets)
        blocks = {k: make_complex(v) for k, v in self.blocks.items()}
        provenance = {F: provenance[F] for F in assembled.facets}
        out = AssembledComplex(
            complex=assembled, blocks=blocks, provenance=provenance,
            Q=self.Q, xi=self.xi, n=self.n, contexts=self.ctx)
        _validate(out)
        return out


def _validate(a: AssembledComplex):
    # (b) vertex stratification: 3^(dim tau) vertices over each face center
    per_face: dict[tuple, int] = {}
    for key, _digits in a.complex.vertices:
        per_face[key] = per_face.get(key, 0) + 1
    total = 0
    for face in a.Q.face_lattice():
        d = a.Q.n - face.codim
        want = 3 ** d
        got = per_face.get(face.key(), 0)
        if got != want:
            raise GluingError(
                f"face {face.key()} carries {got} vertices, expected {want}")
        total += want
    if len(a.complex.vertices) != total:
        raise GluingError("stray vertices outside the face stratification")
    # (a) subcomplex relations between pieces
    lattice = a.Q.face_lattice()
    for small in lattice:  # small = deeper face sigma
        for big in lattice:  # tau >= sigma, strictly larger
            if big.facet_set < small.facet_set:
                if not is_subcomplex(a.blocks[big.key()], a.blocks[small.key()]):
                    raise GluingError(
                        f"piece over {big.key()} is not a subcomplex of the "
                        f"piece over {small.key()}")
    # (c) equivariance of the assembled complex
    from .complexes import is_equivariant

    if not is_equivariant(a.complex, a.action()):
        raise GluingError("assembled complex is not equivariant")


def assemble_toric(Q: SimplePolytope, characteristic: Sequence[int],
                   n_max: int = N_MAX_ASSEMBLY) -> AssembledComplex:
    """Equivariant triangulation of the toric quotient of (Q, characteristic).

    ``characteristic`` assigns a symbol index in 0..n to each facet
    (0 denotes the diagonal e_1 + ... + e_n); it must be standard.
    """
    if Q.n > n_max:
        raise ComplexError(f"n={Q.n} exceeds the configured limit {n_max}")
    xi = CharacteristicFunction(Q, characteristic)
    return _Assembler(Q, xi).run()


def assemble_cpn(n: int, n_max: int = N_MAX_ASSEMBLY) -> AssembledComplex:
    """The projective-space triangulation over the n-simplex: facet i -> e_i.

    Vertex count is exactly (4^(n+1) - 1) / 3.
    """
    if not 1 <= n <= n_max:
        raise ComplexError(f"n={n} out of range 1..{n_max}")
    out = assemble_toric(simplex_polytope(n), list(range(n + 1)), n_max=n_max)
    want = vertex_count_formula(n)
    got = len(out.complex.vertices)
    if got != want:
        raise GluingError(f"vertex count {got} != {want}")
    return out


def vertex_count_formula(n: int) -> int:
    """(4^(n+1) - 1) / 3, cross-checked against the face-lattice sum."""
    from math import comb

    closed = (4 ** (n + 1) - 1) // 3
    stratified = sum(comb(n + 1, k + 1) * 3 ** k for k in range(n + 1))
    if closed != stratified:
        raise AssertionError("vertex count identities disagree")
    return closed


def render_label(label) -> str:
    """Canonical string for an assembled vertex: 'f<i.j...>|<digits>'."""
    key, digits = label
    return f"f{'.'.join(map(str, key))}|{''.join(map(str, digits))}"


def parse_label(text: str) -> tuple:
    if not text.startswith("f") or "|" not in text:
        raise ValueError(f"bad assembled label {text!r}")
    head, tail = text[1:].split("|", 1)
    key = tuple(int(x) for x in head.split(".")) if head else ()
    digits = tuple(int(ch) for ch in tail)
    return (key, digits)
