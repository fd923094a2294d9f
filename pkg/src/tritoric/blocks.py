"""Product blocks: circles and coned circles glued from a fundamental cell.

A block is a product of n factors, each either a 3-vertex circle or a
4-vertex disk (cone on the circle).  Vertices are mark tuples: residues
0,1,2 on a circle, CENTER (sorting last) at a cone apex.  The fundamental
cell is the staircase product of one edge or cone triangle per factor;
the (Z_3)^n translates of the cell tile the block, and overlap
compatibility of the translates is verified rather than assumed.

Blocks come in two flavors that differ only in bookkeeping: a factor may
be coned "own" (the disk over its own coordinate circle) or coned "zero"
(the disk over the diagonal circle, hosted at a free coordinate slot).
The local complexes agree; the distinction matters to the global assembly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .complexes import (
    ComplexError,
    GroupAction,
    SimplicialComplex,
    make_complex,
    staircase_product,
)

CENTER = 9  # cone apex mark; sorts after circle residues and grid thirds

CIRCLE = "circle"
CONED_OWN = "coned-own"
CONED_ZERO = "coned-zero"


class BlockError(ComplexError):
    """Invalid block specification or failed gluing validation."""


@dataclass(frozen=True)
class FactorSpec:
    """Per-factor kinds of an n-factor block."""

    kinds: tuple

    def __post_init__(self):
        bad = [k for k in self.kinds if k not in (CIRCLE, CONED_OWN, CONED_ZERO)]
        if bad:
            raise BlockError(f"unknown factor kinds {bad!r}")
        if sum(1 for k in self.kinds if k == CONED_ZERO) > 1:
            raise BlockError("at most one coned-zero factor is allowed")

    @property
    def n(self) -> int:
        return len(self.kinds)

    @property
    def coned_positions(self) -> tuple:
        """1-based positions of coned factors, either flavor."""
        return tuple(i + 1 for i, k in enumerate(self.kinds) if k != CIRCLE)

    @property
    def circle_positions(self) -> tuple:
        return tuple(i + 1 for i, k in enumerate(self.kinds) if k == CIRCLE)

    @property
    def zero_position(self) -> int | None:
        for i, k in enumerate(self.kinds):
            if k == CONED_ZERO:
                return i + 1
        return None

    def uncone(self, positions: Sequence[int]) -> "FactorSpec":
        """Sub-spec with the given coned positions turned back into circles."""
        kinds = list(self.kinds)
        for p in positions:
            if kinds[p - 1] == CIRCLE:
                raise BlockError(f"position {p} is not coned")
            kinds[p - 1] = CIRCLE
        return FactorSpec(tuple(kinds))

    def describe(self) -> str:
        if self.zero_position is None and not self.coned_positions:
            return f"T^{self.n}"
        own = [p for p in self.coned_positions if p != self.zero_position]
        if self.zero_position is None:
            return f"C({','.join(map(str, own))})"
        rest = f";{','.join(map(str, own))}" if own else ""
        return f"B({self.zero_position}{rest})"


def torus_spec(n: int) -> FactorSpec:
    return FactorSpec((CIRCLE,) * n)


def c_spec(n: int, coned: Sequence[int]) -> FactorSpec:
    kinds = [CIRCLE] * n
    for p in coned:
        kinds[p - 1] = CONED_OWN
    return FactorSpec(tuple(kinds))


def b_spec(n: int, zero_at: int, coned: Sequence[int] = ()) -> FactorSpec:
    kinds = [CIRCLE] * n
    for p in coned:
        kinds[p - 1] = CONED_OWN
    if kinds[zero_at - 1] != CIRCLE:
        raise BlockError(f"zero host {zero_at} collides with a coned-own factor")
    kinds[zero_at - 1] = CONED_ZERO
    return FactorSpec(tuple(kinds))


# -- building blocks -----------------------------------------------------------


def cone_circle() -> SimplicialComplex:
    """The 4-vertex disk: boundary circle 0,1,2 plus the apex."""
    return make_complex([[CENTER, 0, 1], [CENTER, 1, 2], [CENTER, 2, 0]])


def block_vertex_count(spec: FactorSpec) -> int:
    out = 1
    for k in spec.kinds:
        out *= 3 if k == CIRCLE else 4
    return out


def fundamental_cell(spec: FactorSpec) -> SimplicialComplex:
    """Staircase triangulation of the base cell: one edge or cone triangle
    per factor, chained in the mark order 0 < 1 < CENTER.

    Vertices are n-tuples of marks; no vertices beyond the factor products.
    """
    factors = []
    for k in spec.kinds:
        if k == CIRCLE:
            factors.append(make_complex([[0, 1]]))
        else:
            factors.append(make_complex([[0, 1, CENTER]]))
    if spec.n == 1:
        return factors[0].relabel(lambda v: (v,))
    return staircase_product(*factors)


def _translate(marks: tuple, g: Sequence[int]) -> tuple:
    return tuple(
        m if m == CENTER else (m + gi) % 3 for m, gi in zip(marks, g)
    )


def build_block(spec: FactorSpec, validate: bool = True) -> SimplicialComplex:
    """Union of the 3^n translates of the fundamental cell.

    With ``validate`` (the default) every pair of translates is checked to
    induce the same triangulation on its overlap; a mismatch means the cell
    does not glue and raises BlockError with the offending pair.
    """
    cell = fundamental_cell(spec)
    translates = {}
    for g in product(range(3), repeat=spec.n):
        translates[g] = cell.relabel(lambda v, g=g: _translate(v, g))
    block = make_complex(
        f for K in translates.values() for f in K.facets
    )
    if validate:
        _validate_overlaps(translates)
    block.metadata["spec"] = spec
    return block


def _validate_overlaps(translates: dict):
    gs = sorted(translates)
    for i, g in enumerate(gs):
        Kg = translates[g]
        for h in gs[i + 1:]:
            Kh = translates[h]
            common = Kg.vertices & Kh.vertices
            if not common:
                continue
            from_g = _faces_within(Kg, common)
            from_h = _faces_within(Kh, common)
            if from_g != from_h:
                diff = (from_g ^ from_h)
                raise BlockError(
                    f"translate overlap mismatch between {g} and {h}: "
                    f"e.g. {sorted(diff)[0]!r}")


def _faces_within(K: SimplicialComplex, vertex_subset) -> frozenset:
    out = set()
    for f in K.facets:
        inter = tuple(v for v in f if v in vertex_subset)
        if inter:
            out.add(inter)
    # close under maximality only; compare full induced face sets
    closed = set()
    from itertools import combinations

    for s in out:
        for k in range(1, len(s) + 1):
            closed.update(combinations(s, k))
    return frozenset(closed)


def block_action(spec: FactorSpec) -> GroupAction:
    """(Z_3)^n on block vertices: generator i rotates residues at slot i,
    fixing centers."""
    verts = set()
    options = []
    for k in spec.kinds:
        options.append((0, 1, 2) if k == CIRCLE else (0, 1, 2, CENTER))
    for marks in product(*options):
        verts.add(marks)
    gens = []
    for i in range(spec.n):
        g = {}
        for v in verts:
            w = list(v)
            if w[i] != CENTER:
                w[i] = (w[i] + 1) % 3
            g[v] = tuple(w)
        gens.append(g)
    return GroupAction(spec.n, gens)
