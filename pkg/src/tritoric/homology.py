"""Exact integer simplicial homology via Smith normal form.

Boundary matrices are assembled with the alternating-sign convention on
sorted vertex lists.  Ranks and invariant factors are computed by a
two-phase reduction: a sparse unit-pivot elimination (compiled kernel when
available, pure Python otherwise) peels off the factors equal to 1, and
the small residual goes through the classic Smith algorithm with
arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Sequence

from .complexes import ComplexError, SimplicialComplex

try:  # compiled kernel is optional; the pure backend is always present
    from ._snfcore import BACKEND_NAME as SNF_BACKEND
    from ._snfcore import eliminate_unit_pivots as _eliminate
except ImportError:  # pragma: no cover - depends on build environment
    from ._snf_pure import BACKEND_NAME as SNF_BACKEND
    from ._snf_pure import eliminate_unit_pivots as _eliminate

from ._snf_pure import eliminate_unit_pivots as _eliminate_pure


# -- Smith normal form -------------------------------------------------------


def _to_rows(matrix) -> dict:
    """Accept a dense row-list or {row: {col: val}} sparse dict; copy to sparse."""
    rows: dict[int, dict[int, int]] = {}
    if isinstance(matrix, dict):
        for r, row in matrix.items():
            nz = {c: int(v) for c, v in row.items() if v}
            if nz:
                rows[r] = nz
    else:
        for r, row in enumerate(matrix):
            nz = {c: int(v) for c, v in enumerate(row) if v}
            if nz:
                rows[r] = nz
    return rows


def _classic_snf(rows: dict) -> list[int]:
    """Smith reduction of a (small) sparse residual; returns invariant factors.

    Pivot rule: nonzero entry of minimal absolute value, ties by smallest
    (row, col).  Exact arbitrary-precision arithmetic throughout.
    """
    factors: list[int] = []
    while rows:
        pr, pc, best = None, None, None
        for r in sorted(rows):
            for c in sorted(rows[r]):
                v = abs(rows[r][c])
                if best is None or v < best:
                    pr, pc, best = r, c, v
        while True:
            pivot = rows[pr][pc]
            # clear the pivot column by row operations; a nonzero remainder
            # is strictly smaller in absolute value and becomes the new pivot
            moved = False
            for r in sorted(rows):
                if r == pr or pc not in rows[r]:
                    continue
                q = rows[r][pc] // pivot
                _row_sub(rows, r, pr, q)
                if rows.get(r, {}).get(pc):
                    pr = r
                    moved = True
                    break
            if moved:
                continue
            # column is clear outside the pivot; clear the pivot row by
            # column operations (they only touch row pr now)
            prow = rows[pr]
            moved = False
            for c in sorted(prow):
                if c == pc:
                    continue
                q = prow[c] // pivot
                rem = prow[c] - q * pivot
                if rem:
                    prow[c] = rem
                    pc = c
                    moved = True
                    break
                del prow[c]
            if moved:
                continue
            # pivot isolated; enforce divisibility against everything left
            p = abs(pivot)
            bad = None
            for r in sorted(rows):
                if r == pr:
                    continue
                for c, v in rows[r].items():
                    if v % p:
                        bad = r
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            for c, v in rows[bad].items():  # row op: pivot row += offending row
                prow[c] = prow.get(c, 0) + v
        factors.append(abs(rows[pr][pc]))
        del rows[pr]
    return factors


def _row_sub(rows: dict, r: int, pr: int, q: int):
    if q == 0:
        return
    target = rows[r]
    for c, v in rows[pr].items():
        new = target.get(c, 0) - q * v
        if new == 0:
            target.pop(c, None)
        else:
            target[c] = new
    if not target:
        del rows[r]


def smith_normal_form(matrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    Accepts a dense list-of-rows or a sparse {row: {col: value}} mapping.
    The zero matrix yields ().
    """
    rows = _to_rows(matrix)
    try:
        ones, residual = _eliminate(rows)
    except OverflowError:  # compiled kernel hit its entry-size guard
        ones, residual = _eliminate_pure(_to_rows(matrix))
    tail = sorted(_classic_snf(residual))
    for a, b in zip(tail, tail[1:]):
        if b % a:
            raise AssertionError("invariant factors not in divisibility order")
    return tuple([1] * ones + tail)


def rank_and_torsion(matrix) -> tuple[int, list[int]]:
    """Rank and the invariant factors exceeding 1."""
    factors = smith_normal_form(matrix)
    return len(factors), [f for f in factors if f > 1]


def snf_oracle_minor_gcd(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Brute-force oracle: d_k = gcd of all k x k minors; factors d_k/d_{k-1}.

    Exponential; intended for matrices up to about 4x4 in tests.
    """
    m = [list(map(int, row)) for row in matrix]
    nrows, ncols = len(m), len(m[0]) if m else 0

    def minor_det(rs, cs):
        sub = [[m[r][c] for c in cs] for r in rs]
        k = len(rs)
        if k == 1:
            return sub[0][0]
        det = 0
        for j in range(k):
            sign = -1 if j % 2 else 1
            det += sign * sub[0][j] * _det([row[:j] + row[j + 1:] for row in sub[1:]])
        return det

    def _det(sq):
        k = len(sq)
        if k == 0:
            return 1
        if k == 1:
            return sq[0][0]
        det = 0
        for j in range(k):
            sign = -1 if j % 2 else 1
            det += sign * sq[0][j] * _det([row[:j] + row[j + 1:] for row in sq[1:]])
        return det

    factors = []
    prev = 1
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rs in combinations(range(nrows), k):
            for cs in combinations(range(ncols), k):
                g = gcd(g, minor_det(rs, cs))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return tuple(factors)


# -- chain complexes ---------------------------------------------------------


@dataclass
class ChainComplex:
    """Ordered simplex bases per dimension and integer boundary matrices."""

    bases: dict[int, list[tuple]]
    boundaries: dict[int, dict[int, dict[int, int]]]  # i -> sparse rows of d_i
    shapes: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return max(self.bases)

    def boundary_shape(self, i: int) -> tuple[int, int]:
        return self.shapes[i]


def boundary_matrices(K: SimplicialComplex, verify: bool = True) -> ChainComplex:
    """Chain complex of K with simplices sorted canonically per dimension.

    Entry conventions: column j of d_i is the boundary of the j-th i-simplex,
    with alternating signs over its sorted vertex list.  d_i d_{i+1} = 0 is
    asserted unless ``verify`` is disabled.
    """
    fb = K.faces_by_dim()
    bases = {d: sorted(fb[d]) for d in fb}
    index = {d: {s: i for i, s in enumerate(bases[d])} for d in bases}
    boundaries: dict[int, dict[int, dict[int, int]]] = {}
    shapes: dict[int, tuple[int, int]] = {}
    for d in range(1, K.dim + 1):
        rows: dict[int, dict[int, int]] = {}
        lower = index[d - 1]
        for col, simplex in enumerate(bases[d]):
            for j in range(len(simplex)):
                face = simplex[:j] + simplex[j + 1:]
                r = lower[face]
                rows.setdefault(r, {})[col] = -1 if j % 2 else 1
        boundaries[d] = rows
        shapes[d] = (len(bases[d - 1]), len(bases[d]))
    cc = ChainComplex(bases=bases, boundaries=boundaries, shapes=shapes)
    if verify:
        _assert_dd_zero(cc)
    return cc


def _assert_dd_zero(cc: ChainComplex):
    for d in range(2, cc.dim + 1):
        upper = cc.boundaries[d]
        lower = cc.boundaries[d - 1]
        # compose column-wise: (d_{d-1} d_d) column c
        cols_upper: dict[int, dict[int, int]] = {}
        for r, row in upper.items():
            for c, v in row.items():
                cols_upper.setdefault(c, {})[r] = v
        lower_cols: dict[int, dict[int, int]] = {}
        for r, row in lower.items():
            for c, v in row.items():
                lower_cols.setdefault(c, {})[r] = v
        for c, col in cols_upper.items():
            acc: dict[int, int] = {}
            for mid, v in col.items():
                for r, w in lower_cols.get(mid, {}).items():
                    acc[r] = acc.get(r, 0) + v * w
            if any(acc.values()):
                raise AssertionError(f"d d != 0 at dimension {d}, column {c}")


@dataclass
class HomologyProfile:
    """Unreduced Betti numbers and torsion coefficients per dimension."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def __str__(self):
        parts = []
        for d, (b, t) in enumerate(zip(self.betti, self.torsion)):
            tor = f" + torsion{list(t)}" if t else ""
            parts.append(f"H_{d} = Z^{b}{tor}")
        return "; ".join(parts)


def homology(K: SimplicialComplex) -> HomologyProfile:
    """Integer homology of K: b_i = n_i - rank d_i - rank d_{i+1}, plus torsion."""
    cc = boundary_matrices(K)
    dim = K.dim
    counts = {d: len(cc.bases.get(d, ())) for d in range(dim + 1)}
    ranks = {d: 0 for d in range(dim + 2)}
    torsions: dict[int, list[int]] = {d: [] for d in range(dim + 1)}
    for d in range(1, dim + 1):
        r, tor = rank_and_torsion(cc.boundaries[d])
        ranks[d] = r
        torsions[d - 1] = tor
    betti = tuple(
        counts[d] - ranks[d] - ranks[d + 1] for d in range(dim + 1)
    )
    if any(b < 0 for b in betti):
        raise ComplexError(f"negative Betti number computed: {betti}")
    return HomologyProfile(
        betti=betti,
        torsion=tuple(tuple(torsions[d]) for d in range(dim + 1)),
    )
