"""Pure-Python sparse integer elimination (reference backend).

Works on a dict-of-dicts sparse matrix with arbitrary-precision Python
integers.  The unit-pivot phase peels off invariant factors equal to 1
using only unimodular operations; whatever remains is returned for the
(small) classic Smith reduction.
"""

from __future__ import annotations

import heapq

BACKEND_NAME = "pure"


def eliminate_unit_pivots(rows: dict) -> tuple[int, dict]:
    """Eliminate all +-1 pivots from a sparse matrix, in place.

    ``rows`` maps row index -> {col index: nonzero int}.  Returns
    ``(ones, residual_rows)`` where ``ones`` is the number of unit invariant
    factors split off and ``residual_rows`` contains no +-1 entries.

    Pivots are chosen among unit entries by minimal Markowitz fill score
    (nnz(row)-1)*(nnz(col)-1), ties broken by (row, col); the choice is
    deterministic.
    """
    cols: dict[int, set] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    heap: list[tuple[int, int, int]] = []
    for r, row in rows.items():
        for c, v in row.items():
            if v == 1 or v == -1:
                score = (len(row) - 1) * (len(cols[c]) - 1)
                heap.append((score, r, c))
    heapq.heapify(heap)

    ones = 0
    while heap:
        score, r, c = heapq.heappop(heap)
        row = rows.get(r)
        if row is None or c not in row:
            continue
        v = row[c]
        if v != 1 and v != -1:
            continue
        cur = (len(row) - 1) * (len(cols[c]) - 1)
        if cur > score:
            heapq.heappush(heap, (cur, r, c))
            continue

        ones += 1
        pivot_row = dict(row)
        del rows[r]
        for cc in pivot_row:
            cols[cc].discard(r)

        for rr in list(cols.get(c, ())):
            target = rows[rr]
            factor = target[c] * v  # v in {1,-1}: exact quotient target[c]/v
            for cc, pv in pivot_row.items():
                if cc == c:
                    del target[c]
                    cols[c].discard(rr)
                    continue
                new = target.get(cc, 0) - factor * pv
                if new == 0:
                    if cc in target:
                        del target[cc]
                        cols[cc].discard(rr)
                else:
                    if cc not in target:
                        cols.setdefault(cc, set()).add(rr)
                    target[cc] = new
                    if new == 1 or new == -1:
                        heapq.heappush(
                            heap,
                            ((len(target) - 1) * (len(cols[cc]) - 1), rr, cc))
            if not target:
                del rows[rr]
        cols.pop(c, None)

    return ones, rows
