# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled unit-pivot elimination for sparse integer matrices.

Drop-in twin of ``tritoric._snf_pure.eliminate_unit_pivots``: rows are
C arrays of (column, int64 value) pairs kept sorted by column, row
combination is a linear merge, and column membership is tracked with
lazily-pruned row lists.  Entry arithmetic is guarded well inside the
int64 range; on overflow the caller falls back to the arbitrary-precision
pure backend, so exactness is never compromised.

The pivot rule matches the pure backend: unit entries by minimal
Markowitz fill score, ties by (row, col).  Column counts used in the
score may lag behind deletions, which only affects tie-breaking quality,
never exactness.
"""

from libc.stdlib cimport free, malloc, realloc

BACKEND_NAME = "compiled"

cdef long long FACTOR_GUARD = (<long long>1) << 31
cdef long long ENTRY_GUARD = (<long long>1) << 62


cdef struct Row:
    int* cols
    long long* vals
    int nnz
    int cap
    bint alive


cdef struct ColList:
    int* rows
    int nnz
    int cap


cdef inline int _row_reserve(Row* row, int need) except -1:
    cdef int cap
    if row.cap >= need:
        return 0
    cap = row.cap * 2
    if cap < need:
        cap = need
    row.cols = <int*>realloc(row.cols, cap * sizeof(int))
    row.vals = <long long*>realloc(row.vals, cap * sizeof(long long))
    if row.cols == NULL or row.vals == NULL:
        raise MemoryError()
    row.cap = cap
    return 0


cdef inline int _col_push(ColList* cl, int r) except -1:
    cdef int cap
    if cl.nnz == cl.cap:
        cap = cl.cap * 2 if cl.cap else 4
        cl.rows = <int*>realloc(cl.rows, cap * sizeof(int))
        if cl.rows == NULL:
            raise MemoryError()
        cl.cap = cap
    cl.rows[cl.nnz] = r
    cl.nnz += 1
    return 0


cdef inline int _row_find(Row* row, int c) noexcept nogil:
    cdef int lo = 0, hi = row.nnz - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if row.cols[mid] == c:
            return mid
        if row.cols[mid] < c:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef struct Heap:
    long long* score
    int* hr
    int* hc
    int n
    int cap


cdef inline int _heap_push(Heap* h, long long score, int r, int c) except -1:
    cdef int cap, i, parent
    if h.n == h.cap:
        cap = h.cap * 2 if h.cap else 1024
        h.score = <long long*>realloc(h.score, cap * sizeof(long long))
        h.hr = <int*>realloc(h.hr, cap * sizeof(int))
        h.hc = <int*>realloc(h.hc, cap * sizeof(int))
        if h.score == NULL or h.hr == NULL or h.hc == NULL:
            raise MemoryError()
        h.cap = cap
    i = h.n
    h.n += 1
    while i > 0:
        parent = (i - 1) >> 1
        if _heap_less(score, r, c, h.score[parent], h.hr[parent], h.hc[parent]):
            h.score[i] = h.score[parent]
            h.hr[i] = h.hr[parent]
            h.hc[i] = h.hc[parent]
            i = parent
        else:
            break
    h.score[i] = score
    h.hr[i] = r
    h.hc[i] = c
    return 0


cdef inline bint _heap_less(long long s1, int r1, int c1,
                            long long s2, int r2, int c2) noexcept nogil:
    if s1 != s2:
        return s1 < s2
    if r1 != r2:
        return r1 < r2
    return c1 < c2


cdef inline void _heap_pop(Heap* h, long long* score, int* r, int* c) noexcept nogil:
    cdef int i = 0, child
    cdef long long ls
    cdef int lr, lc
    score[0] = h.score[0]
    r[0] = h.hr[0]
    c[0] = h.hc[0]
    h.n -= 1
    if h.n == 0:
        return
    ls = h.score[h.n]
    lr = h.hr[h.n]
    lc = h.hc[h.n]
    while True:
        child = 2 * i + 1
        if child >= h.n:
            break
        if child + 1 < h.n and _heap_less(
                h.score[child + 1], h.hr[child + 1], h.hc[child + 1],
                h.score[child], h.hr[child], h.hc[child]):
            child += 1
        if _heap_less(h.score[child], h.hr[child], h.hc[child], ls, lr, lc):
            h.score[i] = h.score[child]
            h.hr[i] = h.hr[child]
            h.hc[i] = h.hc[child]
            i = child
        else:
            break
    h.score[i] = ls
    h.hr[i] = lr
    h.hc[i] = lc


def eliminate_unit_pivots(dict rows_dict):
    """Peel off all +-1 pivots; returns (ones, residual_rows)."""
    # dense reindexing of arbitrary integer row/col ids, order-preserving
    row_ids = sorted(rows_dict)
    col_id_set = set()
    for row in rows_dict.values():
        col_id_set.update(row)
    col_ids = sorted(col_id_set)
    cdef int R = len(row_ids)
    cdef int C = len(col_ids)
    if R == 0:
        return 0, {}
    row_index = {rid: i for i, rid in enumerate(row_ids)}
    col_index = {cid: j for j, cid in enumerate(col_ids)}

    cdef Row* rows = <Row*>malloc(R * sizeof(Row))
    cdef ColList* cols = <ColList*>malloc(C * sizeof(ColList))
    cdef int* col_count = <int*>malloc(C * sizeof(int))
    if rows == NULL or cols == NULL or col_count == NULL:
        raise MemoryError()
    cdef Heap heap
    heap.score = NULL
    heap.hr = NULL
    heap.hc = NULL
    heap.n = 0
    heap.cap = 0

    cdef int i, j, k, nnz
    cdef long long v
    for j in range(C):
        cols[j].rows = NULL
        cols[j].nnz = 0
        cols[j].cap = 0
        col_count[j] = 0
    for i in range(R):
        # cleanup in the finally block must never see garbage pointers
        rows[i].cols = NULL
        rows[i].vals = NULL
        rows[i].nnz = 0
        rows[i].cap = 0
        rows[i].alive = False

    try:
        for i in range(R):
            src = rows_dict[row_ids[i]]
            nnz = len(src)
            rows[i].cols = <int*>malloc(nnz * sizeof(int))
            rows[i].vals = <long long*>malloc(nnz * sizeof(long long))
            if rows[i].cols == NULL or rows[i].vals == NULL:
                raise MemoryError()
            rows[i].nnz = nnz
            rows[i].cap = nnz
            rows[i].alive = True
            k = 0
            for cid in sorted(src):
                value = src[cid]
                v = value
                rows[i].cols[k] = col_index[cid]
                rows[i].vals[k] = v
                k += 1
            for k in range(nnz):
                j = rows[i].cols[k]
                _col_push(&cols[j], i)
                col_count[j] += 1

        for i in range(R):
            for k in range(rows[i].nnz):
                v = rows[i].vals[k]
                if v == 1 or v == -1:
                    j = rows[i].cols[k]
                    _heap_push(&heap,
                               <long long>(rows[i].nnz - 1) * (col_count[j] - 1),
                               i, j)

        ones = _run(rows, cols, col_count, &heap, R, C)

        residual = {}
        for i in range(R):
            if rows[i].alive and rows[i].nnz:
                out = {}
                for k in range(rows[i].nnz):
                    out[col_ids[rows[i].cols[k]]] = rows[i].vals[k]
                residual[row_ids[i]] = out
        return ones, residual
    finally:
        for i in range(R):
            free(rows[i].cols)
            free(rows[i].vals)
        for j in range(C):
            free(cols[j].rows)
        free(rows)
        free(cols)
        free(col_count)
        free(heap.score)
        free(heap.hr)
        free(heap.hc)


cdef long _run(Row* rows, ColList* cols, int* col_count, Heap* heap,
               int R, int C) except -1:
    cdef long ones = 0
    cdef long long score, cur, factor, fa, newv, pv
    cdef int r, c, k, idx, rr, t, p, m, u
    cdef Row pivot
    cdef Row* target
    cdef ColList* cl
    cdef int* mcols = NULL
    cdef long long* mvals = NULL
    cdef int mcap = 0
    cdef int* ucols = NULL  # columns that became units in the current merge
    cdef int ucap = 0, un

    try:
        while heap.n:
            _heap_pop(heap, &score, &r, &c)
            if not rows[r].alive:
                continue
            idx = _row_find(&rows[r], c)
            if idx < 0:
                continue
            if rows[r].vals[idx] != 1 and rows[r].vals[idx] != -1:
                continue
            cur = <long long>(rows[r].nnz - 1) * (col_count[c] - 1)
            if cur > score:
                _heap_push(heap, cur, r, c)
                continue

            ones += 1
            pivot = rows[r]
            pv = pivot.vals[idx]
            rows[r].alive = False
            rows[r].cols = NULL
            rows[r].vals = NULL
            rows[r].nnz = 0
            for k in range(pivot.nnz):
                col_count[pivot.cols[k]] -= 1

            cl = &cols[c]
            for k in range(cl.nnz):
                rr = cl.rows[k]
                if rr == r or not rows[rr].alive:
                    continue
                target = &rows[rr]
                idx = _row_find(target, c)
                if idx < 0:
                    continue
                factor = target.vals[idx] * pv
                fa = factor if factor > 0 else -factor
                if fa >= FACTOR_GUARD:
                    raise OverflowError("entry growth beyond the int64 guard")
                if mcap < target.nnz + pivot.nnz:
                    mcap = 2 * (target.nnz + pivot.nnz)
                    mcols = <int*>realloc(mcols, mcap * sizeof(int))
                    mvals = <long long*>realloc(mvals, mcap * sizeof(long long))
                    if mcols == NULL or mvals == NULL:
                        raise MemoryError()
                if ucap < pivot.nnz + target.nnz:
                    ucap = 2 * (pivot.nnz + target.nnz)
                    ucols = <int*>realloc(ucols, ucap * sizeof(int))
                    if ucols == NULL:
                        raise MemoryError()
                # target := target - factor * pivot, by sorted merge
                t = 0
                p = 0
                m = 0
                un = 0
                while t < target.nnz or p < pivot.nnz:
                    if p >= pivot.nnz or (t < target.nnz and
                                          target.cols[t] < pivot.cols[p]):
                        mcols[m] = target.cols[t]
                        mvals[m] = target.vals[t]
                        t += 1
                        m += 1
                        continue
                    if t >= target.nnz or target.cols[t] > pivot.cols[p]:
                        if pivot.vals[p] >= FACTOR_GUARD or \
                                -pivot.vals[p] >= FACTOR_GUARD:
                            raise OverflowError(
                                "entry growth beyond the int64 guard")
                        newv = -factor * pivot.vals[p]
                        mcols[m] = pivot.cols[p]
                        mvals[m] = newv
                        _col_push(&cols[pivot.cols[p]], rr)
                        col_count[pivot.cols[p]] += 1
                        if newv == 1 or newv == -1:
                            ucols[un] = pivot.cols[p]
                            un += 1
                        p += 1
                        m += 1
                        continue
                    # same column in both rows
                    if pivot.vals[p] >= FACTOR_GUARD or \
                            -pivot.vals[p] >= FACTOR_GUARD or \
                            target.vals[t] >= ENTRY_GUARD or \
                            -target.vals[t] >= ENTRY_GUARD:
                        raise OverflowError("entry growth beyond the int64 guard")
                    newv = target.vals[t] - factor * pivot.vals[p]
                    if newv >= ENTRY_GUARD or -newv >= ENTRY_GUARD:
                        raise OverflowError("entry growth beyond the int64 guard")
                    if newv != 0:
                        mcols[m] = target.cols[t]
                        mvals[m] = newv
                        if newv == 1 or newv == -1:
                            ucols[un] = target.cols[t]
                            un += 1
                        m += 1
                    else:
                        col_count[target.cols[t]] -= 1
                    t += 1
                    p += 1
                _row_reserve(target, m)
                for t in range(m):
                    target.cols[t] = mcols[t]
                    target.vals[t] = mvals[t]
                target.nnz = m
                if m == 0:
                    target.alive = False
                else:
                    for u in range(un):
                        _heap_push(heap,
                                   <long long>(m - 1) * (col_count[ucols[u]] - 1),
                                   rr, ucols[u])
            cl.nnz = 0
            free(pivot.cols)
            free(pivot.vals)
    finally:
        free(mcols)
        free(mvals)
        free(ucols)
    return ones
