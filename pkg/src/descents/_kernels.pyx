# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the fast twin of ``_kernels_py``.

Same functions, same semantics, same output order; see the pure module for
the shared conventions.  Accumulation is signed 64-bit with explicit
overflow detection (the arithmetic runs in 128 bits and is range-checked
before being stored).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.limits cimport LLONG_MAX, LLONG_MIN
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

cdef extern from *:
    ctypedef long long int128 "__int128"

BACKEND = "cython"

DEF MAX_PARTS = 64

cdef long long _OVER = LLONG_MAX
cdef long long _UNDER = LLONG_MIN


# ---------------------------------------------------------------------------
# group-algebra convolution

cdef tuple _unrank(int n, long long rank, long long* fact):
    cdef int avail[32]
    cdef int i, j, d
    cdef long long f
    for i in range(n):
        avail[i] = i + 1
    items = []
    for i in range(n):
        f = fact[n - 1 - i]
        d = <int>(rank // f)
        rank -= d * f
        items.append(avail[d])
        for j in range(d, n - 1 - i):
            avail[j] = avail[j + 1]
    return tuple(items)


def convolve(int n, a_items, b_items):
    """Sparse integer group-algebra product; see the pure twin."""
    cdef Py_ssize_t ka = len(a_items), kb = len(b_items)
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n > 255:
        raise ValueError("degree too large for the compiled kernel")
    if ka == 0 or kb == 0:
        return {}

    cdef unsigned char* aimg = <unsigned char*>malloc(ka * n)
    cdef unsigned char* bimg = <unsigned char*>malloc(kb * n)
    cdef long long* acoef = <long long*>malloc(ka * sizeof(long long))
    cdef long long* bcoef = <long long*>malloc(kb * sizeof(long long))
    cdef long long* acc = NULL
    cdef long long fact[21]
    cdef unsigned char z[256]
    cdef Py_ssize_t ia, ib
    cdef int i, j, c, zi
    cdef long long nfact, rank, ca, cb
    cdef int128 tmp
    cdef bint dense = n <= 9
    result = {}
    if aimg == NULL or bimg == NULL or acoef == NULL or bcoef == NULL:
        raise MemoryError()
    try:
        for ia, (img, coeff) in enumerate(a_items):
            for i in range(n):
                aimg[ia * n + i] = img[i]
            acoef[ia] = coeff  # raises OverflowError beyond 64 bits
        for ib, (img, coeff) in enumerate(b_items):
            for i in range(n):
                bimg[ib * n + i] = img[i]
            bcoef[ib] = coeff

        if dense:
            nfact = 1
            fact[0] = 1
            for i in range(1, n + 1):
                nfact *= i
                fact[i] = nfact
            acc = <long long*>calloc(nfact, sizeof(long long))
            if acc == NULL:
                raise MemoryError()
            for ia in range(ka):
                ca = acoef[ia]
                for ib in range(kb):
                    cb = bcoef[ib]
                    rank = 0
                    for i in range(n):
                        z[i] = aimg[ia * n + bimg[ib * n + i] - 1]
                    for i in range(n):
                        c = 0
                        zi = z[i]
                        for j in range(i + 1, n):
                            if z[j] < zi:
                                c += 1
                        rank = rank * (n - i) + c
                    tmp = <int128>acc[rank] + <int128>ca * <int128>cb
                    if tmp > <int128>_OVER or tmp < <int128>_UNDER:
                        raise OverflowError(
                            "coefficient exceeds signed 64-bit range")
                    acc[rank] = <long long>tmp
            for rank in range(nfact):
                if acc[rank]:
                    result[_unrank(n, rank, fact)] = acc[rank]
        else:
            # dict accumulation keyed by the composed one-line bytes
            sparse = {}
            for ia in range(ka):
                ca = acoef[ia]
                for ib in range(kb):
                    cb = bcoef[ib]
                    for i in range(n):
                        z[i] = aimg[ia * n + bimg[ib * n + i] - 1]
                    key = PyBytes_FromStringAndSize(<char*>z, n)
                    prev = sparse.get(key)
                    tmp = <int128>ca * <int128>cb
                    if prev is not None:
                        tmp = tmp + <int128>(<long long>prev)
                    if tmp > <int128>_OVER or tmp < <int128>_UNDER:
                        raise OverflowError(
                            "coefficient exceeds signed 64-bit range")
                    if tmp != 0:
                        sparse[key] = <long long>tmp
                    elif prev is not None:
                        del sparse[key]
            for key, value in sparse.items():
                result[tuple(bytearray(key))] = value
    finally:
        free(aimg)
        free(bimg)
        free(acoef)
        free(bcoef)
        free(acc)
    return result


# ---------------------------------------------------------------------------
# margin-matrix enumeration

cdef void _load_margins(object row_margins, object col_margins,
                        int* rows, int* cols, int* s_out, int* r_out) except *:
    cdef int s = len(row_margins), r = len(col_margins)
    cdef int i, total_r, total_c
    if s == 0 or r == 0:
        raise ValueError("margins must be non-empty")
    if s > MAX_PARTS or r > MAX_PARTS:
        raise ValueError("too many parts for the compiled kernel")
    total_r = 0
    total_c = 0
    for i in range(s):
        rows[i] = row_margins[i]
        if rows[i] < 1:
            raise ValueError("margins must be positive")
        total_r += rows[i]
    for i in range(r):
        cols[i] = col_margins[i]
        if cols[i] < 1:
            raise ValueError("margins must be positive")
        total_c += cols[i]
    if total_r != total_c:
        raise ValueError("row and column margins must have equal totals")
    s_out[0] = s
    r_out[0] = r


cdef void _tables_rec(int i, int j, int row_rem, int later_cols,
                      int s, int r, int* rows, int* col_rem,
                      int* later_rows, int* cells, list out):
    cdef int hi, lo, v, crj, nxt_later, jj, total
    if j == r:
        if i + 1 == s:
            out.append(tuple(tuple([cells[ii * r + jj] for jj in range(r)])
                             for ii in range(s)))
        else:
            total = 0
            for jj in range(1, r):
                total += col_rem[jj]
            _tables_rec(i + 1, 0, rows[i + 1], total, s, r, rows, col_rem,
                        later_rows, cells, out)
        return
    crj = col_rem[j]
    hi = row_rem if row_rem < crj else crj
    lo = row_rem - later_cols
    if crj - later_rows[i] > lo:
        lo = crj - later_rows[i]
    if lo < 0:
        lo = 0
    nxt_later = later_cols - (col_rem[j + 1] if j + 1 < r else 0)
    v = hi
    while v >= lo:
        cells[i * r + j] = v
        col_rem[j] = crj - v
        _tables_rec(i, j + 1, row_rem - v, nxt_later, s, r, rows, col_rem,
                    later_rows, cells, out)
        v -= 1
    col_rem[j] = crj


def enumerate_tables(row_margins, col_margins):
    """All matrices with the given margins; order matches the pure twin."""
    cdef int rows[MAX_PARTS]
    cdef int col_rem[MAX_PARTS]
    cdef int later_rows[MAX_PARTS]
    cdef int s = 0, r = 0, i, later0
    _load_margins(row_margins, col_margins, rows, col_rem, &s, &r)
    for i in range(s):
        later_rows[i] = 0
        for j in range(i + 1, s):
            later_rows[i] += rows[j]
    cdef int* cells = <int*>calloc(s * r, sizeof(int))
    if cells == NULL:
        raise MemoryError()
    out: list = []
    later0 = 0
    for i in range(1, r):
        later0 += col_rem[i]
    try:
        _tables_rec(0, 0, rows[0], later0, s, r, rows, col_rem, later_rows,
                    cells, out)
    finally:
        free(cells)
    return out


# ---------------------------------------------------------------------------
# reading words

cdef void _words_rec(int i, int j, int row_rem, int later_cols,
                     int acc, long long mask, int n, int s, int r,
                     int* rows, int* col_rem, int* later_rows,
                     long long* counts):
    cdef int hi, lo, v, crj, nxt_later, jj, total
    if j == r:
        if i + 1 == s:
            counts[mask] += 1
        else:
            total = 0
            for jj in range(1, r):
                total += col_rem[jj]
            _words_rec(i + 1, 0, rows[i + 1], total, acc, mask, n, s, r,
                       rows, col_rem, later_rows, counts)
        return
    crj = col_rem[j]
    hi = row_rem if row_rem < crj else crj
    lo = row_rem - later_cols
    if crj - later_rows[i] > lo:
        lo = crj - later_rows[i]
    if lo < 0:
        lo = 0
    nxt_later = later_cols - (col_rem[j + 1] if j + 1 < r else 0)
    v = hi
    while v >= lo:
        col_rem[j] = crj - v
        if v and acc + v < n:
            _words_rec(i, j + 1, row_rem - v, nxt_later, acc + v,
                       mask | (<long long>1 << (acc + v - 1)), n, s, r,
                       rows, col_rem, later_rows, counts)
        else:
            _words_rec(i, j + 1, row_rem - v, nxt_later, acc + v, mask,
                       n, s, r, rows, col_rem, later_rows, counts)
        v -= 1
    col_rem[j] = crj


def reading_word_counts(row_margins, col_margins, int n):
    """``{composition mask: multiplicity}`` over all margin matrices."""
    cdef int rows[MAX_PARTS]
    cdef int col_rem[MAX_PARTS]
    cdef int later_rows[MAX_PARTS]
    cdef int s = 0, r = 0, i, j, total, later0
    cdef long long size, m
    _load_margins(row_margins, col_margins, rows, col_rem, &s, &r)
    total = 0
    for i in range(s):
        total += rows[i]
    if total != n:
        raise ValueError("margins must be margins of compositions of n")
    if n > 21:
        raise ValueError("degree too large for the compiled kernel")
    for i in range(s):
        later_rows[i] = 0
        for j in range(i + 1, s):
            later_rows[i] += rows[j]
    size = <long long>1 << (n - 1)
    cdef long long* counts = <long long*>calloc(size, sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    later0 = 0
    for i in range(1, r):
        later0 += col_rem[i]
    result = {}
    try:
        _words_rec(0, 0, rows[0], later0, 0, 0, n, s, r, rows, col_rem,
                   later_rows, counts)
        for m in range(size):
            if counts[m]:
                result[m] = counts[m]
    finally:
        free(counts)
    return result


# ---------------------------------------------------------------------------
# counting identity

cdef int _sums_rec(int i, int j, int row_rem, int later_cols,
                   long long den, int n, int s, int r,
                   int* rows, int* col_rem, int* later_rows,
                   long long* fact, int128* total) except -1:
    cdef int hi, lo, v, crj, nxt_later, jj, t
    if j == r:
        if i + 1 == s:
            total[0] = total[0] + <int128>(fact[n] // den)
            if total[0] > <int128>_OVER:
                raise OverflowError("sum exceeds signed 64-bit range")
        else:
            t = 0
            for jj in range(1, r):
                t += col_rem[jj]
            _sums_rec(i + 1, 0, rows[i + 1], t, den, n, s, r, rows, col_rem,
                      later_rows, fact, total)
        return 0
    crj = col_rem[j]
    hi = row_rem if row_rem < crj else crj
    lo = row_rem - later_cols
    if crj - later_rows[i] > lo:
        lo = crj - later_rows[i]
    if lo < 0:
        lo = 0
    nxt_later = later_cols - (col_rem[j + 1] if j + 1 < r else 0)
    v = hi
    while v >= lo:
        col_rem[j] = crj - v
        _sums_rec(i, j + 1, row_rem - v, nxt_later, den * fact[v], n, s, r,
                  rows, col_rem, later_rows, fact, total)
        v -= 1
    col_rem[j] = crj
    return 0


def sum_reading_multinomials(row_margins, col_margins, int n):
    """Total of ``n!/prod(eta_i!)`` over all margin matrices."""
    cdef int rows[MAX_PARTS]
    cdef int col_rem[MAX_PARTS]
    cdef int later_rows[MAX_PARTS]
    cdef long long fact[21]
    cdef int s = 0, r = 0, i, j, total, later0
    cdef int128 out = 0
    _load_margins(row_margins, col_margins, rows, col_rem, &s, &r)
    total = 0
    for i in range(s):
        total += rows[i]
    if total != n:
        raise ValueError("margins must be margins of compositions of n")
    if n > 20:
        raise ValueError("degree too large for the compiled kernel")
    fact[0] = 1
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    for i in range(s):
        later_rows[i] = 0
        for j in range(i + 1, s):
            later_rows[i] += rows[j]
    later0 = 0
    for i in range(1, r):
        later0 += col_rem[i]
    _sums_rec(0, 0, rows[0], later0, 1, n, s, r, rows, col_rem, later_rows,
              fact, &out)
    return <long long>out
