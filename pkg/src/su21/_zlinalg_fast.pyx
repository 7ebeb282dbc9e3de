# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 normal-form kernels.

Same contracts as _zlinalg_py, restricted to 64-bit intermediate values:
every addition, subtraction and multiplication is overflow-checked, and any
overflow raises OverflowError so the caller can fall back to the
arbitrary-precision kernels.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    bint __builtin_add_overflow(long long, long long, long long*)
    bint __builtin_sub_overflow(long long, long long, long long*)
    bint __builtin_mul_overflow(long long, long long, long long*)


cdef inline long long _neg(long long v) except? -1:
    cdef long long out
    if __builtin_sub_overflow(0, v, &out):
        raise OverflowError("int64 overflow in negation")
    return out


cdef inline long long _abs(long long v) except? -1:
    if v < 0:
        return _neg(v)
    return v


cdef inline long long _nearest_quotient(long long value, long long pivot) except? -1:
    # pivot > 0; remainder in (-pivot/2, pivot/2], ties keep the floor quotient.
    cdef long long q = value / pivot
    cdef long long r = value - q * pivot
    if r < 0:
        q -= 1
        r += pivot
    if r > pivot - r:
        q += 1
    return q


cdef inline long long _floor_quotient(long long value, long long pivot) except? -1:
    cdef long long q = value / pivot
    cdef long long r = value - q * pivot
    if r < 0:
        q -= 1
    return q


cdef int _row_submul(long long* a, Py_ssize_t n, Py_ssize_t dst, Py_ssize_t src,
                     long long q, Py_ssize_t col_start) except -1:
    # row dst -= q * row src over columns col_start..n-1
    cdef Py_ssize_t c
    cdef long long prod, out
    for c in range(col_start, n):
        if __builtin_mul_overflow(q, a[src * n + c], &prod):
            raise OverflowError("int64 overflow in row operation")
        if __builtin_sub_overflow(a[dst * n + c], prod, &out):
            raise OverflowError("int64 overflow in row operation")
        a[dst * n + c] = out
    return 0


cdef long long* _load(mat, Py_ssize_t m, Py_ssize_t n) except NULL:
    cdef long long* a = <long long*> malloc(m * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c
    try:
        for r in range(m):
            row = mat[r]
            for c in range(n):
                a[r * n + c] = row[c]
    except BaseException:
        free(a)
        raise
    return a


def hnf_kernel(mat, Py_ssize_t m, Py_ssize_t n):
    """Row Hermite normal form over int64; raises OverflowError when any
    intermediate leaves the int64 range."""
    cdef long long* a = _load(mat, m, n)
    cdef Py_ssize_t pivot_row = 0, col, r, c, best
    cdef long long v, av, best_abs, pivot, q
    cdef bint cleared
    try:
        for col in range(n):
            if pivot_row == m:
                break
            while True:
                best = -1
                best_abs = 0
                for r in range(pivot_row, m):
                    v = a[r * n + col]
                    if v != 0:
                        av = _abs(v)
                        if best < 0 or av < best_abs:
                            best = r
                            best_abs = av
                if best < 0:
                    break
                if best != pivot_row:
                    for c in range(n):
                        v = a[pivot_row * n + c]
                        a[pivot_row * n + c] = a[best * n + c]
                        a[best * n + c] = v
                if a[pivot_row * n + col] < 0:
                    for c in range(n):
                        a[pivot_row * n + c] = _neg(a[pivot_row * n + c])
                pivot = a[pivot_row * n + col]
                cleared = True
                for r in range(pivot_row + 1, m):
                    v = a[r * n + col]
                    if v != 0:
                        q = _nearest_quotient(v, pivot)
                        if q != 0:
                            _row_submul(a, n, r, pivot_row, q, col)
                        if a[r * n + col] != 0:
                            cleared = False
                if cleared:
                    for r in range(pivot_row):
                        q = _floor_quotient(a[r * n + col], pivot)
                        if q != 0:
                            _row_submul(a, n, r, pivot_row, q, col)
                    pivot_row += 1
                    break
        return [[a[r * n + c] for c in range(n)] for r in range(m)]
    finally:
        free(a)


def snf_kernel(mat, Py_ssize_t m, Py_ssize_t n):
    """Smith normal form diagonal over int64; raises OverflowError when any
    intermediate leaves the int64 range."""
    cdef Py_ssize_t k = m if m < n else n
    if k == 0:
        return []
    cdef long long* a = _load(mat, m, n)
    cdef Py_ssize_t t, r, c, br, bc
    cdef long long v, av, best_abs, pivot, q, prod, out
    cdef bint clear, found
    try:
        for t in range(k):
            found = True
            while True:
                found = False
                best_abs = 0
                br = 0
                bc = 0
                for r in range(t, m):
                    for c in range(t, n):
                        v = a[r * n + c]
                        if v != 0:
                            av = _abs(v)
                            if (not found) or av < best_abs:
                                found = True
                                br = r
                                bc = c
                                best_abs = av
                if not found:
                    break
                if br != t:
                    for c in range(n):
                        v = a[t * n + c]
                        a[t * n + c] = a[br * n + c]
                        a[br * n + c] = v
                if bc != t:
                    for r in range(m):
                        v = a[r * n + t]
                        a[r * n + t] = a[r * n + bc]
                        a[r * n + bc] = v
                if a[t * n + t] < 0:
                    for c in range(n):
                        a[t * n + c] = _neg(a[t * n + c])
                pivot = a[t * n + t]
                clear = True
                for r in range(t + 1, m):
                    v = a[r * n + t]
                    if v != 0:
                        q = _nearest_quotient(v, pivot)
                        if q != 0:
                            _row_submul(a, n, r, t, q, t)
                        if a[r * n + t] != 0:
                            clear = False
                for c in range(t + 1, n):
                    v = a[t * n + c]
                    if v != 0:
                        q = _nearest_quotient(v, pivot)
                        if q != 0:
                            for r in range(t, m):
                                if __builtin_mul_overflow(q, a[r * n + t], &prod):
                                    raise OverflowError("int64 overflow in column operation")
                                if __builtin_sub_overflow(a[r * n + c], prod, &out):
                                    raise OverflowError("int64 overflow in column operation")
                                a[r * n + c] = out
                        if a[t * n + c] != 0:
                            clear = False
                if clear:
                    break
            if not found:
                break
        diagonal = sorted(
            (abs(a[t * n + t]) for t in range(k)), key=lambda d: (d == 0, d)
        )
    finally:
        free(a)
    return _divisibility_fixup(diagonal)


def _divisibility_fixup(diagonal):
    # Python-object arithmetic: lcm of int64 divisors can exceed int64, and
    # the fixup is a negligible fraction of the work.
    from math import gcd
    d = list(diagonal)
    for _ in range(len(d) + 1):
        changed = False
        for i in range(len(d) - 1):
            x, y = d[i], d[i + 1]
            g = gcd(x, y)
            l = (x * y) // g if g else 0
            if (g, l) != (x, y):
                d[i], d[i + 1] = g, l
                changed = True
        if not changed:
            return d
    raise AssertionError("divisibility fixup failed to stabilize")
