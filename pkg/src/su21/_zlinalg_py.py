"""Pure-Python integer normal-form kernels (arbitrary precision).

Both kernels take a list of row lists of Python ints and the explicit shape,
and never mutate their input.  They are the reference implementations; the
compiled kernels in _zlinalg_fast must agree with them exactly wherever the
latter do not overflow.
"""

from math import gcd


def _nearest_quotient(value, pivot):
    # pivot > 0; quotient q with value - q*pivot in (-pivot/2, pivot/2],
    # ties (remainder exactly pivot/2) keep the floor quotient.
    q, r = divmod(value, pivot)
    if 2 * r > pivot:
        q += 1
    return q


def hnf_kernel(mat, m, n):
    """Row Hermite normal form: zero rows last, positive pivots with strictly
    increasing pivot columns, entries above each pivot reduced into
    [0, pivot)."""
    a = [list(row) for row in mat]
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        while True:
            best = -1
            best_abs = 0
            for r in range(pivot_row, m):
                v = a[r][col]
                if v:
                    av = -v if v < 0 else v
                    if best < 0 or av < best_abs:
                        best = r
                        best_abs = av
            if best < 0:
                break
            if best != pivot_row:
                a[pivot_row], a[best] = a[best], a[pivot_row]
            if a[pivot_row][col] < 0:
                a[pivot_row] = [-x for x in a[pivot_row]]
            pivot = a[pivot_row][col]
            prow = a[pivot_row]
            cleared = True
            for r in range(pivot_row + 1, m):
                v = a[r][col]
                if v:
                    q = _nearest_quotient(v, pivot)
                    if q:
                        arow = a[r]
                        for c in range(col, n):
                            arow[c] -= q * prow[c]
                    if a[r][col]:
                        cleared = False
            if cleared:
                for r in range(pivot_row):
                    q = a[r][col] // pivot
                    if q:
                        arow = a[r]
                        for c in range(col, n):
                            arow[c] -= q * prow[c]
                pivot_row += 1
                break
    return a


def snf_kernel(mat, m, n):
    """Smith normal form diagonal: min(m, n) nonnegative values d_1 | d_2 | ...
    with zeros trailing."""
    k = min(m, n)
    if k == 0:
        return []
    a = [list(row) for row in mat]
    for t in range(k):
        while True:
            best = None
            best_abs = 0
            for r in range(t, m):
                row = a[r]
                for c in range(t, n):
                    v = row[c]
                    if v:
                        av = -v if v < 0 else v
                        if best is None or av < best_abs:
                            best = (r, c)
                            best_abs = av
            if best is None:
                break
            r0, c0 = best
            if r0 != t:
                a[t], a[r0] = a[r0], a[t]
            if c0 != t:
                for row in a:
                    row[t], row[c0] = row[c0], row[t]
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            pivot = a[t][t]
            trow = a[t]
            clear = True
            for r in range(t + 1, m):
                v = a[r][t]
                if v:
                    q = _nearest_quotient(v, pivot)
                    if q:
                        arow = a[r]
                        for c in range(t, n):
                            arow[c] -= q * trow[c]
                    if a[r][t]:
                        clear = False
            for c in range(t + 1, n):
                v = trow[c]
                if v:
                    q = _nearest_quotient(v, pivot)
                    if q:
                        for r in range(t, m):
                            a[r][c] -= q * a[r][t]
                    if trow[c]:
                        clear = False
            if clear:
                break
        if best is None:
            break
    diagonal = sorted(
        (abs(a[t][t]) for t in range(k)), key=lambda d: (d == 0, d)
    )
    return _divisibility_fixup(diagonal)


def _divisibility_fixup(diagonal):
    # Adjacent gcd/lcm sweeps; after at most len(diagonal) sweeps the chain
    # d_1 | d_2 | ... holds (each sweep freezes the final lcm in place).
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
