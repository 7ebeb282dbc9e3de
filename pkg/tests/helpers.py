"""Shared test utilities: seeded random sampling and independent oracles."""

from fractions import Fraction
from itertools import combinations
from math import gcd

from su21.eisenstein import EisensteinInt
from su21.fpgroup import Word, evaluate_word
from su21.matgroup import generators_upsilon

GENERATORS = generators_upsilon()


def random_word(rng, max_len, n_gens=5, min_len=1):
    length = rng.randrange(min_len, max_len + 1)
    return Word(
        [(rng.randrange(n_gens), rng.choice((1, -1))) for _ in range(length)]
    )


def random_upsilon_element(rng, max_len, min_len=1):
    return evaluate_word(random_word(rng, max_len, min_len=min_len), GENERATORS)


def random_eisenstein(rng, bound=50):
    return EisensteinInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


# --- independent integer-lattice membership oracle -------------------------
#
# Maintains an echelon basis keyed by leading column, built with extended-gcd
# row combinations (each insertion is unimodular, so the spanned lattice never
# changes).  Membership testing reduces a vector by exact division against
# the basis.  This shares no code with the package's normal-form kernels.


def _extended_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


class LatticeOracle:
    def __init__(self, rows, cols):
        self.cols = cols
        self.basis = {}
        for row in rows:
            self._insert(list(row))

    def _insert(self, row):
        for col in range(self.cols):
            if row[col] == 0:
                continue
            pivot = self.basis.get(col)
            if pivot is None:
                if row[col] < 0:
                    row = [-x for x in row]
                self.basis[col] = row
                return
            g, u, v = _extended_gcd(pivot[col], row[col])
            merged = [u * x + v * y for x, y in zip(pivot, row)]
            reduced = [
                (pivot[col] // g) * y - (row[col] // g) * x
                for x, y in zip(pivot, row)
            ]
            self.basis[col] = merged
            row = reduced
        # fully reduced to zero: nothing to insert

    def contains(self, vector):
        vector = list(vector)
        for col in range(self.cols):
            if vector[col] == 0:
                continue
            pivot = self.basis.get(col)
            if pivot is None or vector[col] % pivot[col]:
                return False
            q = vector[col] // pivot[col]
            vector = [x - q * y for x, y in zip(vector, pivot)]
        return True


def lattices_equal(rows_a, rows_b, cols):
    a = LatticeOracle(rows_a, cols)
    b = LatticeOracle(rows_b, cols)
    return all(a.contains(r) for r in rows_b) and all(
        b.contains(r) for r in rows_a
    )


# --- determinant / minor-gcd oracle for Smith normal forms ------------------


def determinant(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    first = rows[0]
    rest = rows[1:]
    for j in range(n):
        if first[j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rest]
        term = first[j] * determinant(minor)
        total += term if j % 2 == 0 else -term
    return total


def minor_gcd(rows, cols, k):
    """gcd of all k x k minors (0 when every minor vanishes)."""
    m = len(rows)
    value = 0
    for row_idx in combinations(range(m), k):
        for col_idx in combinations(range(cols), k):
            sub = [[rows[r][c] for c in col_idx] for r in row_idx]
            value = gcd(value, determinant(sub))
    return value


def smith_via_minor_gcds(rows, cols):
    """Invariant factors from d_1 * ... * d_k = gcd of k x k minors."""
    k = min(len(rows), cols)
    diagonal = []
    previous = 1
    for t in range(1, k + 1):
        g = minor_gcd(rows, cols, t)
        if g == 0 or previous == 0:
            diagonal.append(0)
            previous = 0
        else:
            diagonal.append(g // previous)
            previous = g
    return diagonal


def random_matrix_rows(rng, max_dim=5, bound=40):
    m = rng.randrange(1, max_dim + 1)
    n = rng.randrange(1, max_dim + 1)
    density = rng.choice((0.3, 0.7, 1.0))
    rows = [
        [
            rng.randint(-bound, bound) if rng.random() < density else 0
            for _ in range(n)
        ]
        for _ in range(m)
    ]
    return rows, n


def frac_norm(x: Fraction, y: Fraction) -> Fraction:
    return x * x - x * y + y * y
