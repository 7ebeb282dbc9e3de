"""Integer matrices, Hermite and Smith normal forms, and cokernel invariants.

Two interchangeable kernel implementations sit below this module: compiled
int64 kernels (_zlinalg_fast, built from Cython, overflow-checked) and
arbitrary-precision pure-Python kernels (_zlinalg_py).  Selection order:

  * the impl argument ("fast" or "py") wins when given;
  * else the SU21_ZLINALG environment variable ("fast" or "py");
  * else the compiled kernels when importable, with transparent fallback to
    the pure kernels if an int64 overflow occurs mid-computation.

An explicit choice of "fast" propagates OverflowError instead of falling
back, so the overflow behavior itself is testable.
"""

from __future__ import annotations

import os

from . import _zlinalg_py

try:
    from . import _zlinalg_fast
except ImportError:
    _zlinalg_fast = None


def compiled_kernels_available() -> bool:
    return _zlinalg_fast is not None


class IntegerMatrix:
    """An immutable rectangular matrix of Python ints."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols: int = None):
        entries = tuple(tuple(v for v in row) for row in rows)
        if entries:
            widths = {len(row) for row in entries}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            inferred = widths.pop()
            if cols is not None and cols != inferred:
                raise ValueError("cols does not match row width")
            cols = inferred
        elif cols is None:
            raise ValueError("cols is required for a matrix with no rows")
        for row in entries:
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError("entries must be ints")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return "IntegerMatrix(<%d x %d>)" % (self.rows, self.cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def row_lists(self) -> list:
        return [list(row) for row in self.entries]

    def stack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if other.cols != self.cols:
            raise ValueError("column counts differ")
        return IntegerMatrix(self.entries + other.entries, self.cols)


def _select_impl(impl):
    explicit = impl is not None
    if impl is None:
        env = os.environ.get("SU21_ZLINALG", "")
        if env:
            impl = env
            explicit = True
    if impl is None:
        impl = "fast" if _zlinalg_fast is not None else "py"
    if impl not in ("fast", "py"):
        raise ValueError("impl must be 'fast' or 'py', got %r" % (impl,))
    if impl == "fast" and _zlinalg_fast is None:
        raise RuntimeError("compiled kernels are not available in this build")
    return impl, explicit


def _run_kernel(name, matrix, impl):
    choice, explicit = _select_impl(impl)
    if choice == "fast":
        kernel = getattr(_zlinalg_fast, name)
        try:
            return kernel(matrix.row_lists(), matrix.rows, matrix.cols)
        except OverflowError:
            if explicit:
                raise
    kernel = getattr(_zlinalg_py, name)
    return kernel(matrix.row_lists(), matrix.rows, matrix.cols)


def hermite_normal_form(matrix: IntegerMatrix, impl=None) -> IntegerMatrix:
    """Row Hermite normal form: zero rows last, positive pivots in strictly
    increasing columns, entries above each pivot reduced into [0, pivot)."""
    rows = _run_kernel("hnf_kernel", matrix, impl)
    return IntegerMatrix(rows, matrix.cols)


def smith_normal_form(matrix: IntegerMatrix, impl=None) -> tuple:
    """Smith normal form diagonal: min(rows, cols) nonnegative integers
    d_1 | d_2 | ... with zeros trailing."""
    return tuple(_run_kernel("snf_kernel", matrix, impl))


def cokernel_invariants(matrix: IntegerMatrix, impl=None) -> tuple:
    """Invariants of Z^cols / (row span): (torsion_invariants, free_rank).

    torsion_invariants lists the Smith diagonal entries that are neither 0
    nor 1, in divisibility order; free_rank counts the quotient's free
    summands (cols minus the number of nonzero diagonal entries).
    """
    diagonal = smith_normal_form(matrix, impl)
    torsion = tuple(d for d in diagonal if d > 1)
    free_rank = matrix.cols - sum(1 for d in diagonal if d != 0)
    return torsion, free_rank


def order_of_last_coordinate(matrix: IntegerMatrix, impl=None, modulus=None):
    """Order of the last standard basis vector in Z^cols / (row span), or
    None when that order is infinite.

    The order is read off the Hermite normal form: it is finite exactly when
    some row's first nonzero entry sits in the last column, and that pivot is
    the order.  (Any integer combination equal to a multiple of e_last cannot
    involve rows whose pivot lies in an earlier column.)

    With modulus=q the matrix is first reduced mod q and rows q*e_i are
    appended, which computes the order in the smaller quotient
    Z^cols / (row span + q*Z^cols).  That result only divides the true order
    and can be a strict divisor, so it is a lower bound in the divisibility
    sense, never a substitute for the exact computation.
    """
    if matrix.cols == 0:
        raise ValueError("matrix has no columns")
    if modulus is not None:
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        reduced = [[v % modulus for v in row] for row in matrix.entries]
        for i in range(matrix.cols):
            extra = [0] * matrix.cols
            extra[i] = modulus
            reduced.append(extra)
        matrix = IntegerMatrix(reduced, matrix.cols)
    h = hermite_normal_form(matrix, impl)
    last = matrix.cols - 1
    for row in h.entries:
        leading = next((c for c, v in enumerate(row) if v), None)
        if leading == last:
            return row[last]
    return None
