"""Exact arithmetic in the ring Z[zeta] of Eisenstein integers.

Elements are written a + b*zeta with integer a, b, where zeta = e^(2*pi*i/3)
satisfies zeta^2 = -1 - zeta.  The square root of -3 is fixed as 1 + 2*zeta,
the root with positive imaginary part.
"""

from __future__ import annotations

import math

_SQRT3 = math.sqrt(3.0)


class NotDivisibleError(ValueError):
    """Raised by div_exact when the divisor does not divide the dividend."""


class EisensteinInt:
    """The Eisenstein integer a + b*zeta, immutable and hashable."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("EisensteinInt is immutable")

    def __repr__(self):
        return "EisensteinInt(%d, %d)" % (self.a, self.b)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%d*zeta" % self.b
        return "%d%+d*zeta" % (self.a, self.b)

    def __eq__(self, other):
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a + b*zeta)(c + d*zeta) with zeta^2 = -1 - zeta.
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return EisensteinInt(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers leave the ring")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "EisensteinInt":
        """Complex conjugate: conj(zeta) = zeta^2 = -1 - zeta."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """z * conj(z) = a^2 - a*b + b^2, a nonnegative rational integer."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def trace(self) -> int:
        """z + conj(z) = 2a - b."""
        return 2 * self.a - self.b

    def is_divisible_by(self, w: "EisensteinInt") -> bool:
        if w.is_zero():
            return self.is_zero()
        n = w.norm()
        zc = self * w.conj()
        return zc.a % n == 0 and zc.b % n == 0

    def div_exact(self, w: "EisensteinInt") -> "EisensteinInt":
        """Exact quotient self / w; raises NotDivisibleError if w does not divide."""
        w = _coerce(w)
        if w is None or w.is_zero():
            raise NotDivisibleError("division by zero")
        n = w.norm()
        zc = self * w.conj()
        qa, ra = divmod(zc.a, n)
        qb, rb = divmod(zc.b, n)
        if ra or rb:
            raise NotDivisibleError("%s is not divisible by %s" % (self, w))
        return EisensteinInt(qa, qb)

    def residue_mod_sqrt_minus3(self) -> int:
        """Image in F_3 under reduction mod sqrt(-3), where zeta = 1."""
        return (self.a + self.b) % 3

    def residue_mod_3(self) -> tuple:
        """Componentwise image in F_3 x F_3 under reduction mod 3."""
        return (self.a % 3, self.b % 3)

    def embed(self) -> complex:
        """Numerical value a + b*(-1/2 + i*sqrt(3)/2)."""
        return complex(self.a - 0.5 * self.b, 0.5 * _SQRT3 * self.b)

    def to_pair(self) -> list:
        """JSON encoding: the two-element integer array [a, b]."""
        return [self.a, self.b]

    @classmethod
    def from_pair(cls, pair) -> "EisensteinInt":
        a, b = pair
        if not isinstance(a, int) or not isinstance(b, int) or isinstance(a, bool) or isinstance(b, bool):
            raise ValueError("expected a pair of integers, got %r" % (pair,))
        return cls(a, b)


def _coerce(value):
    if isinstance(value, EisensteinInt):
        return value
    if isinstance(value, int):
        return EisensteinInt(value, 0)
    return None


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
ZETA = EisensteinInt(0, 1)
SQRT_MINUS3 = EisensteinInt(1, 2)
