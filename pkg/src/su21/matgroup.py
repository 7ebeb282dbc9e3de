"""The group SU(2,1) over the Eisenstein integers and its congruence subgroups.

Matrices are 3x3 over Z[zeta] and unitary with respect to the antidiagonal
Hermitian form J.  The inverse of a unitary matrix is J * conj(g)^t * J, so
no general matrix inversion is ever needed.
"""

from __future__ import annotations

from .eisenstein import ONE, SQRT_MINUS3, ZERO, ZETA, EisensteinInt


class GroupMatrix:
    """Immutable 3x3 matrix over Z[zeta]."""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("expected a 3x3 matrix")
        for row in rows:
            for entry in row:
                if not isinstance(entry, EisensteinInt):
                    raise ValueError("entries must be EisensteinInt values")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("GroupMatrix is immutable")

    def __getitem__(self, index):
        return self.entries[index]

    def __repr__(self):
        return "GroupMatrix(%r)" % (
            [[e.to_pair() for e in row] for row in self.entries],
        )

    def __str__(self):
        cells = [[str(e) for e in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells
        )

    def __eq__(self, other):
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.entries)
            object.__setattr__(self, "_hash", h)
        return h

    def __mul__(self, other):
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        left = self.entries
        right = other.entries
        product = []
        for i in range(3):
            li = left[i]
            product.append(
                tuple(
                    li[0] * right[0][j] + li[1] * right[1][j] + li[2] * right[2][j]
                    for j in range(3)
                )
            )
        return GroupMatrix(product)

    def transpose(self) -> "GroupMatrix":
        e = self.entries
        return GroupMatrix(tuple(zip(*e)))

    def conj_transpose(self) -> "GroupMatrix":
        e = self.entries
        return GroupMatrix(
            tuple(tuple(e[j][i].conj() for j in range(3)) for i in range(3))
        )

    def inverse(self) -> "GroupMatrix":
        """Inverse of a J-unitary matrix: J * conj(g)^t * J."""
        return J * self.conj_transpose() * J

    def det(self) -> EisensteinInt:
        e = self.entries
        return (
            e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
        )

    def is_unitary(self) -> bool:
        """Whether conj(g)^t * J * g = J."""
        return self.conj_transpose() * J * self == J

    def scalar_mul(self, scalar: EisensteinInt) -> "GroupMatrix":
        return GroupMatrix(
            tuple(tuple(scalar * entry for entry in row) for row in self.entries)
        )

    def to_json_dict(self) -> dict:
        return {"entries": [[e.to_pair() for e in row] for row in self.entries]}

    @classmethod
    def from_json_dict(cls, data) -> "GroupMatrix":
        if not isinstance(data, dict) or "entries" not in data:
            raise ValueError('expected an object with an "entries" key')
        rows = data["entries"]
        if not isinstance(rows, list) or len(rows) != 3:
            raise ValueError("entries must be a 3x3 array of integer pairs")
        out = []
        for row in rows:
            if not isinstance(row, list) or len(row) != 3:
                raise ValueError("entries must be a 3x3 array of integer pairs")
            out.append([EisensteinInt.from_pair(cell) for cell in row])
        return cls(out)


J = GroupMatrix(
    [
        [ZERO, ZERO, ONE],
        [ZERO, ONE, ZERO],
        [ONE, ZERO, ZERO],
    ]
)

IDENTITY = GroupMatrix(
    [
        [ONE, ZERO, ZERO],
        [ZERO, ONE, ZERO],
        [ZERO, ZERO, ONE],
    ]
)

ZETA_IDENTITY = IDENTITY.scalar_mul(ZETA)


def make_n(z: EisensteinInt, x: int) -> GroupMatrix:
    """The upper-triangular unipotent n(z, x); requires x = norm(z) mod 2.

    The corner entry (-3*norm(z) + x*sqrt(-3)) / 2 is a genuine Eisenstein
    integer exactly under the parity condition, so it is produced by exact
    division rather than through any rational type.
    """
    if not isinstance(z, EisensteinInt):
        z = EisensteinInt(z, 0)
    if (x - z.norm()) % 2 != 0:
        raise ValueError("parity violation: x must be congruent to norm(z) mod 2")
    corner = (EisensteinInt(-3 * z.norm(), 0) + EisensteinInt(x, 0) * SQRT_MINUS3).div_exact(
        EisensteinInt(2, 0)
    )
    return GroupMatrix(
        [
            [ONE, SQRT_MINUS3 * z, corner],
            [ZERO, ONE, SQRT_MINUS3 * z.conj()],
            [ZERO, ZERO, ONE],
        ]
    )


def make_n_transpose(z: EisensteinInt, x: int) -> GroupMatrix:
    """The transpose of make_n(z, x)."""
    return make_n(z, x).transpose()


def generators_upsilon() -> tuple:
    """The five generators n1 = n(1,1), n2 = n(zeta,1), n3 = n(0,2), n4 = n1^t, n5 = n3^t."""
    n1 = make_n(ONE, 1)
    n2 = make_n(ZETA, 1)
    n3 = make_n(ZERO, 2)
    return (n1, n2, n3, n1.transpose(), n3.transpose())


def in_gamma_beta(g: GroupMatrix, beta) -> bool:
    """Membership in the principal congruence subgroup: g = I mod beta, unitary, det 1."""
    if isinstance(beta, int) and not isinstance(beta, bool):
        beta = EisensteinInt(beta, 0)
    for i in range(3):
        for j in range(3):
            entry = g[i][j]
            if i == j:
                entry = entry - ONE
            if not entry.is_divisible_by(beta):
                return False
    return g.det() == ONE and g.is_unitary()


def in_upsilon(g: GroupMatrix) -> bool:
    """Membership in the index-3 complement of the centre inside level sqrt(-3):
    unitary, det 1, g = I mod sqrt(-3), and top-left entry = 1 mod 3."""
    if (g[0][0] - ONE).residue_mod_3() != (0, 0):
        return False
    return in_gamma_beta(g, SQRT_MINUS3)


def F_map(g: GroupMatrix) -> tuple:
    """The homomorphism to F_3^4 sending g to the four off-corner entries
    (g12, g13, g21, g31) divided by sqrt(-3) and reduced mod sqrt(-3).

    Its kernel is the principal congruence subgroup of level 3.
    """
    if not in_upsilon(g):
        raise ValueError("F_map is defined only on the unipotent-generated congruence group")
    coords = (g[0][1], g[0][2], g[1][0], g[2][0])
    return tuple(c.div_exact(SQRT_MINUS3).residue_mod_sqrt_minus3() for c in coords)


def in_index3(g: GroupMatrix, v) -> bool:
    """Whether v . F_map(g) = 0 in F_3."""
    f = F_map(g)
    return sum(int(vi) * fi for vi, fi in zip(v, f)) % 3 == 0


def canonical_index3_vector(v) -> tuple:
    """Canonical representative of v up to sign mod 3: the lexicographically
    smaller of v mod 3 and -v mod 3.  The vector must be nonzero mod 3."""
    v = tuple(int(x) % 3 for x in v)
    if len(v) != 4:
        raise ValueError("expected a vector of length 4")
    if v == (0, 0, 0, 0):
        raise ValueError("the zero vector does not define an index-3 subgroup")
    neg = tuple((-x) % 3 for x in v)
    return min(v, neg)


def all_index3_vectors() -> list:
    """All 40 canonical nonzero vectors in F_3^4 up to sign, sorted."""
    seen = set()
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a, b, c, d) != (0, 0, 0, 0):
                        seen.add(canonical_index3_vector((a, b, c, d)))
    return sorted(seen)


class SubgroupSpec:
    """A named congruence subgroup: the full unipotent-generated group
    ('upsilon'), a principal congruence group ('gamma_sqrt3', 'gamma3'),
    or an index-3 group ('index3' with a canonical F_3^4 vector)."""

    __slots__ = ("kind", "vector")

    KINDS = ("upsilon", "gamma_sqrt3", "gamma3", "index3")

    def __init__(self, kind: str, vector=None):
        if kind not in self.KINDS:
            raise ValueError("unknown subgroup kind %r" % (kind,))
        if kind == "index3":
            vector = canonical_index3_vector(vector)
        elif vector is not None:
            raise ValueError("only index3 specs carry a vector")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "vector", vector)

    def __setattr__(self, name, value):
        raise AttributeError("SubgroupSpec is immutable")

    def __eq__(self, other):
        if not isinstance(other, SubgroupSpec):
            return NotImplemented
        return self.kind == other.kind and self.vector == other.vector

    def __hash__(self):
        return hash((self.kind, self.vector))

    def __repr__(self):
        if self.kind == "index3":
            return "SubgroupSpec('index3', %r)" % (self.vector,)
        return "SubgroupSpec(%r)" % (self.kind,)

    def __str__(self):
        return self.name()

    def name(self) -> str:
        if self.kind == "index3":
            return "index3:%d,%d,%d,%d" % self.vector
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "SubgroupSpec":
        """Parse the CLI grammar: upsilon | gamma_sqrt3 | gamma3 | index3:a,b,c,d."""
        text = text.strip()
        if text in ("upsilon", "gamma_sqrt3", "gamma3"):
            return cls(text)
        if text.startswith("index3:"):
            parts = text[len("index3:"):].split(",")
            if len(parts) != 4:
                raise ValueError("index3 takes four comma-separated digits")
            try:
                vector = tuple(int(p) for p in parts)
            except ValueError:
                raise ValueError("index3 components must be integers") from None
            return cls("index3", vector)
        raise ValueError(
            "unknown group %r (expected upsilon, gamma_sqrt3, gamma3, or index3:a,b,c,d)" % (text,)
        )

    def membership(self, g: GroupMatrix) -> bool:
        if self.kind == "upsilon":
            return in_upsilon(g)
        if self.kind == "gamma_sqrt3":
            return in_gamma_beta(g, SQRT_MINUS3)
        if self.kind == "gamma3":
            return in_gamma_beta(g, EisensteinInt(3, 0))
        return in_upsilon(g) and in_index3(g, self.vector)

    def index_in_upsilon(self) -> int:
        """Index inside the ambient unipotent-generated group.  The level
        sqrt(-3) group is not a subgroup of it (it is handled by the
        centre-quotient reduction in the weight-denominator pipeline)."""
        if self.kind == "upsilon":
            return 1
        if self.kind == "gamma3":
            return 81
        if self.kind == "index3":
            return 3
        raise ValueError("gamma_sqrt3 is not a subgroup of the ambient group")
