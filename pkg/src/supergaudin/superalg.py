"""Structure data of the general linear Lie superalgebra gl(m|n).

A parity sequence fixes which basis vectors of the defining space are even
and which odd; everything downstream (simple roots, Cartan matrices, the
supertrace form on weights) is derived from it.  The first basis vector is
required to be even, which costs no generality because flipping every parity
gives an isomorphic algebra with the same Dynkin diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InvalidParity


@dataclass(frozen=True)
class ParitySequence:
    """Parities of the basis vectors e_1..e_{m+n}; 0 = even, 1 = odd."""

    parities: tuple

    def __post_init__(self):
        p = tuple(int(x) for x in self.parities)
        if len(p) < 1:
            raise InvalidParity("empty parity sequence")
        if any(x not in (0, 1) for x in p):
            raise InvalidParity(f"parities must be 0/1 bits, got {p}")
        if p[0] != 0:
            raise InvalidParity("first basis vector must be even")
        object.__setattr__(self, "parities", p)

    @property
    def m(self) -> int:
        return self.parities.count(0)

    @property
    def n(self) -> int:
        return self.parities.count(1)

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def rank(self) -> int:
        """Number of simple roots."""
        return self.dim - 1

    def parity(self, a: int) -> int:
        """Parity |a| of basis vector e_a, 1-based."""
        return self.parities[a - 1]

    def op_parity(self, a: int, b: int) -> int:
        """Parity of the generator E_ab."""
        return (self.parity(a) + self.parity(b)) % 2

    def simple_root_parity(self, a: int) -> int:
        """Parity of the simple root vectors E_a, F_a (1 <= a < m+n)."""
        return self.op_parity(a, a + 1)

    def flipped(self) -> "ParitySequence":
        return ParitySequence(tuple(1 - x for x in self.parities))

    def as_string(self) -> str:
        return "".join(str(x) for x in self.parities)

    @staticmethod
    def from_string(s: str) -> "ParitySequence":
        if not s or any(ch not in "01" for ch in s):
            raise InvalidParity(f"parity string must be nonempty over '0'/'1': {s!r}")
        return ParitySequence(tuple(int(ch) for ch in s))

    def __str__(self):
        return self.as_string()


def distinguished_parities(m: int, n: int) -> ParitySequence:
    """The distinguished choice: m even vectors followed by n odd ones."""
    if m < 1:
        raise InvalidParity("need m >= 1 so that e_1 is even")
    if n < 0:
        raise InvalidParity("n must be nonnegative")
    return ParitySequence((0,) * m + (1,) * n)


class Weight:
    """Weight written in the eps_a coordinates, exact rational components."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def component(self, a: int) -> Fraction:
        """Coefficient of eps_a, 1-based."""
        return self.coords[a - 1]

    def __add__(self, other):
        if len(self) != len(other):
            raise DimensionMismatch("weight lengths differ")
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if len(self) != len(other):
            raise DimensionMismatch("weight lengths differ")
        return Weight(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-x for x in self.coords))

    def scale(self, s):
        return Weight(tuple(Fraction(s) * x for x in self.coords))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    @staticmethod
    def zero(dim: int) -> "Weight":
        return Weight((0,) * dim)

    @staticmethod
    def eps(a: int, dim: int) -> "Weight":
        """The basis weight eps_a, 1-based."""
        return Weight(tuple(1 if i == a - 1 else 0 for i in range(dim)))


def simple_root(ps: ParitySequence, a: int) -> Weight:
    """alpha_a = eps_a - eps_{a+1}."""
    if not 1 <= a <= ps.rank:
        raise IndexError(f"simple root index {a} out of range 1..{ps.rank}")
    return Weight.eps(a, ps.dim) - Weight.eps(a + 1, ps.dim)


def weight_inner(ps: ParitySequence, u: Weight, v: Weight) -> Fraction:
    """Supertrace form on weights: (eps_a, eps_b) = (-1)^|a| delta_ab."""
    if len(u) != ps.dim or len(v) != ps.dim:
        raise DimensionMismatch(
            f"weight length vs parity sequence: {len(u)}, {len(v)} vs {ps.dim}"
        )
    total = Fraction(0)
    for a in range(1, ps.dim + 1):
        term = u.component(a) * v.component(a)
        total += -term if ps.parity(a) else term
    return total


def coroot_pairing(ps: ParitySequence, a: int, mu: Weight) -> Fraction:
    """mu(H_a) for the simple coroot H_a = E_aa - (-1)^{|a|+|a+1|} E_{a+1,a+1}."""
    sign = -1 if ps.simple_root_parity(a) == 0 else 1
    return mu.component(a) + sign * mu.component(a + 1)


@dataclass(frozen=True)
class RootData:
    """Cartan matrix, its symmetrization, and the simple-root parities."""

    cartan: tuple
    symmetrized: tuple
    simple_root_parities: tuple

    @property
    def rank(self):
        return len(self.simple_root_parities)


def cartan_matrix(ps: ParitySequence) -> RootData:
    """Cartan data for the given parity sequence.

    Entry (b, a) of the Cartan matrix is alpha_b(H_a); the symmetrized matrix
    carries the inner products (alpha_a, alpha_b).  Both are tridiagonal, so
    they are assembled directly in integer arithmetic; the general
    weight_inner/coroot_pairing route is kept as the oracle in the tests.
    """
    r = ps.rank
    sgn = [1 if p == 0 else -1 for p in ps.parities]
    cartan = [[0] * r for _ in range(r)]
    sym = [[0] * r for _ in range(r)]
    for a in range(r):
        sym[a][a] = sgn[a] + sgn[a + 1]
        # alpha_b(H_a) = (alpha_b)_a + s_a (alpha_b)_{a+1},
        # H_a = E_aa - (-1)^{|a|+|a+1|} E_{a+1,a+1}, s_a = -sgn_a sgn_{a+1}
        s = -sgn[a] * sgn[a + 1]
        cartan[a][a] = 1 - s
        if a + 1 < r:
            sym[a][a + 1] = sym[a + 1][a] = -sgn[a + 1]
            cartan[a][a + 1] = -1
            cartan[a + 1][a] = s
    return RootData(
        cartan=tuple(tuple(row) for row in cartan),
        symmetrized=tuple(tuple(row) for row in sym),
        simple_root_parities=tuple(
            (ps.parities[a] + ps.parities[a + 1]) % 2 for a in range(r)
        ),
    )
