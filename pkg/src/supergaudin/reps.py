"""Exact gl(m|n)-modules: hooks, the defining representation, graded tensor
products, singular vectors, the Shapovalov form, and the quadratic Casimir.

Every module is carried as explicit generator matrices over exact rationals.
Tensor factors combine with the Koszul sign rule: an operator of parity p
acting on factor k picks up (-1)^(p * parity of the word prefix).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    InvalidHook,
    MissingParity,
)
from .linalg import (
    SpanBasis,
    SparseOperator,
    nullspace_of_columns,
    rref_rows,
    vec_dot,
)
from .superalg import ParitySequence, Weight, distinguished_parities

# ---------------------------------------------------------------------------
# hook partitions


def validate_hook(mu, ps: ParitySequence):
    """Check mu is a weakly decreasing partition fitting the (m, n) hook."""
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise InvalidHook(f"partition parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise InvalidHook(f"partition parts must be weakly decreasing: {mu}")
    m, n = ps.m, ps.n
    if len(mu) > m and mu[m] > n:
        raise InvalidHook(f"hook condition fails for (m,n)=({m},{n}): {mu}")
    return mu


def conjugate_partition(mu):
    mu = tuple(mu)
    if not mu:
        return ()
    return tuple(sum(1 for part in mu if part >= j) for j in range(1, mu[0] + 1))


def hook_to_weight(ps: ParitySequence, mu) -> Weight:
    """Highest weight of the polynomial module labelled by the hook mu.

    Walks the parity sequence through the diagram: an even entry reads off the
    boxes remaining in the next unread row, an odd entry the boxes remaining
    in the next unread column.  Every box is counted exactly once.
    """
    mu = validate_hook(mu, ps)
    muc = conjugate_partition(mu)
    row, col = 1, 1
    coords = []
    for a in range(1, ps.dim + 1):
        if ps.parity(a) == 0:
            length = mu[row - 1] if row <= len(mu) else 0
            coords.append(max(length - (col - 1), 0))
            row += 1
        else:
            length = muc[col - 1] if col <= len(muc) else 0
            coords.append(max(length - (row - 1), 0))
            col += 1
    if sum(coords) != sum(mu):
        raise InternalInconsistency(f"diagram walk lost boxes for mu={mu}, ps={ps}")
    return Weight(coords)


def pieri(mu, m: int, n: int):
    """All hooks obtained from mu by adding one box, in row order."""
    mu = tuple(int(x) for x in mu)
    out = []
    for i in range(len(mu) + 1):
        if i < len(mu):
            cand = mu[:i] + (mu[i] + 1,) + mu[i + 1 :]
        else:
            cand = mu + (1,)
        if any(cand[j] < cand[j + 1] for j in range(len(cand) - 1)):
            continue
        if len(cand) > m and cand[m] > n:
            continue
        out.append(cand)
    return out


def box_addable(lam: Weight, a: int, ps: ParitySequence) -> bool:
    """Whether lam + eps_{a+1} is again a hook weight (a = 0 is always legal)."""
    if a == 0:
        return True
    sa1 = -1 if ps.parity(a + 1) else 1
    for r in range(1, a + 1):
        sr = -1 if ps.parity(r) else 1
        tail = sum((-1 if ps.parity(b) else 1) for b in range(r + 1, a + 1))
        val = lam.component(r) - sa1 * sr * lam.component(a + 1) + sr * tail
        if val <= 0:
            return False
    return True


def box_step_index(ps: ParitySequence, mu_small, mu_big) -> int:
    """The a with weight(mu_big) = weight(mu_small) + eps_{a+1}."""
    diff = hook_to_weight(ps, mu_big) - hook_to_weight(ps, mu_small) if mu_small else hook_to_weight(ps, mu_big)
    hits = [i for i, c in enumerate(diff.coords) if c != 0]
    if len(hits) != 1 or diff.coords[hits[0]] != 1:
        raise InternalInconsistency(f"{mu_small} -> {mu_big} is not a one-box step")
    return hits[0]


def pieri_chains(ps: ParitySequence, N: int):
    """All sequences (mu_1, ..., mu_N) of nested hooks growing one box at a time."""
    chains = [((1,),)]
    for _ in range(N - 1):
        chains = [ch + (nxt,) for ch in chains for nxt in pieri(ch[-1], ps.m, ps.n)]
    return chains


# ---------------------------------------------------------------------------
# quadratic Casimir


def casimir_value(lam: Weight, ps: ParitySequence) -> Fraction:
    """Eigenvalue of sum_ab E_ab E_ba (-1)^|b| on the module of highest weight lam.

    Obtained by pushing the Casimir through the highest-weight vector; the
    cross terms contribute (-1)^|b| lam_a - (-1)^|a| lam_b over pairs a < b.
    """
    d = ps.dim
    sgn = [1 if ps.parity(a) == 0 else -1 for a in range(1, d + 1)]
    total = Fraction(0)
    for a in range(1, d + 1):
        la = lam.component(a)
        after = sum(sgn[b - 1] for b in range(a + 1, d + 1))
        before = sum(sgn[b - 1] for b in range(1, a))
        total += la * la * sgn[a - 1] + la * (after - before)
    return total


def casimir_diff(lam: Weight, r: int, a: int, ps: ParitySequence) -> Fraction:
    """-(C_{lam+eps_{a+1}} - C_{lam+eps_r}) / 2 in closed form."""
    if not 1 <= r <= a <= ps.dim - 1:
        raise IndexError(f"need 1 <= r <= a <= {ps.dim - 1}")
    sgn = lambda b: -1 if ps.parity(b) else 1
    return (
        sgn(r) * lam.component(r)
        - sgn(a + 1) * lam.component(a + 1)
        + sum(sgn(b) for b in range(r, a + 1))
    )


# ---------------------------------------------------------------------------
# modules


def defining_matrix(ps: ParitySequence, a: int, b: int) -> SparseOperator:
    """Matrix unit e_ab on the defining space, with its parity declared."""
    d = ps.dim
    if not (1 <= a <= d and 1 <= b <= d):
        raise IndexError(f"indices ({a},{b}) out of range 1..{d}")
    return SparseOperator(d, {(a - 1, b - 1): Fraction(1)}, parity=ps.op_parity(a, b))


def supertrace(ps: ParitySequence, X: SparseOperator) -> Fraction:
    return sum(
        (-v if ps.parity(r + 1) else v) for (r, c), v in X.entries.items() if r == c
    )


class RepModule:
    """A gl(m|n)-module given by explicit exact generator matrices.

    Simple raising/lowering operators and the Cartan matrices E_aa generate
    everything else through supercommutators (`gen`).  The distinguished
    highest-weight vector is stored in module coordinates together with the
    Shapovalov Gram matrix normalized so the highest-weight vector has norm 1.
    """

    def __init__(
        self,
        ps: ParitySequence,
        raising: dict,
        lowering: dict,
        cartan_ops: dict,
        hw_vector: dict,
        hw_weight: Weight,
        basis_parities,
        basis_weights,
        gram: SparseOperator,
        polynomial: bool = True,
        label: str = "",
    ):
        self.ps = ps
        self.raising = raising
        self.lowering = lowering
        self.cartan_ops = cartan_ops
        self.hw_vector = hw_vector
        self.hw_weight = hw_weight
        self.basis_parities = tuple(basis_parities)
        self.basis_weights = tuple(basis_weights)
        self.gram = gram
        self.polynomial = polynomial
        self.label = label
        self.dim = cartan_ops[1].dim
        self._gen_cache: dict = {}

    def __repr__(self):
        return f"RepModule({self.label or 'gl' + str(self.ps)}, dim={self.dim})"

    def gen(self, a: int, b: int) -> SparseOperator:
        """Matrix of E_ab, built recursively from the simple generators."""
        d = self.ps.dim
        if not (1 <= a <= d and 1 <= b <= d):
            raise IndexError(f"generator indices ({a},{b}) out of range 1..{d}")
        key = (a, b)
        if key in self._gen_cache:
            return self._gen_cache[key]
        if a == b:
            out = self.cartan_ops[a]
        elif b == a + 1:
            out = self.raising[a]
        elif a == b + 1:
            out = self.lowering[b]
        elif a < b:
            out = self._bracket(self.gen(a, b - 1), self.gen(b - 1, b))
        else:
            out = self._bracket(self.gen(a, b + 1), self.gen(b + 1, b))
        out.parity = self.ps.op_parity(a, b)
        self._gen_cache[key] = out
        return out

    def _bracket(self, X: SparseOperator, Y: SparseOperator) -> SparseOperator:
        if X.parity is None or Y.parity is None:
            raise MissingParity("supercommutator needs declared parities")
        sign = -1 if (X.parity and Y.parity) else 1
        return X @ Y - (Y @ X).scale(sign)

    def supercommutator_table_errors(self):
        """Exact check of the defining relations on the generator set.

        Returns a list of (labels, discrepancy operator); empty means all of
        [E_ab, E_cd] = d_bc E_ad - (-1)^(|ab||cd|) d_ad E_cb hold.
        """
        d = self.ps.dim
        labels = [(a, a) for a in range(1, d + 1)]
        labels += [(a, a + 1) for a in range(1, d)]
        labels += [(a + 1, a) for a in range(1, d)]
        bad = []
        for (a, b) in labels:
            for (c, e) in labels:
                X, Y = self.gen(a, b), self.gen(c, e)
                lhs = self._bracket(X, Y)
                sign = -1 if (X.parity and Y.parity) else 1
                rhs = SparseOperator.zero(self.dim)
                if b == c:
                    rhs = rhs + self.gen(a, e)
                if a == e:
                    rhs = rhs - self.gen(c, b).scale(sign)
                if not (lhs - rhs).is_zero():
                    bad.append(((a, b, c, e), lhs - rhs))
        return bad

    def casimir_matrix(self) -> SparseOperator:
        """sum_ab E_ab E_ba (-1)^|b| as an explicit matrix (oracle for casimir_value)."""
        d = self.ps.dim
        out = SparseOperator.zero(self.dim)
        for a in range(1, d + 1):
            for b in range(1, d + 1):
                term = self.gen(a, b) @ self.gen(b, a)
                out = out + (term.scale(-1) if self.ps.parity(b) else term)
        return out

    def weight_spaces(self) -> dict:
        spaces: dict = {}
        for i, w in enumerate(self.basis_weights):
            spaces.setdefault(w, []).append(i)
        return spaces

    def singular_weight_vectors(self, weight: Weight):
        idxs = self.weight_spaces().get(weight, [])
        ops = [self.raising[a] for a in sorted(self.raising)]
        return _joint_kernel(idxs, ops, self.dim)

    def pairing(self, u: dict, v: dict):
        """Shapovalov form of two vectors in module coordinates."""
        return vec_dot(u, self.gram.apply(v))

    def to_json(self) -> dict:
        """Portable exact description: dimension, parity string, and the
        generator matrices as (row, col, numerator, denominator) quadruples."""

        def quads(op: SparseOperator):
            out = []
            for (r, c), v in op.items_sorted():
                f = Fraction(v)
                out.append([r, c, f.numerator, f.denominator])
            return out

        gens = {}
        for a, op in sorted(self.raising.items()):
            gens[f"E_{a}_{a + 1}"] = quads(op)
        for a, op in sorted(self.lowering.items()):
            gens[f"E_{a + 1}_{a}"] = quads(op)
        for a, op in sorted(self.cartan_ops.items()):
            gens[f"E_{a}_{a}"] = quads(op)
        return {
            "dimension": self.dim,
            "parities": "".join(str(p) for p in self.basis_parities),
            "highest_weight": [str(c) for c in self.hw_weight.coords],
            "generators": gens,
        }


def defining_module(ps: ParitySequence) -> RepModule:
    d = ps.dim
    raising = {a: defining_matrix(ps, a, a + 1) for a in range(1, d)}
    lowering = {a: defining_matrix(ps, a + 1, a) for a in range(1, d)}
    cartan_ops = {a: defining_matrix(ps, a, a) for a in range(1, d + 1)}
    mod = RepModule(
        ps,
        raising,
        lowering,
        cartan_ops,
        hw_vector={0: Fraction(1)},
        hw_weight=Weight.eps(1, d),
        basis_parities=ps.parities,
        basis_weights=tuple(Weight.eps(a, d) for a in range(1, d + 1)),
        gram=SparseOperator.identity(d),
        label=f"C^({ps.m}|{ps.n})",
    )
    mod.hook = (1,)
    for a in range(1, d + 1):
        for b in range(1, d + 1):
            mod._gen_cache[(a, b)] = defining_matrix(ps, a, b)
    return mod


def gl11_module(r, s) -> RepModule:
    """The gl(1|1) module L(r, s): two-dimensional when r + s != 0.

    For r = -s != 0 the module is the one-dimensional non-polynomial L(r, -r);
    it is constructed but flagged non-polynomial.
    """
    ps = distinguished_parities(1, 1)
    r, s = Fraction(r), Fraction(s)
    if r + s == 0:
        polynomial = r == 0
        zero = SparseOperator.zero(1, parity=1)
        return RepModule(
            ps,
            raising={1: zero},
            lowering={1: zero.copy()},
            cartan_ops={
                1: SparseOperator(1, {(0, 0): r}, parity=0),
                2: SparseOperator(1, {(0, 0): s}, parity=0),
            },
            hw_vector={0: Fraction(1)},
            hw_weight=Weight((r, s)),
            basis_parities=(0,),
            basis_weights=(Weight((r, s)),),
            gram=SparseOperator.identity(1),
            polynomial=polynomial,
            label=f"L({r},{s})",
        )
    e11 = SparseOperator(2, {(0, 0): r, (1, 1): r - 1}, parity=0)
    e22 = SparseOperator(2, {(0, 0): s, (1, 1): s + 1}, parity=0)
    e21 = SparseOperator(2, {(1, 0): Fraction(1)}, parity=1)
    e12 = SparseOperator(2, {(0, 1): r + s}, parity=1)
    polynomial = r.denominator == 1 and s.denominator == 1 and r >= 1 and s >= 0
    return RepModule(
        ps,
        raising={1: e12},
        lowering={1: e21},
        cartan_ops={1: e11, 2: e22},
        hw_vector={0: Fraction(1)},
        hw_weight=Weight((r, s)),
        basis_parities=(0, 1),
        basis_weights=(Weight((r, s)), Weight((r - 1, s + 1))),
        gram=SparseOperator(2, {(0, 0): Fraction(1), (1, 1): r + s}),
        polynomial=polynomial,
        label=f"L({r},{s})",
    )


# ---------------------------------------------------------------------------
# graded tensor products


class ChainSpace:
    """Graded tensor product of modules; words index the product basis.

    The basis is ordered lexicographically in the factor indices with the
    first factor most significant.  `vector_power(ps, N)` gives the word basis
    of the N-th tensor power of the defining representation.
    """

    def __init__(self, factors):
        self.factors = list(factors)
        if not self.factors:
            raise DimensionMismatch("chain needs at least one factor")
        self.ps = self.factors[0].ps
        if any(f.ps != self.ps for f in self.factors):
            raise DimensionMismatch("all factors must share one parity sequence")
        self.N = len(self.factors)
        self.dims = [f.dim for f in self.factors]
        self.dim = 1
        for d in self.dims:
            self.dim *= d
        self.strides = [1] * self.N
        for k in range(self.N - 2, -1, -1):
            self.strides[k] = self.strides[k + 1] * self.dims[k + 1]
        self._site_cache: dict = {}
        self._coproduct_cache: dict = {}
        self._weight_spaces = None

    @staticmethod
    def vector_power(ps: ParitySequence, N: int) -> "ChainSpace":
        base = defining_module(ps)
        return ChainSpace([base] * N)

    def index(self, word) -> int:
        return sum(w * s for w, s in zip(word, self.strides))

    def word(self, i: int):
        out = []
        for s in self.strides:
            out.append(i // s)
            i %= s
        return tuple(out)

    def words(self):
        return itertools.product(*(range(d) for d in self.dims))

    def basis_parity(self, i: int) -> int:
        return (
            sum(f.basis_parities[w] for f, w in zip(self.factors, self.word(i))) % 2
        )

    def basis_weight(self, i: int) -> Weight:
        word = self.word(i)
        w = self.factors[0].basis_weights[word[0]]
        for f, l in zip(self.factors[1:], word[1:]):
            w = w + f.basis_weights[l]
        return w

    def weight_spaces(self) -> dict:
        if self._weight_spaces is None:
            spaces: dict = {}
            for i in range(self.dim):
                spaces.setdefault(self.basis_weight(i), []).append(i)
            self._weight_spaces = spaces
        return self._weight_spaces

    def site_operator(self, k: int, X: SparseOperator) -> SparseOperator:
        """1 x ... x X x ... x 1 acting at site k (1-based), with Koszul sign."""
        if not 1 <= k <= self.N:
            raise IndexError(f"site {k} out of range 1..{self.N}")
        if X.parity is None:
            raise MissingParity("site operator needs the parity of X")
        if X.dim != self.dims[k - 1]:
            raise DimensionMismatch(
                f"operator dim {X.dim} vs factor dim {self.dims[k - 1]}"
            )
        cols: dict = {}
        for (r, c), v in X.entries.items():
            cols.setdefault(c, []).append((r, v))
        out = SparseOperator(self.dim, parity=X.parity)
        stride = self.strides[k - 1]
        for i in range(self.dim):
            word = self.word(i)
            hits = cols.get(word[k - 1])
            if not hits:
                continue
            if X.parity:
                prefix = (
                    sum(
                        f.basis_parities[w]
                        for f, w in zip(self.factors[: k - 1], word[: k - 1])
                    )
                    % 2
                )
                sign = -1 if prefix else 1
            else:
                sign = 1
            for r, v in hits:
                j = i + (r - word[k - 1]) * stride
                out.add_to(j, i, v if sign == 1 else -v)
        return out

    def site_gen(self, k: int, a: int, b: int) -> SparseOperator:
        """E_ab acting at site k through that site's module."""
        key = (k, a, b)
        if key not in self._site_cache:
            self._site_cache[key] = self.site_operator(
                k, self.factors[k - 1].gen(a, b)
            )
        return self._site_cache[key]

    def coproduct_gen(self, a: int, b: int) -> SparseOperator:
        """E_ab acting on the whole chain (iterated coproduct)."""
        key = (a, b)
        if key not in self._coproduct_cache:
            total = SparseOperator.zero(self.dim, parity=self.ps.op_parity(a, b))
            for k in range(1, self.N + 1):
                total = total + self.site_gen(k, a, b)
            total.parity = self.ps.op_parity(a, b)
            self._coproduct_cache[key] = total
        return self._coproduct_cache[key]

    def generator_labels(self):
        """Labels (a, b) of the 3(m+n)-2 generators used in invariance checks."""
        d = self.ps.dim
        out = [(a, a) for a in range(1, d + 1)]
        out += [(a, a + 1) for a in range(1, d)]
        out += [(a + 1, a) for a in range(1, d)]
        return out

    def pure_tensor(self, parts) -> dict:
        """Coordinates of v_1 x ... x v_N from per-factor coordinate dicts."""
        if len(parts) != self.N:
            raise DimensionMismatch("need one vector per factor")
        out = {0: Fraction(1)}
        for k, part in enumerate(parts):
            nxt: dict = {}
            s = self.strides[k]
            for i, x in out.items():
                for l, y in part.items():
                    nxt[i + l * s] = x * y
            out = nxt
        return {i: v for i, v in out.items() if v}

    def hw_tensor(self) -> dict:
        return self.pure_tensor([f.hw_vector for f in self.factors])

    def hw_weight_sum(self) -> Weight:
        w = self.factors[0].hw_weight
        for f in self.factors[1:]:
            w = w + f.hw_weight
        return w

    def pairing(self, u: dict, v: dict):
        """Tensor Shapovalov form; the word basis of a vector power is orthonormal."""
        total = 0
        grams = [f.gram for f in self.factors]
        for i, x in u.items():
            wi = self.word(i)
            for j, y in v.items():
                wj = self.word(j)
                g = 1
                for k in range(self.N):
                    gk = grams[k][(wi[k], wj[k])]
                    if not gk:
                        g = 0
                        break
                    g = g * gk
                if g:
                    total = total + x * y * g
        return total


def site_operator(space: ChainSpace, k: int, X: SparseOperator) -> SparseOperator:
    return space.site_operator(k, X)


def weight_spaces(obj) -> dict:
    return obj.weight_spaces()


def _joint_kernel(idxs, ops, dim):
    """Canonical exact basis of {v in span(e_i, i in idxs) : op v = 0 for all ops}."""
    if not idxs:
        return []
    cols = []
    for i in idxs:
        col: dict = {}
        for a, op in enumerate(ops):
            for r, v in op.apply({i: Fraction(1)}).items():
                col[a * dim + r] = v
        cols.append(col)
    coeffs = nullspace_of_columns(cols)
    vectors = []
    for c in coeffs:
        vec = {i: x for i, x in zip(idxs, c) if x}
        vectors.append(vec)
    reduced, _ = rref_rows(vectors)
    return reduced


def singular_vectors(space: ChainSpace, weight: Weight):
    """Exact basis of the weight-`weight` vectors killed by every raising operator."""
    idxs = space.weight_spaces().get(weight, [])
    ops = [space.coproduct_gen(a, a + 1) for a in range(1, space.ps.dim)]
    return _joint_kernel(idxs, ops, space.dim)


def singular_dimension(space: ChainSpace) -> int:
    return sum(len(singular_vectors(space, w)) for w in space.weight_spaces())


def shapovalov_gram(space, vectors):
    """Gram matrix of the given vectors under the (tensor) Shapovalov form."""
    k = len(vectors)
    return [
        [space.pairing(vectors[i], vectors[j]) for j in range(k)] for i in range(k)
    ]


# ---------------------------------------------------------------------------
# realized modules


def realize_module(mu, ps: ParitySequence) -> RepModule:
    """Realize the irreducible polynomial module of hook mu inside the |mu|-th
    tensor power of the defining representation.

    The highest-weight vector is the first vector of the reduced-row-echelon
    basis of the singular subspace in that weight; the module is the cyclic
    span under all simple generators, with exact restricted matrices.
    """
    mu = validate_hook(mu, ps)
    k = sum(mu)
    target = hook_to_weight(ps, mu)
    space = ChainSpace.vector_power(ps, k)
    sing = singular_vectors(space, target)
    if not sing:
        raise InternalInconsistency(
            f"no singular vector of weight {target} in the {k}-fold power"
        )
    hw = sing[0]

    gens = []
    d = ps.dim
    for a in range(1, d):
        gens.append(space.coproduct_gen(a + 1, a))
    for a in range(1, d):
        gens.append(space.coproduct_gen(a, a + 1))
    for a in range(1, d + 1):
        gens.append(space.coproduct_gen(a, a))

    basis = SpanBasis()
    basis.add(hw)
    queue = [hw]
    while queue:
        v = queue.pop(0)
        for g in gens:
            img = g.apply(v)
            if img and basis.add(img):
                queue.append(img)

    vectors = basis.raw
    dim = len(vectors)

    def restrict(op: SparseOperator) -> SparseOperator:
        out = SparseOperator(dim, parity=op.parity)
        for j, b in enumerate(vectors):
            coords = basis.coordinates(op.apply(b))
            if coords is None:
                raise InternalInconsistency("module span not closed under action")
            for i, x in enumerate(coords):
                if x:
                    out.add_to(i, j, x)
        return out

    raising = {a: restrict(space.coproduct_gen(a, a + 1)) for a in range(1, d)}
    lowering = {a: restrict(space.coproduct_gen(a + 1, a)) for a in range(1, d)}
    cartan_ops = {a: restrict(space.coproduct_gen(a, a)) for a in range(1, d + 1)}

    parities = []
    weights = []
    for b in vectors:
        support = sorted(b)
        parities.append(space.basis_parity(support[0]))
        weights.append(space.basis_weight(support[0]))

    norm0 = space.pairing(vectors[0], vectors[0])
    gram = SparseOperator(dim)
    for i in range(dim):
        for j in range(i, dim):
            g = space.pairing(vectors[i], vectors[j]) / norm0
            if g:
                gram.add_to(i, j, g)
                if i != j:
                    gram.add_to(j, i, g)

    mod = RepModule(
        ps,
        raising,
        lowering,
        cartan_ops,
        hw_vector={0: Fraction(1)},
        hw_weight=target,
        basis_parities=parities,
        basis_weights=weights,
        gram=gram,
        label=f"V{mu}",
    )
    mod.hook = mu
    mod.ambient_space = space
    mod.ambient_basis = vectors
    return mod


def shapovalov_from_action(module: RepModule) -> SparseOperator:
    """Solve for the Shapovalov Gram matrix directly from the generator action.

    The form is pinned down by symmetry, <E_ab u, v> = <u, E_ba v>, and norm 1
    on the highest-weight vector.  Used for modules (duals) that are not
    carried inside an orthonormal word basis.
    """
    dim = module.dim
    d = module.ps.dim

    def unknown(i, j):
        return i * dim + j

    cols: dict = {}
    row_count = itertools.count()
    rows_for_eq: dict = {}

    def add_coeff(row_key, col_key, v):
        row = rows_for_eq.setdefault(row_key, next(row_count))
        cols.setdefault(col_key, {})[row] = cols.setdefault(col_key, {}).get(row, 0) + v

    pairs = [(module.gen(a, a + 1), module.gen(a + 1, a)) for a in range(1, d)]
    pairs += [(module.gen(a + 1, a), module.gen(a, a + 1)) for a in range(1, d)]
    pairs += [(module.gen(a, a), module.gen(a, a)) for a in range(1, d + 1)]
    for q, (A, B) in enumerate(pairs):
        # G A = B^T G, i.e. sum_j G[i,j] A[j,k] - sum_j B[j,i] G[j,k] = 0
        for (j, kcol), v in A.entries.items():
            for i in range(dim):
                add_coeff(("act", q, i, kcol), unknown(i, j), v)
        for (j, i), v in B.entries.items():
            for kcol in range(dim):
                add_coeff(("act", q, i, kcol), unknown(j, kcol), -v)
    for i in range(dim):
        for j in range(i + 1, dim):
            add_coeff(("sym", i, j), unknown(i, j), 1)
            add_coeff(("sym", i, j), unknown(j, i), -1)

    col_list = [cols.get(unknown(i, j), {}) for i in range(dim) for j in range(dim)]
    basis = nullspace_of_columns(col_list)
    hw = module.hw_vector
    for c in basis:
        g = SparseOperator(dim)
        for i in range(dim):
            for j in range(dim):
                v = c[unknown(i, j)]
                if v:
                    g.add_to(i, j, v)
        norm = vec_dot(hw, g.apply(hw))
        if norm:
            if isinstance(norm, int):
                norm = Fraction(norm)
            return g.scale(1 / norm)
    raise InternalInconsistency("no Shapovalov form found (module not irreducible?)")


def dual_module(M: RepModule) -> RepModule:
    """Hopf dual of M: (X f)(v) = -(-1)^(|X||f|) f(X v) on the dual basis."""
    ps = M.ps
    dim = M.dim
    d = ps.dim

    def dual_matrix(X: SparseOperator) -> SparseOperator:
        out = SparseOperator(dim, parity=X.parity)
        for (j, i), v in X.entries.items():
            sign = -1
            if X.parity and M.basis_parities[j]:
                sign = 1
            out.add_to(i, j, sign * v)
        return out

    raising = {a: dual_matrix(M.raising[a]) for a in range(1, d)}
    lowering = {a: dual_matrix(M.lowering[a]) for a in range(1, d)}
    cartan_ops = {a: dual_matrix(M.cartan_ops[a]) for a in range(1, d + 1)}
    weights = tuple(-w for w in M.basis_weights)
    shell = RepModule(
        ps,
        raising,
        lowering,
        cartan_ops,
        hw_vector={0: Fraction(1)},
        hw_weight=weights[0],
        basis_parities=M.basis_parities,
        basis_weights=weights,
        gram=SparseOperator.identity(dim),
        polynomial=False,
        label=f"dual({M.label})",
    )
    hw_vec, hw_weight = _module_highest_weight(shell)
    shell.hw_vector = hw_vec
    shell.hw_weight = hw_weight
    shell.gram = shapovalov_from_action(shell)
    if dim == 1 and all(c == 0 for c in hw_weight.coords):
        shell.polynomial = True
    return shell


def _module_highest_weight(module: RepModule):
    found = []
    for w, idxs in sorted(module.weight_spaces().items(), key=lambda kv: kv[1][0]):
        vecs = module.singular_weight_vectors(w)
        for v in vecs:
            found.append((v, w))
    if len(found) != 1:
        raise InternalInconsistency(
            f"expected a unique singular vector, found {len(found)}"
        )
    return found[0]
