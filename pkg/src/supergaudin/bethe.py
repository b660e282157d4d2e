"""Bethe ansatz layer: equations, the weight function, eigenvalue formulas,
root canonicalization, and every closed-form special case.

Conventions.  Roots are indexed with the canonical nondecreasing colour
layout: all colour-1 roots first, then colour 2, and so on.  The weight
function is the signed sum over ordered partitions of root indices into one
chain per site; a chain (n_1, ..., n_j) hanging off site s contributes the
operator word F_{c(n_1)} ... F_{c(n_j)} on that site's highest-weight vector
and the rational factor 1/((t_{n_1}-t_{n_2}) ... (t_{n_j}-z_s)).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NoSuchComponent,
    PoleCollision,
    TooLarge,
)
from .gaudin import ChainSpec
from .reps import box_addable, hook_to_weight, validate_hook
from .scalars import SqrtExt, as_fraction, exact_sqrt, is_exact, to_complex
from .superalg import ParitySequence, Weight, simple_root, weight_inner

PARTITION_CAP_ROOTS = 8
PARTITION_CAP_SITES = 6
POLE_TOL = 1e-12


def canonical_colours(l) -> tuple:
    """The nondecreasing colour word (1,...,1,2,...,2,...) determined by l."""
    out = []
    for p, lp in enumerate(l, start=1):
        out.extend([p] * lp)
    return tuple(out)


class BetheRoots:
    """Bethe root values aligned with the canonical colour layout."""

    def __init__(self, values, colours):
        self.values = list(values)
        self.colours = tuple(colours)
        if len(self.values) != len(self.colours):
            raise DimensionMismatch("one colour per root required")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def by_colour(self) -> dict:
        out: dict = {}
        for v, c in zip(self.values, self.colours):
            out.setdefault(c, []).append(v)
        return out

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def to_complex(self):
        return [to_complex(v) for v in self.values]

    def __repr__(self):
        return f"BetheRoots({list(zip(self.colours, self.values))})"


class BetheProblem:
    """A chain plus root counts per colour; carries all BAE coefficient data.

    `from_data` builds the equations alone (parities, site weights, site
    points) without realizing any modules; the weight function and anything
    else touching vectors needs the full chain.
    """

    def __init__(self, chain: ChainSpec | None, l, *, ps=None, site_weights=None, z=None):
        self.chain = chain
        if chain is not None:
            self.ps = chain.ps
            self.site_weights = chain.site_weights()
            self.z = chain.z
        else:
            self.ps = ps
            self.site_weights = list(site_weights)
            self.z = list(z)
        self.N = len(self.z)
        self.l = tuple(int(x) for x in l)
        if len(self.l) != self.ps.rank:
            raise DimensionMismatch(
                f"need {self.ps.rank} root counts, got {len(self.l)}"
            )
        if any(x < 0 for x in self.l):
            raise DimensionMismatch("root counts must be nonnegative")
        self.colours = canonical_colours(self.l)
        self.n_roots = sum(self.l)
        roots = [simple_root(self.ps, a) for a in range(1, self.ps.rank + 1)]
        self.root_pairings = [
            [weight_inner(self.ps, x, y) for y in roots] for x in roots
        ]
        self.weight_pairings = [
            [weight_inner(self.ps, a, w) for w in self.site_weights] for a in roots
        ]

    @staticmethod
    def from_data(ps, site_weights, z, l) -> "BetheProblem":
        return BetheProblem(None, l, ps=ps, site_weights=site_weights, z=z)

    @property
    def total_weight(self) -> Weight:
        w = self.site_weights[0]
        for x in self.site_weights[1:]:
            w = w + x
        return w

    @property
    def weight_at_infinity(self) -> Weight:
        w = self.total_weight
        for p, lp in enumerate(self.l, start=1):
            if lp:
                w = w - simple_root(self.ps, p).scale(lp)
        return w

    def pairing_rr(self, i: int, j: int):
        """ (alpha_{c(i)}, alpha_{c(j)}) for root indices (0-based)."""
        return self.root_pairings[self.colours[i] - 1][self.colours[j] - 1]

    def pairing_rs(self, i: int, s: int):
        """ (alpha_{c(i)}, lambda^(s)) for root i and site s (0-based)."""
        return self.weight_pairings[self.colours[i] - 1][s]


def _scale(zs, ts) -> float:
    vals = [abs(to_complex(x)) for x in zs] + [abs(to_complex(x)) for x in ts]
    return max([1.0] + vals)


def _checked_inverse(num, den, scale, what):
    if is_exact(den):
        if not den:
            raise PoleCollision(f"exact pole in {what}")
        return num / den
    d = to_complex(den)
    if abs(d) < POLE_TOL * scale:
        raise PoleCollision(f"denominator below tolerance in {what}: |{d}|")
    return num / d


# ---------------------------------------------------------------------------
# ordered partitions and the weight function


def ordered_partition_count(l: int, N: int) -> int:
    return math.factorial(l) * math.comb(l + N - 1, N - 1)


def ordered_partitions(l: int, N: int):
    """All ordered partitions of {0..l-1} into N ordered parts.

    Yields tuples of index tuples, one per part; the total count is
    l! * C(l+N-1, N-1).  Enumeration order (compositions outer, permutations
    inner, both lexicographic) is deterministic.
    """
    if N < 1:
        raise DimensionMismatch("need at least one part")
    for cuts in itertools.combinations(range(l + N - 1), N - 1):
        shape = []
        prev = -1
        for c in cuts:
            shape.append(c - prev - 1)
            prev = c
        shape.append(l + N - 2 - prev)
        for perm in itertools.permutations(range(l)):
            parts = []
            at = 0
            for p in shape:
                parts.append(perm[at : at + p])
                at += p
            yield tuple(parts)


def partition_sign(parts, colours, ps: ParitySequence) -> int:
    """(-1)^|n|: parity of the number of odd-odd inversions in the layout."""
    seq = [i for part in parts for i in part]
    odd = [ps.simple_root_parity(colours[i]) == 1 for i in range(len(colours))]
    sign = 1
    for x in range(len(seq)):
        for y in range(x + 1, len(seq)):
            if seq[y] < seq[x] and odd[seq[x]] and odd[seq[y]]:
                sign = -sign
    return sign


def weight_function(prob: BetheProblem, roots: BetheRoots) -> dict:
    """The vector w(z, t): signed sum over ordered partitions of F-chains.

    Terms whose operator word annihilates the highest-weight vectors are
    dropped before their denominators are inspected, so coincident roots that
    only appear in vanishing terms are harmless (and give the exact zero
    vector when everything vanishes, e.g. coincident odd roots of one colour).
    """
    if prob.chain is None:
        raise DimensionMismatch("weight function needs a realized chain")
    l, N = prob.n_roots, prob.N
    if len(roots) != l:
        raise DimensionMismatch(f"expected {l} roots, got {len(roots)}")
    if tuple(roots.colours) != prob.colours:
        raise DimensionMismatch("roots are not in the canonical colour layout")
    if l > PARTITION_CAP_ROOTS or N > PARTITION_CAP_SITES:
        raise TooLarge(
            f"weight function capped at l <= {PARTITION_CAP_ROOTS}, "
            f"N <= {PARTITION_CAP_SITES} (got l={l}, N={N})"
        )
    space = prob.chain.space
    scale = _scale(prob.z, roots.values)
    t = roots.values
    z = prob.z
    colours = prob.colours

    site_chain_cache: dict = {}

    def site_chain(k: int, word: tuple) -> dict:
        key = (k, word)
        if key not in site_chain_cache:
            if not word:
                vec = prob.chain.modules[k].hw_vector
            else:
                vec = site_chain(k, word[1:])
                if vec:
                    vec = prob.chain.modules[k].lowering[word[0]].apply(vec)
            site_chain_cache[key] = vec
        return site_chain_cache[key]

    scalars: dict = {}
    for parts in ordered_partitions(l, N):
        words = tuple(tuple(colours[i] for i in part) for part in parts)
        dead = False
        for k, word in enumerate(words):
            if not site_chain(k, word):
                dead = True
                break
        if dead:
            continue
        omega = 1
        for k, part in enumerate(parts):
            for a in range(len(part)):
                lhs = t[part[a]]
                rhs = t[part[a + 1]] if a + 1 < len(part) else z[k]
                omega = _checked_inverse(omega, lhs - rhs, scale, "weight function")
        sign = partition_sign(parts, colours, prob.ps)
        cur = scalars.get(words, 0)
        scalars[words] = cur + (omega if sign == 1 else -omega)

    out: dict = {}
    for words in sorted(scalars):
        coeff = scalars[words]
        if is_exact(coeff):
            if not coeff:
                continue
        vec = space.pure_tensor([site_chain(k, w) for k, w in enumerate(words)])
        for idx, x in vec.items():
            cur = out.get(idx, 0)
            new = cur + coeff * x
            if is_exact(new) and not new:
                out.pop(idx, None)
            else:
                out[idx] = new
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Bethe equations


def bae_residual(prob: BetheProblem, roots: BetheRoots) -> list:
    """Left-hand sides of the Bethe equations at the given roots."""
    t = roots.values
    z = prob.z
    scale = _scale(z, t)
    out = []
    for i in range(len(t)):
        r = 0
        for s in range(prob.N):
            coeff = prob.pairing_rs(i, s)
            r = r - _checked_inverse(coeff, t[i] - z[s], scale, f"BAE term t_{i}-z_{s}")
        for j in range(len(t)):
            if j == i:
                continue
            coeff = prob.pairing_rr(i, j)
            if coeff:
                r = r + _checked_inverse(
                    coeff, t[i] - t[j], scale, f"BAE term t_{i}-t_{j}"
                )
        out.append(r)
    return out


def bae_residual_scale(prob: BetheProblem, roots: BetheRoots) -> float:
    """Conditioning scale of the residual at the given roots.

    Each term c/(a - b) computed in floating point carries an absolute error
    of roughly eps_mach * |c| * max(1, |a|, |b|) / |a - b|^2 (forming the
    difference loses the most), so the achievable residual is this scale
    times machine epsilon.  Convergence thresholds are relative to it.
    """
    t = roots.values
    z = prob.z
    best = 1.0

    def bump(c, a, b):
        nonlocal best
        ca, cb = to_complex(a), to_complex(b)
        den = abs(ca - cb)
        if den > 0:
            amp = abs(to_complex(c)) * max(1.0, abs(ca), abs(cb)) / (den * den)
            best = max(best, amp)

    for i in range(len(t)):
        for s in range(prob.N):
            c = prob.pairing_rs(i, s)
            if c:
                bump(c, t[i], z[s])
        for j in range(len(t)):
            if j != i:
                c = prob.pairing_rr(i, j)
                if c:
                    bump(c, t[i], t[j])
    return best


def bae_jacobian(prob: BetheProblem, roots: BetheRoots) -> list:
    """Analytic Jacobian d(residual_i)/d(t_j)."""
    t = roots.values
    z = prob.z
    scale = _scale(z, t)
    n = len(t)
    jac = [[0] * n for _ in range(n)]
    for i in range(n):
        diag = 0
        for s in range(prob.N):
            den = t[i] - z[s]
            once = _checked_inverse(prob.pairing_rs(i, s), den, scale, "jacobian")
            diag = diag + _checked_inverse(once, den, scale, "jacobian")
        for j in range(n):
            if j == i:
                continue
            coeff = prob.pairing_rr(i, j)
            if coeff:
                den = t[i] - t[j]
                term = _checked_inverse(
                    _checked_inverse(coeff, den, scale, "jacobian"), den, scale, "jacobian"
                )
                jac[i][j] = term
                diag = diag - term
        jac[i][i] = diag
    return jac


def canonicalize(roots: BetheRoots) -> BetheRoots:
    """Sort roots within each colour class by (Re, Im); idempotent."""
    grouped = roots.by_colour()
    values = []
    colours = []
    for c in sorted(grouped):
        vals = sorted(
            grouped[c], key=lambda v: (to_complex(v).real, to_complex(v).imag)
        )
        values.extend(vals)
        colours.extend([c] * len(vals))
    return BetheRoots(values, colours)


def equivalent(a: BetheRoots, b: BetheRoots, tol: float = 1e-7) -> bool:
    """Same orbit under per-colour permutations, to per-coordinate tolerance."""
    if a.colours != b.colours:
        return False
    ca, cb = canonicalize(a), canonicalize(b)
    return all(
        abs(to_complex(x) - to_complex(y)) <= tol
        for x, y in zip(ca.values, cb.values)
    )


# ---------------------------------------------------------------------------
# eigenvalue formulas


def eigenvalues_vector_rep(prob: BetheProblem, roots: BetheRoots) -> list:
    """Eigenvalue of H_i on the Bethe vector when every site is the defining rep."""
    z = prob.z
    scale = _scale(z, roots.values)
    out = []
    for i in range(prob.N):
        e = 0
        for j in range(prob.N):
            if j != i:
                e = e + _checked_inverse(1, z[i] - z[j], scale, "eigenvalue")
        for j, c in enumerate(prob.colours):
            if c == 1:
                e = e + _checked_inverse(
                    1, roots.values[j] - z[i], scale, "eigenvalue"
                )
        out.append(e)
    return out


def eigenvalues_general(prob: BetheProblem, roots: BetheRoots) -> list:
    """Eigenvalue of H_i for arbitrary polynomial site modules."""
    z = prob.z
    lam = prob.site_weights
    ps = prob.ps
    scale = _scale(z, roots.values)
    lam_pair = [
        [weight_inner(ps, lam[i], lam[j]) for j in range(len(lam))]
        for i in range(len(lam))
    ]
    out = []
    for i in range(prob.N):
        e = 0
        for j in range(prob.N):
            if j != i:
                e = e + _checked_inverse(
                    lam_pair[i][j], z[i] - z[j], scale, "eigenvalue"
                )
        for j in range(prob.n_roots):
            coeff = prob.weight_pairings[prob.colours[j] - 1][i]
            if coeff:
                e = e + _checked_inverse(
                    coeff, roots.values[j] - z[i], scale, "eigenvalue"
                )
        out.append(e)
    return out


# ---------------------------------------------------------------------------
# closed-form solutions


def two_point_tilde(lam: Weight, a: int, ps: ParitySequence, s: int) -> Fraction:
    sgn = lambda b: -1 if ps.parity(b) else 1
    return (
        sgn(s) * lam.component(s)
        - sgn(a + 1) * lam.component(a + 1)
        + sum(sgn(r) for r in range(s + 1, a + 1))
    )


def two_point_solve(mu, a: int, ps: ParitySequence) -> BetheRoots:
    """Closed-form Bethe roots for (defining rep at z=1) x (V(mu) at z=0).

    The component of highest weight lam + eps_{a+1} carries one root per
    colour 1..a, given by a finite product recursion; a = 0 is the trivial
    (rootless) solution.
    """
    mu = validate_hook(mu, ps)
    lam = hook_to_weight(ps, mu)
    if not 0 <= a <= ps.rank:
        raise NoSuchComponent(f"a = {a} out of range 0..{ps.rank}")
    if not box_addable(lam, a, ps):
        raise NoSuchComponent(
            f"lambda + eps_{a+1} is not a hook component of the product (a={a})"
        )
    values = []
    prod = Fraction(1)
    for s in range(1, a + 1):
        tl = two_point_tilde(lam, a, ps, s)
        sgn = -1 if ps.parity(s) else 1
        den = sgn + tl
        if tl == 0 or den == 0:
            raise NoSuchComponent(
                f"degenerate recursion at colour {s} (tilde={tl}); not admissible"
            )
        prod = prod * tl / den
        values.append(prod)
    return BetheRoots(values, tuple(range(1, a + 1)))


def map_two_point_roots(roots: BetheRoots, z1, z2) -> BetheRoots:
    """Affine transport of the z=(1,0) closed form to sites (z1, z2)."""
    return BetheRoots([z2 + (z1 - z2) * v for v in roots.values], roots.colours)


@dataclass
class Gl11Solution:
    roots: list
    reduced_degree: bool = False


def gl11_polynomial(h, z):
    """Coefficients (descending) of alpha(t) * prod_j (t - z_j)."""
    n = len(z)
    coeffs = [0] * n
    for j in range(n):
        poly = [1]
        for i in range(n):
            if i != j:
                poly = _poly_mul_linear(poly, z[i])
        for k, c in enumerate(poly):
            coeffs[k] = coeffs[k] + h[j] * c
    return coeffs


def _poly_mul_linear(poly, root):
    """Multiply a coefficient list (descending) by (t - root)."""
    out = list(poly) + [0]
    for i in range(len(poly)):
        out[i + 1] = out[i + 1] - poly[i] * root
    return out


def gl11_solve(h, z) -> Gl11Solution:
    """Roots of the decoupled gl(1|1) Bethe equation alpha(t) = 0.

    alpha(t) * prod(t - z_j) is a polynomial of degree n-1 with leading
    coefficient sum(h); its roots come from companion-matrix eigenvalues.
    """
    import numpy as np

    if len(h) != len(z):
        raise DimensionMismatch("need one weight h_j per site")
    coeffs = [to_complex(c) for c in gl11_polynomial(h, z)]
    reduced = abs(coeffs[0]) < 1e-14 * max(1.0, max(abs(c) for c in coeffs))
    while coeffs and abs(coeffs[0]) < 1e-14:
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return Gl11Solution(roots=[], reduced_degree=reduced)
    roots = sorted(np.roots(coeffs), key=lambda v: (v.real, v.imag))
    return Gl11Solution(roots=[complex(r) for r in roots], reduced_degree=reduced)


def gl11_solve_exact(h, z):
    """Exact roots of the decoupled equation when they are algebraic of degree
    at most two over the rationals (up to three sites, real roots); otherwise
    None and the caller should fall back to the numeric path."""
    if not all(is_exact(x) for x in h) or not all(is_exact(x) for x in z):
        return None
    coeffs = [Fraction(as_fraction(c)) for c in gl11_polynomial(h, z)]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    deg = len(coeffs) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [-coeffs[1] / coeffs[0]]
    if deg == 2:
        a, b, c = coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return None
        root = exact_sqrt(disc)
        if root is not None:
            return sorted([(-b - root) / (2 * a), (-b + root) / (2 * a)])
        lo = SqrtExt(-b / (2 * a), Fraction(-1, 1) / (2 * a), d=disc)
        hi = SqrtExt(-b / (2 * a), Fraction(1, 1) / (2 * a), d=disc)
        if a < 0:
            lo, hi = hi, lo
        return [lo, hi]
    return None


def gl11_norm_factors(h, z, roots):
    """Per-root factor sum_i h_i/(t-z_i)^2; the Bethe vector norm^2 is their product."""
    out = []
    for t in roots:
        total = 0
        for hi, zi in zip(h, z):
            den = t - zi
            total = total + hi / (den * den)
        out.append(total)
    return out


def gl11_log_master_hessian_det(h, z, roots):
    """Determinant of the Hessian of log Phi at a critical point (diagonal)."""
    det = 1
    for f in gl11_norm_factors(h, z, roots):
        det = det * f
    return det


@dataclass
class Gl21Family:
    """One-parameter family member of one-point gl(2|1) admissible solutions."""

    t_roots: list
    s_roots: list
    c_param: object
    exact: bool

    def roots(self) -> BetheRoots:
        return BetheRoots(
            list(self.t_roots) + list(self.s_roots),
            tuple([1] * len(self.t_roots) + [2] * len(self.s_roots)),
        )


def gl21_one_point(r1: int, r2: int, l1: int, l2: int, c_param=Fraction(1)):
    """Admissible one-point solutions for the typical gl(2|1) module (r1 > r2 > 0).

    Nonempty exactly when l1 = l2 = l with l in {0, r1 - r2}.  For the
    nontrivial l the colour-1 roots are the l-th roots of r1*c and the
    colour-2 roots the l-th roots of r2*c; every emitted family is validated
    by an exact residual check, which pins that assignment down.
    """
    if not (r1 > r2 > 0):
        raise NoSuchComponent("typical module requires r1 > r2 > 0")
    if l1 != l2:
        return []
    l = l1
    if l == 0:
        return [Gl21Family([], [], c_param, True)]
    if l != r1 - r2:
        return []

    def root_set(K):
        sq = exact_sqrt(as_fraction(K)) if is_exact(K) else None
        if l == 1:
            return [K], is_exact(K)
        if l == 2 and is_exact(K):
            if sq is not None:
                return [sq, -sq], True
            return [SqrtExt(0, 1, d=K), SqrtExt(0, -1, d=K)], True
        base = to_complex(K) ** (1.0 / l)
        return (
            [base * complex(math.cos(2 * math.pi * j / l), math.sin(2 * math.pi * j / l)) for j in range(l)],
            False,
        )

    ts, t_exact = root_set(r1 * c_param)
    ss, s_exact = root_set(r2 * c_param)
    exact = t_exact and s_exact
    if exact and l == 2:
        mixable = (
            all(isinstance(v, Fraction) for v in ts)
            or all(isinstance(v, Fraction) for v in ss)
        )
        if not mixable:
            ts = [to_complex(v) for v in ts]
            ss = [to_complex(v) for v in ss]
            exact = False
    fam = Gl21Family(ts, ss, c_param, exact)
    _validate_gl21_family(r1, r2, fam)
    return [fam]


def _validate_gl21_family(r1, r2, fam: Gl21Family):
    one = Fraction(1)
    for i, t in enumerate(fam.t_roots):
        res = -r1 * one / t
        for s in fam.s_roots:
            res = res + one / (t - s)
        _assert_root(res, fam.exact, f"colour-1 root {i}")
    for j, s in enumerate(fam.s_roots):
        res = r2 * one / s
        for t in fam.t_roots:
            res = res + one / (s - t)
        _assert_root(res, fam.exact, f"colour-2 root {j}")


def _assert_root(res, exact, what):
    if exact:
        if res != 0:
            raise NoSuchComponent(f"closed form failed exactly at {what}: {res}")
    elif abs(to_complex(res)) > 1e-9:
        raise NoSuchComponent(f"closed form failed numerically at {what}: {res}")


def gl21_bethe_vector_ratio(fam: Gl21Family, z=Fraction(0)):
    """Coefficients (c_A, c_B) of (F1 F2)^l v and (F2 F1)^l v at the family's
    roots.  At an admissible solution (c_A : c_B) = (r1 : r2); in a typical
    irreducible module that combination is exactly the image of the Verma
    singular vector being quotiented out, so the realized vector vanishes."""
    l = len(fam.t_roots)
    if l == 0:
        return (1, 0)
    form = gl21_weight_closed(z, list(fam.t_roots), list(fam.s_roots))
    coeff = {word: c for word, c in form.terms}
    return (
        coeff.get(_alternating_word(1, 2 * l), 0),
        coeff.get(_alternating_word(2, 2 * l), 0),
    )


@dataclass
class ClosedWeightForm:
    """Weight function as explicit coefficients of lowering-operator words."""

    terms: list = field(default_factory=list)  # (word tuple, coefficient)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def vector(self, chain: ChainSpec) -> dict:
        if chain.N != 1:
            raise DimensionMismatch("closed one-point form needs a one-site chain")
        mod = chain.modules[0]
        out: dict = {}
        for word, coeff in self.terms:
            vec = mod.hw_vector
            for c in reversed(word):
                vec = mod.lowering[c].apply(vec)
            for idx, x in vec.items():
                cur = out.get(idx, 0)
                new = cur + coeff * x
                if is_exact(new) and not new:
                    out.pop(idx, None)
                else:
                    out[idx] = new
        return {k: v for k, v in out.items() if v}


def _alternating_word(first: int, length: int) -> tuple:
    other = 3 - first
    return tuple(first if i % 2 == 0 else other for i in range(length))


def gl21_weight_closed(z, t_roots, s_roots) -> ClosedWeightForm:
    """Closed one-point gl(2|1) weight function (both simple roots odd).

    Balanced root counts give a two-term combination of the alternating words
    (F1 F2)^l and (F2 F1)^l; counts differing by one give a single alternating
    word; everything else vanishes identically.  Overall signs come from the
    inversion count of the alternating layout and are pinned exactly against
    the general evaluator.
    """
    l1, l2 = len(t_roots), len(s_roots)
    if l1 == l2 == 0:
        return ClosedWeightForm(terms=[((), 1)])
    if l1 == l2:
        l = l1
        sign = -1 if l % 2 else 1
        pref = sign
        for i in range(l):
            for j in range(i + 1, l):
                pref = pref * (s_roots[i] - s_roots[j]) * (t_roots[i] - t_roots[j])
        for si in s_roots:
            for tj in t_roots:
                pref = pref / (si - tj)
        den_s = 1
        for si in s_roots:
            den_s = den_s * (si - z)
        den_t = 1
        for ti in t_roots:
            den_t = den_t * (ti - z)
        return ClosedWeightForm(
            terms=[
                (_alternating_word(1, 2 * l), pref / den_s),
                (_alternating_word(2, 2 * l), pref / den_t),
            ]
        )
    if abs(l1 - l2) == 1:
        if l1 == l2 + 1:
            big, small, first = t_roots, s_roots, 1
        else:
            big, small, first = s_roots, t_roots, 2
        k = len(small)
        coeff = 1
        for i in range(k):
            for j in range(i + 1, k):
                coeff = coeff * (small[i] - small[j])
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                coeff = coeff * (big[i] - big[j])
        for bi in big:
            for sj in small:
                coeff = coeff / (bi - sj)
        for bi in big:
            coeff = coeff / (bi - z)
        return ClosedWeightForm(terms=[(_alternating_word(first, 2 * k + 1), coeff)])
    return ClosedWeightForm(terms=[])
