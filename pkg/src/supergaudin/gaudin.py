"""Quadratic Gaudin Hamiltonians on a chain of modules and the brute-force
spectral oracle.

The Hamiltonians are H_i = sum_{j != i} T_ij / (z_i - z_j) with T_ij the
quadratic invariant across the site pair, assembled site-operator by
site-operator so every Koszul sign comes from one code path.  With exact
(rational or Gaussian-rational) site points all structural checks are exact
matrix identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DuplicateSite, TooLarge
from .linalg import SparseOperator, vec_to_numpy
from .reps import ChainSpace, singular_vectors
from .scalars import GaussianRational, is_exact, to_complex


class ChainSpec:
    """Sites (z_i, module_i) of a Gaudin chain over one parity sequence.

    Exact z (int, Fraction, GaussianRational) keep the whole Hamiltonian
    exact; any float/complex site point demotes all coefficients to complex.
    """

    def __init__(self, ps, sites):
        self.ps = ps
        modules = []
        zs = []
        for z, mod in sites:
            zs.append(z)
            modules.append(mod)
        if len(zs) < 1:
            raise DuplicateSite("chain needs at least one site")
        exact = all(is_exact(z) for z in zs)
        if exact:
            self.z = [
                z if isinstance(z, GaussianRational) else Fraction(z) for z in zs
            ]
        else:
            self.z = [to_complex(z) for z in zs]
        self.exact = exact
        for i in range(len(zs)):
            for j in range(i + 1, len(zs)):
                if self._z_equal(self.z[i], self.z[j]):
                    raise DuplicateSite(f"sites {i+1} and {j+1} coincide")
        self.modules = modules
        self.space = ChainSpace(modules)
        self.N = len(modules)

    @staticmethod
    def _z_equal(a, b) -> bool:
        if is_exact(a) and is_exact(b):
            return not (a - b)
        return abs(to_complex(a) - to_complex(b)) == 0.0

    def site_weights(self):
        return [m.hw_weight for m in self.modules]

    def pair_invariant(self, i: int, j: int) -> SparseOperator:
        """T_ij = sum_ab E_ab^(i) E_ba^(j) (-1)^|b|, no spectral denominator."""
        d = self.ps.dim
        out = SparseOperator.zero(self.space.dim)
        for a in range(1, d + 1):
            for b in range(1, d + 1):
                term = self.space.site_gen(i, a, b) @ self.space.site_gen(j, b, a)
                out = out + (term.scale(-1) if self.ps.parity(b) else term)
        out.parity = 0
        return out


def hamiltonian(chain: ChainSpec, i: int) -> SparseOperator:
    """The Gaudin Hamiltonian attached to site i (1-based)."""
    if not 1 <= i <= chain.N:
        raise IndexError(f"site {i} out of range 1..{chain.N}")
    if not hasattr(chain, "_pair_cache"):
        chain._pair_cache = {}
    out = SparseOperator.zero(chain.space.dim, parity=0)
    for j in range(1, chain.N + 1):
        if j == i:
            continue
        key = (i, j)
        if key not in chain._pair_cache:
            chain._pair_cache[key] = chain.pair_invariant(i, j)
        den = chain.z[i - 1] - chain.z[j - 1]
        coeff = (Fraction(1) if chain.exact else 1.0) / den
        out = out + chain._pair_cache[key].scale(coeff)
    out.parity = 0
    return out


def hamiltonians(chain: ChainSpec):
    return [hamiltonian(chain, i) for i in range(1, chain.N + 1)]


def chain_gram(chain: ChainSpec) -> SparseOperator:
    """Tensor Shapovalov Gram matrix of the chain basis (identity on word bases)."""
    space = chain.space
    out = SparseOperator.identity(1)
    for mod in chain.modules:
        nxt = SparseOperator(out.dim * mod.dim)
        for (r1, c1), v1 in out.entries.items():
            for (r2, c2), v2 in mod.gram.entries.items():
                nxt.add_to(r1 * mod.dim + r2, c1 * mod.dim + c2, v1 * v2)
        out = nxt
    return out


@dataclass
class HamiltonianReport:
    commute: bool
    invariant: bool
    symmetric: bool
    sum_zero: bool
    counterexample: str | None = None

    @property
    def all_ok(self) -> bool:
        return self.commute and self.invariant and self.symmetric and self.sum_zero

    def as_dict(self):
        return {
            "commute": self.commute,
            "invariant": self.invariant,
            "symmetric": self.symmetric,
            "sum_zero": self.sum_zero,
            "counterexample": self.counterexample,
        }


def verify_hamiltonians(chain: ChainSpec) -> HamiltonianReport:
    """Check the four structural properties of the Hamiltonians.

    With exact site points every identity is checked exactly; with floats the
    residuals must stay below 1e-10 times the scale of the operators involved.
    """
    hs = hamiltonians(chain)
    scale = max(max((h.max_abs() for h in hs), default=0.0), 1.0)

    def vanishes(op: SparseOperator) -> bool:
        if chain.exact:
            return op.is_zero()
        return op.max_abs() <= 1e-10 * scale

    report = HamiltonianReport(True, True, True, True)

    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            if not vanishes(hs[i].commutator(hs[j])):
                report.commute = False
                report.counterexample = f"[H_{i+1}, H_{j+1}] != 0"
                break
        if not report.commute:
            break

    for (a, b) in chain.space.generator_labels():
        x = chain.space.coproduct_gen(a, b)
        for i, h in enumerate(hs):
            if not vanishes(h @ x - x @ h):
                report.invariant = False
                report.counterexample = report.counterexample or (
                    f"[H_{i+1}, E_({a},{b})] != 0"
                )
                break
        if not report.invariant:
            break

    gram = chain_gram(chain)
    for i, h in enumerate(hs):
        if not vanishes(gram @ h - h.transpose() @ gram):
            report.symmetric = False
            report.counterexample = report.counterexample or (
                f"H_{i+1} not Shapovalov-symmetric"
            )
            break

    total = SparseOperator.zero(chain.space.dim)
    for h in hs:
        total = total + h
    if not vanishes(total):
        report.sum_zero = False
        report.counterexample = report.counterexample or "sum_i H_i != 0"
    return report


@dataclass
class SpectrumRecord:
    weight: tuple
    eigenvalues: tuple
    vector: np.ndarray = field(repr=False)
    stratum_dim: int = 0
    diagonalizable: bool = True
    jordan_blocks: tuple = ()


def brute_spectrum(chain: ChainSpec, cap: int = 4096, strata: str = "singular"):
    """Joint spectrum of all H_i by dense restriction to invariant strata.

    strata="singular" restricts to the weight strata of the singular subspace
    (the oracle for Bethe-vector checks); strata="weight" uses full weight
    spaces, which also exposes non-diagonalizable (Jordan) behaviour of
    non-semisimple chains.
    """
    if chain.space.dim > cap:
        raise TooLarge(f"chain dimension {chain.space.dim} exceeds cap {cap}")
    if strata not in ("singular", "weight"):
        raise ValueError("strata must be 'singular' or 'weight'")
    space = chain.space
    hs = [h.to_numpy() for h in hamiltonians(chain)]
    records = []
    for weight in sorted(space.weight_spaces(), key=lambda w: w.coords, reverse=True):
        if strata == "singular":
            basis_vecs = singular_vectors(space, weight)
        else:
            idxs = space.weight_spaces()[weight]
            basis_vecs = [{i: Fraction(1)} for i in idxs]
        if not basis_vecs:
            continue
        k = len(basis_vecs)
        S = np.stack(
            [vec_to_numpy(v, space.dim) for v in basis_vecs], axis=1
        )  # dim x k
        restricted = []
        for h in hs:
            hS = h @ S
            R, *_ = np.linalg.lstsq(S, hS, rcond=None)
            if np.linalg.norm(S @ R - hS) > 1e-8 * max(1.0, np.linalg.norm(hS)):
                raise TooLarge(
                    f"stratum {weight} not invariant; numerical breakdown"
                )
            restricted.append(R)
        rng = np.random.default_rng(12345)
        combo = sum(c * R for c, R in zip(rng.standard_normal(len(restricted)), restricted))
        vals, vecs = np.linalg.eig(combo)
        diagonalizable = (
            k == 0 or np.linalg.matrix_rank(vecs, tol=1e-8) == k
        )
        order = np.argsort(vals.real * 1e6 + vals.imag)
        if diagonalizable:
            for idx in order:
                v = vecs[:, idx]
                pivot = int(np.argmax(np.abs(v)))
                eigs = tuple(complex((R @ v)[pivot] / v[pivot]) for R in restricted)
                records.append(
                    SpectrumRecord(
                        weight=weight.coords,
                        eigenvalues=eigs,
                        vector=S @ v,
                        stratum_dim=k,
                        diagonalizable=True,
                    )
                )
        else:
            blocks = _jordan_blocks(combo)
            for idx in order:
                v = vecs[:, idx]
                pivot = int(np.argmax(np.abs(v)))
                eigs = tuple(complex((R @ v)[pivot] / v[pivot]) for R in restricted)
                records.append(
                    SpectrumRecord(
                        weight=weight.coords,
                        eigenvalues=eigs,
                        vector=S @ v,
                        stratum_dim=k,
                        diagonalizable=False,
                        jordan_blocks=blocks,
                    )
                )
    return records


def _jordan_blocks(matrix: np.ndarray, tol: float = 1e-8):
    """Jordan block sizes per (clustered) eigenvalue of a small dense matrix."""
    vals = np.linalg.eigvals(matrix)
    clusters: list[list[complex]] = []
    for v in sorted(vals, key=lambda x: (x.real, x.imag)):
        for cl in clusters:
            if abs(v - cl[0]) < 1e-6 * max(1.0, abs(cl[0])):
                cl.append(v)
                break
        else:
            clusters.append([v])
    out = []
    n = matrix.shape[0]
    for cl in clusters:
        lam = sum(cl) / len(cl)
        A = matrix - lam * np.eye(n)
        ranks = [n]
        P = np.eye(n)
        for _ in range(len(cl)):
            P = P @ A
            ranks.append(np.linalg.matrix_rank(P, tol=tol))
        # number of blocks of size >= s is rank(A^{s-1}) - rank(A^s)
        sizes = []
        for s in range(1, len(ranks)):
            count = (ranks[s - 1] - ranks[s]) - (
                (ranks[s] - ranks[s + 1]) if s + 1 < len(ranks) else 0
            )
            sizes.extend([s] * max(count, 0))
        out.append((complex(lam), tuple(sorted(sizes, reverse=True))))
    return tuple(out)
