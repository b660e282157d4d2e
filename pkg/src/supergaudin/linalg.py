"""Sparse exact linear algebra.

Operators are dictionaries keyed by (row, col); vectors are dictionaries
keyed by index.  Entries can be any field scalar (Fraction, GaussianRational,
SqrtExt, complex); exact scalars give exact results.  Stored zeros are always
pruned so `entries` doubles as a support test, and iteration is sorted to
keep every computation deterministic.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .scalars import to_complex


def _is_zero(x) -> bool:
    return not x


def _inv(x):
    """Multiplicative inverse; keeps integers exact instead of demoting to float."""
    from fractions import Fraction

    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


class SparseOperator:
    """Square sparse matrix with exact-friendly entries and an optional parity bit."""

    __slots__ = ("dim", "entries", "parity")

    def __init__(self, dim, entries=None, parity=None):
        self.dim = dim
        self.entries = {}
        self.parity = parity
        if entries:
            for (r, c), v in entries.items():
                if not _is_zero(v):
                    self.entries[(r, c)] = v

    @staticmethod
    def identity(dim, parity=0):
        return SparseOperator(dim, {(i, i): 1 for i in range(dim)}, parity=parity)

    @staticmethod
    def zero(dim, parity=None):
        return SparseOperator(dim, parity=parity)

    def copy(self):
        op = SparseOperator(self.dim, parity=self.parity)
        op.entries = dict(self.entries)
        return op

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def add_to(self, r, c, v):
        cur = self.entries.get((r, c), 0)
        new = cur + v
        if _is_zero(new):
            self.entries.pop((r, c), None)
        else:
            self.entries[(r, c)] = new

    def items_sorted(self):
        return sorted(self.entries.items())

    @property
    def nnz(self):
        return len(self.entries)

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch(f"operator dims {self.dim} != {other.dim}")

    def __add__(self, other):
        self._check(other)
        out = self.copy()
        out.parity = self.parity if self.parity == other.parity else None
        for (r, c), v in other.entries.items():
            out.add_to(r, c, v)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        if _is_zero(s):
            return SparseOperator.zero(self.dim, parity=self.parity)
        return SparseOperator(
            self.dim, {k: s * v for k, v in self.entries.items()}, parity=self.parity
        )

    def __matmul__(self, other):
        self._check(other)
        rows_of_other = {}
        for (r, c), v in other.entries.items():
            rows_of_other.setdefault(r, []).append((c, v))
        out = SparseOperator(self.dim)
        if self.parity is not None and other.parity is not None:
            out.parity = (self.parity + other.parity) % 2
        for (r, j), va in self.entries.items():
            hits = rows_of_other.get(j)
            if not hits:
                continue
            for c, vb in hits:
                out.add_to(r, c, va * vb)
        return out

    def commutator(self, other):
        return self @ other - other @ self

    def transpose(self):
        return SparseOperator(
            self.dim,
            {(c, r): v for (r, c), v in self.entries.items()},
            parity=self.parity,
        )

    def apply(self, vec: dict) -> dict:
        cols = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, []).append((r, v))
        out = {}
        for c, x in vec.items():
            hits = cols.get(c)
            if not hits:
                continue
            for r, v in hits:
                cur = out.get(r, 0)
                new = cur + v * x
                if _is_zero(new):
                    out.pop(r, None)
                else:
                    out[r] = new
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    def __hash__(self):
        return hash((self.dim, tuple(self.items_sorted())))

    def max_abs(self) -> float:
        return max((abs(to_complex(v)) for v in self.entries.values()), default=0.0)

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.dim, self.dim), dtype=complex)
        for (r, c), v in self.entries.items():
            a[r, c] = to_complex(v)
        return a

    def to_dense_rows(self):
        rows = [[0] * self.dim for _ in range(self.dim)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def map_scalars(self, f):
        return SparseOperator(
            self.dim, {k: f(v) for k, v in self.entries.items()}, parity=self.parity
        )

    def __repr__(self):
        return f"SparseOperator(dim={self.dim}, nnz={self.nnz})"


# ---------------------------------------------------------------------------
# sparse vectors


def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        new = out.get(k, 0) + x
        if _is_zero(new):
            out.pop(k, None)
        else:
            out[k] = new
    return out


def vec_scale(u: dict, s) -> dict:
    if _is_zero(s):
        return {}
    return {k: s * x for k, x in u.items()}

def vec_sub(u: dict, v: dict) -> dict:
    return vec_add(u, vec_scale(v, -1))


def vec_dot(u: dict, v: dict):
    """Plain bilinear dot product (no conjugation)."""
    if len(u) > len(v):
        u, v = v, u
    total = 0
    for k, x in u.items():
        y = v.get(k)
        if y is not None:
            total = total + x * y
    return total


def vec_is_zero(u: dict) -> bool:
    return not u


def vec_norm_inf(u: dict) -> float:
    return max((abs(to_complex(x)) for x in u.values()), default=0.0)


def vec_to_numpy(u: dict, dim: int) -> np.ndarray:
    a = np.zeros(dim, dtype=complex)
    for k, x in u.items():
        a[k] = to_complex(x)
    return a


# ---------------------------------------------------------------------------
# exact Gaussian elimination


def rref_rows(rows: list[dict]) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of sparse rows over an exact field.

    Returns (reduced nonzero rows, pivot column per row).  Pivot columns are
    chosen lowest-index-first, so the result is canonical for a given row span.
    """
    work = [dict(r) for r in rows]
    reduced: list[dict] = []
    pivots: list[int] = []
    cols = sorted({c for r in work for c in r})
    for col in cols:
        pivot_row = None
        for r in work:
            if col in r:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        pivot_row = vec_scale(pivot_row, _inv(pivot_row[col]))
        for i, r in enumerate(work):
            if col in r:
                work[i] = vec_sub(r, vec_scale(pivot_row, r[col]))
        for i, r in enumerate(reduced):
            if col in r:
                reduced[i] = vec_sub(r, vec_scale(pivot_row, r[col]))
        reduced.append(pivot_row)
        pivots.append(col)
        work = [r for r in work if r]
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [reduced[i] for i in order], [pivots[i] for i in order]


class SpanBasis:
    """Incremental exact basis of a subspace.

    Tracks, for every echelon row, its expression in the accepted generator
    vectors, so membership tests and change of basis to the generators are
    both O(rank * support).
    """

    def __init__(self):
        self.rows: list[dict] = []      # echelonized vectors
        self.pivots: list[int] = []
        self.exprs: list[dict] = []     # row = sum_j expr[j] * raw[j]
        self.raw: list[dict] = []       # accepted generators, in insertion order

    def __len__(self):
        return len(self.rows)

    def _reduce(self, vec: dict) -> tuple[dict, dict]:
        v = dict(vec)
        e: dict = {}
        for row, p, expr in zip(self.rows, self.pivots, self.exprs):
            if p in v:
                coef = v[p]
                v = vec_sub(v, vec_scale(row, coef))
                e = vec_add(e, vec_scale(expr, coef))
        return v, e

    def add(self, vec: dict) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        v, e = self._reduce(vec)
        if not v:
            return False
        # remainder v = vec - sum_j e[j] raw[j], so in terms of the enlarged
        # generator list its expression is {new: 1} - e
        new_idx = len(self.raw)
        p = min(v)
        inv = _inv(v[p])
        row = vec_scale(v, inv)
        expr = vec_scale(vec_sub({new_idx: 1}, e), inv)
        for i in range(len(self.rows)):
            if p in self.rows[i]:
                coef = self.rows[i][p]
                self.rows[i] = vec_sub(self.rows[i], vec_scale(row, coef))
                self.exprs[i] = vec_sub(self.exprs[i], vec_scale(expr, coef))
        self.rows.append(row)
        self.pivots.append(p)
        self.exprs.append(expr)
        self.raw.append(dict(vec))
        return True

    def contains(self, vec: dict) -> bool:
        v, _ = self._reduce(vec)
        return not v

    def coordinates(self, vec: dict):
        """Coefficients c with vec = sum_i c_i raw_i, or None if not in span."""
        v, e = self._reduce(vec)
        if v:
            return None
        return [e.get(i, 0) for i in range(len(self.raw))]


def nullspace_of_columns(cols: list[dict]) -> list[list]:
    """Basis of {c : sum_i c_i * cols_i = 0}, coefficients as dense lists."""
    k = len(cols)
    rows: list[dict] = []  # transpose, rows indexed by original vector index
    row_index: dict[int, int] = {}
    for i, col in enumerate(cols):
        for r, v in col.items():
            j = row_index.setdefault(r, len(row_index))
            while len(rows) <= j:
                rows.append({})
            if not _is_zero(v):
                rows[j][i] = v
    reduced, pivots = rref_rows(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(k):
        if free in pivot_set:
            continue
        c = [0] * k
        c[free] = 1
        for row, p in zip(reduced, pivots):
            if free in row:
                c[p] = -row[free]
        basis.append(c)
    return basis


def solve_in_span(cols: list[dict], target: dict):
    """Coefficients c with sum_i c_i cols_i = target, or None if inconsistent.

    When the columns are dependent the lexicographically-first solution
    (free coefficients set to zero) is returned.
    """
    k = len(cols)
    coeffs = nullspace_of_columns(list(cols) + [dict(target)])
    for c in coeffs:
        if not _is_zero(c[k]):
            s = -_inv(c[k])
            return [ci * s for ci in c[:k]]
    if not target:
        return [0] * k
    return None
