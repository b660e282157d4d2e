"""Numerical solution of the Bethe equations: damped Newton with the analytic
Jacobian, and the scaling-parameter continuation that produces one verified
solution per chain of nested hooks on powers of the defining representation.

The continuation starts from the closed-form two-point solutions: site k is
placed at z_1 + eps^(N+1-k) ztilde_k, so as eps -> 0 the equations decouple
into the two-point systems solved exactly by the product formula.  Tracking
runs from a small eps up to eps = 1, where the sites are exactly the
requested points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bethe import (
    BetheProblem,
    BetheRoots,
    bae_jacobian,
    bae_residual,
    bae_residual_scale,
    canonical_colours,
    canonicalize,
    eigenvalues_general,
    equivalent,
    two_point_solve,
    weight_function,
)
from .errors import PoleCollision, TooLarge
from .gaudin import ChainSpec, hamiltonian
from .linalg import vec_norm_inf
from .reps import box_addable, box_step_index, defining_module, pieri_chains
from .scalars import to_complex
from .superalg import ParitySequence

NEWTON_TOL = 1e-12
COND_LIMIT = 1e12


@dataclass
class NewtonResult:
    roots: BetheRoots | None
    converged: bool
    iterations: int
    residual_norm: float
    message: str = ""


def _residual_norm(prob: BetheProblem, values) -> float:
    roots = BetheRoots(values, prob.colours)
    res = bae_residual(prob, roots)
    return max((abs(to_complex(r)) for r in res), default=0.0)


def newton(
    prob: BetheProblem,
    start: BetheRoots,
    max_iter: int = 60,
    tol: float = NEWTON_TOL,
) -> NewtonResult:
    """Damped Newton iteration on the BAE residual with the analytic Jacobian.

    Succeeds when the sup-norm of the residual falls below tol * scale, where
    scale is the size of the largest term cancelled in the residual sums (so
    the criterion is achievable in floating point even for clustered
    configurations); a Jacobian condition number beyond 1e12 or a failed line
    search reports a diagnostic failure instead of looping.
    """
    x = np.array([to_complex(v) for v in start.values], dtype=complex)
    if len(x) == 0:
        return NewtonResult(BetheRoots([], ()), True, 0, 0.0)

    def res_vec(vals):
        roots = BetheRoots(list(vals), prob.colours)
        return np.array(
            [to_complex(r) for r in bae_residual(prob, roots)], dtype=complex
        )

    def res_scale(vals):
        return bae_residual_scale(prob, BetheRoots(list(vals), prob.colours))

    try:
        r = res_vec(x)
    except PoleCollision as exc:
        return NewtonResult(None, False, 0, float("inf"), f"start on pole: {exc}")
    rnorm = float(np.max(np.abs(r)))
    escape = 1e8 * max([1.0] + [abs(to_complex(z)) for z in prob.z])
    for it in range(max_iter):
        if float(np.max(np.abs(x))) > escape:
            return NewtonResult(None, False, it, rnorm, "iterates diverged")
        if rnorm <= tol * res_scale(x):
            return NewtonResult(
                BetheRoots(list(x), prob.colours), True, it, rnorm
            )
        roots = BetheRoots(list(x), prob.colours)
        jac = np.array(
            [[to_complex(v) for v in row] for row in bae_jacobian(prob, roots)],
            dtype=complex,
        )
        cond = np.linalg.cond(jac)
        if not np.isfinite(cond) or cond > COND_LIMIT:
            return NewtonResult(
                None, False, it, rnorm, f"singular Jacobian (cond={cond:.2e})"
            )
        step = np.linalg.solve(jac, -r)
        lam = 1.0
        for _ in range(40):
            try:
                cand = x + lam * step
                rc = res_vec(cand)
            except PoleCollision:
                lam *= 0.5
                continue
            cnorm = float(np.max(np.abs(rc)))
            if cnorm < rnorm or cnorm <= tol * res_scale(cand):
                x, r, rnorm = cand, rc, cnorm
                break
            lam *= 0.5
        else:
            return NewtonResult(None, False, it, rnorm, "line search stalled")
    if rnorm <= tol * res_scale(x):
        return NewtonResult(BetheRoots(list(x), prob.colours), True, max_iter, rnorm)
    return NewtonResult(None, False, max_iter, rnorm, "max iterations exceeded")


# ---------------------------------------------------------------------------
# verification of candidate solutions


@dataclass
class VerificationReport:
    residual_norm: float
    zero_vector: bool
    singular_ok: bool
    singular_residual: float
    eigen_ok: bool
    eigen_residual: float
    eigenvalues: tuple
    norm_sq: object
    vector: dict = field(repr=False, default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return not self.zero_vector and self.singular_ok and self.eigen_ok

    def as_dict(self):
        return {
            "residual_norm": self.residual_norm,
            "zero_vector": self.zero_vector,
            "singular_ok": self.singular_ok,
            "singular_residual": self.singular_residual,
            "eigen_ok": self.eigen_ok,
            "eigen_residual": self.eigen_residual,
            "eigenvalues": [complex(to_complex(e)) for e in self.eigenvalues],
            "norm_sq": to_complex(self.norm_sq),
        }


def verify_solution(
    prob: BetheProblem, roots: BetheRoots, tol: float = 1e-8
) -> VerificationReport:
    """Build the Bethe vector and check singularity and the eigen-relations.

    Exact inputs make every check exact; floats use the relative tolerance.
    A vanishing weight function is flagged, not treated as an error.
    """
    res = bae_residual(prob, roots)
    residual_norm = max((abs(to_complex(r)) for r in res), default=0.0)
    w = weight_function(prob, roots)
    if not w:
        return VerificationReport(
            residual_norm, True, False, float("inf"), False, float("inf"), (), 0, {}
        )
    space = prob.chain.space
    wnorm = vec_norm_inf(w)

    sing_res = 0.0
    for a in range(1, prob.ps.dim):
        img = space.coproduct_gen(a, a + 1).apply(w)
        sing_res = max(sing_res, vec_norm_inf(img))
    singular_ok = sing_res <= tol * wnorm

    eigs = eigenvalues_general(prob, roots)
    eig_res = 0.0
    for i in range(prob.N):
        h = hamiltonian(prob.chain, i + 1)
        diff = h.apply(w)
        for k, x in w.items():
            cur = diff.get(k, 0) - eigs[i] * x
            if cur:
                diff[k] = cur
            else:
                diff.pop(k, None)
        eig_res = max(eig_res, vec_norm_inf(diff))
    eigen_ok = eig_res <= tol * wnorm

    norm_sq = space.pairing(w, w)
    return VerificationReport(
        residual_norm,
        False,
        singular_ok,
        sing_res / wnorm if wnorm else 0.0,
        eigen_ok,
        eig_res / wnorm if wnorm else 0.0,
        tuple(eigs),
        norm_sq,
        w,
    )


# ---------------------------------------------------------------------------
# completeness by continuation


@dataclass
class SolvedChain:
    label: tuple
    roots: BetheRoots
    residual_norm: float
    report: VerificationReport | None = None


@dataclass
class SolutionSet:
    ps: ParitySequence
    N: int
    z: list
    solutions: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    duplicates: list = field(default_factory=list)
    eps_schedule: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.unresolved and not self.duplicates


def _epsilon_schedule(eps0: float, ratio: float = 2.0 ** 0.25) -> list:
    out = [eps0]
    while out[-1] < 1.0:
        out.append(min(out[-1] * ratio, 1.0))
    return out


def _track_path(ps, base, N, l, zc, ztilde, steps, eps_start, start_roots, tol):
    """Predictor-corrector tracking of one chain's roots from eps_start to 1.

    The tangent d t / d eps comes from implicit differentiation of the BAE;
    a corrector landing far from the prediction signals a basin jump and
    halves the step.  A stall on the real eps axis (root collision at a
    branch point) is retried along detours through complex eps, which leave
    the endpoints fixed and are legitimate since the equations are algebraic
    in eps.  Returns (roots, None) or (None, reason).
    """
    colours = start_roots.colours

    def problem_at(eps: complex) -> BetheProblem:
        z_eps = [zc[0]] + [
            zc[0] + eps ** (N + 1 - k) * ztilde[k - 1] for k in range(2, N + 1)
        ]
        return BetheProblem.from_data(ps, [base.hw_weight] * N, z_eps, l)

    def z_dot(eps: complex):
        return [0.0] + [
            (N + 1 - k) * eps ** (N - k) * ztilde[k - 1] for k in range(2, N + 1)
        ]

    def tangent(eps: complex, vals: np.ndarray) -> np.ndarray:
        prob = problem_at(eps)
        roots = BetheRoots(list(vals), colours)
        try:
            jac = np.array(
                [[to_complex(v) for v in row] for row in bae_jacobian(prob, roots)],
                dtype=complex,
            )
        except PoleCollision:
            return np.zeros(len(vals), dtype=complex)
        zd = z_dot(eps)
        rhs = np.zeros(len(vals), dtype=complex)
        z_eps = prob.z
        for i in range(len(vals)):
            acc = 0j
            for s in range(N):
                c = prob.pairing_rs(i, s)
                if c and zd[s]:
                    den = vals[i] - to_complex(z_eps[s])
                    acc -= to_complex(c) * zd[s] / (den * den)
            rhs[i] = -acc
        try:
            return np.linalg.solve(jac, rhs)
        except np.linalg.LinAlgError:
            return np.zeros(len(vals), dtype=complex)

    def track_segment(eps_a: complex, eps_b: complex, x: np.ndarray, max_steps: int = 200):
        """Adaptive linear tracking in eps from eps_a to eps_b.

        Steps are capped at a fraction of |eps| so the early phase, where the
        roots scale like powers of eps, advances geometrically.  A step budget
        bounds the asymptotic creep toward a branch point on the segment
        (roots colliding en route); hitting it reports a stall so the caller
        can reroute through complex eps.
        """
        seg = eps_b - eps_a
        if seg == 0:
            return x, None
        s = 0.0
        steps = 0

        def cap(at: float) -> float:
            cur = abs(eps_a + at * seg)
            return max(min(0.2 * cur / abs(seg), 0.25), 1e-6)

        ds = cap(0.0)
        while s < 1.0:
            steps += 1
            if steps > max_steps:
                return None, eps_a + s * seg
            ds = min(ds, 1.0 - s, cap(s))
            deps = ds * seg
            eps_next = eps_a + (s + ds) * seg
            step = deps * tangent(eps_a + s * seg, x)
            pred = x + step
            result = newton(
                problem_at(eps_next), BetheRoots(list(pred), colours), tol=tol
            )
            ok = result.converged
            if ok:
                corr = np.array(
                    [to_complex(v) for v in result.roots.values], dtype=complex
                )
                drift = float(np.max(np.abs(corr - pred))) if len(corr) else 0.0
                allowance = 0.5 * float(np.max(np.abs(step))) if len(corr) else 0.0
                floor = 1e-4 * max(1.0, float(np.max(np.abs(corr))))
                ok = drift <= max(allowance, floor)
            if ok:
                x = corr
                s += ds
                ds = ds * 2.0
                continue
            ds *= 0.5
            if ds < 1e-8:
                return None, eps_a + s * seg
        return x, None

    x0 = np.array([to_complex(v) for v in start_roots.values], dtype=complex)
    spread = max([1.0] + [abs(z) for z in ztilde])
    x, stall = track_segment(eps_start, 1.0, x0)
    if x is not None:
        return BetheRoots(list(x), colours), None
    stall_eps = stall.real
    for delta in (0.15, -0.15, 0.4, -0.4):
        waypoints = [
            eps_start,
            0.9 * stall_eps,
            0.9 * stall_eps + 1j * delta,
            1.0 + 1j * delta,
            1.0,
        ]
        x = x0
        failed = False
        for a, b in zip(waypoints, waypoints[1:]):
            x, stall = track_segment(a, b, x)
            if x is None:
                failed = True
                break
        if not failed:
            return BetheRoots(list(x), colours), None
    return None, f"continuation stalled near eps={stall_eps:.3e} (detours exhausted)"


def chain_root_counts(ps: ParitySequence, chain_label) -> tuple:
    """Colour counts l_b determined by a chain of nested hooks."""
    steps = []
    prev = chain_label[0]
    for mu in chain_label[1:]:
        steps.append(box_step_index(ps, prev, mu))
        prev = mu
    l = [0] * ps.rank
    for a in steps:
        for b in range(1, a + 1):
            l[b - 1] += 1
    return tuple(l), steps


def homotopy_complete(
    ps: ParitySequence,
    N: int,
    z_target=None,
    seed: int = 0,
    eps0: float = 1e-2,
    tol: float = NEWTON_TOL,
    verify: bool = True,
    max_dim: int = 4096,
) -> SolutionSet:
    """One verified Bethe solution per chain of nested hooks on the N-th
    power of the defining representation.

    z_target may be omitted, in which case generic integer points are drawn
    from [1, 100] with the given seed (first site at 0).
    """
    if ps.dim ** N > max_dim:
        raise TooLarge(f"chain dimension {ps.dim ** N} exceeds cap {max_dim}")
    if z_target is None:
        import random

        rng = random.Random(seed)
        picks: list = [0]
        while len(picks) < N:
            c = rng.randint(1, 100)
            if c not in picks:
                picks.append(c)
        z_target = [Fraction(p) for p in picks]
    if len(z_target) != N:
        from .errors import DimensionMismatch

        raise DimensionMismatch(f"need {N} site points, got {len(z_target)}")

    zc_given = [to_complex(z) for z in z_target]
    # Internal tracking order: ascending |z_k - z_1|.  Powers of eps then keep
    # the site magnitudes nested, so no two sites collide along the real path;
    # all sites carry the same module, so the equations are order-blind.  The
    # anchor is translated to the origin while tracking (the equations are
    # translation-covariant) so clustered differences keep full precision.
    order = [0] + sorted(
        range(1, N), key=lambda k: (abs(zc_given[k] - zc_given[0]), k)
    )
    anchor = zc_given[0]
    zc = [zc_given[k] - anchor for k in order]
    ztilde = [zc[k] - zc[0] for k in range(N)]

    base = defining_module(ps)
    chain = ChainSpec(ps, [(z, base) for z in z_target])
    eps_schedule = _epsilon_schedule(eps0)
    out = SolutionSet(ps=ps, N=N, z=list(z_target), eps_schedule=eps_schedule)

    for label in pieri_chains(ps, N):
        l, steps = chain_root_counts(ps, label)
        if sum(l) == 0:
            roots = BetheRoots([], ())
            prob = BetheProblem(chain, l)
            report = verify_solution(prob, roots) if verify else None
            out.solutions.append(SolvedChain(label, roots, 0.0, report))
            continue

        # closed-form start data per step (site k = 2..N carries step k-2)
        taus = []
        for k, a in enumerate(steps, start=2):
            taus.append(
                [to_complex(v) for v in two_point_solve(label[k - 2], a, ps).values]
                if a
                else []
            )

        def start_values(eps: float):
            vals = []
            for colour in range(1, ps.rank + 1):
                for k, a in enumerate(steps, start=2):
                    if a >= colour:
                        vals.append(
                            zc[0]
                            + eps ** (N + 1 - k) * ztilde[k - 1] * taus[k - 2][colour - 1]
                        )
            return vals

        def problem_at(eps: float) -> BetheProblem:
            z_eps = [zc[0]] + [
                zc[0] + eps ** (N + 1 - k) * ztilde[k - 1] for k in range(2, N + 1)
            ]
            return BetheProblem.from_data(
                ps, [base.hw_weight] * N, z_eps, l
            )

        colours = canonical_colours(l)
        solved = None
        for shrink in range(4):
            e0 = eps0 / (4 ** shrink)
            result = newton(
                problem_at(e0), BetheRoots(start_values(e0), colours), tol=tol
            )
            if result.converged:
                solved = (e0, result.roots)
                break
        if solved is None:
            out.unresolved.append((label, "no convergence at start configuration"))
            continue

        eps_prev, start_roots = solved
        roots_cur, stall_reason = _track_path(
            ps, base, N, l, zc, ztilde, steps, eps_prev, start_roots, tol
        )
        if roots_cur is None:
            out.unresolved.append((label, stall_reason))
            continue

        prob = BetheProblem(chain, l)
        final = newton(
            prob,
            BetheRoots([v + anchor for v in roots_cur.values], roots_cur.colours),
            tol=tol,
        )
        if not final.converged:
            out.unresolved.append((label, f"final polish failed: {final.message}"))
            continue
        report = verify_solution(prob, final.roots) if verify else None
        out.solutions.append(
            SolvedChain(label, canonicalize(final.roots), final.residual_norm, report)
        )

    for i in range(len(out.solutions)):
        for j in range(i + 1, len(out.solutions)):
            a, b = out.solutions[i], out.solutions[j]
            if a.roots.colours == b.roots.colours and equivalent(a.roots, b.roots):
                out.duplicates.append((a.label, b.label))
    return out


def simple_spectrum_check(
    solutions, chain: ChainSpec, sep_tol: float = 1e-6, rank_tol: float = 1e-10
) -> bool:
    """True iff eigenvalue tuples are pairwise separated and the Bethe vectors
    have full rank (Gram determinant of the normalized vectors)."""
    reports = [s.report for s in solutions]
    if any(r is None for r in reports):
        raise ValueError("solutions must be verified before the spectrum check")
    tuples = [[to_complex(e) for e in r.eigenvalues] for r in reports]
    for i in range(len(tuples)):
        for j in range(i + 1, len(tuples)):
            sep = max(
                (abs(a - b) for a, b in zip(tuples[i], tuples[j])), default=0.0
            )
            if sep <= sep_tol:
                return False
    space = chain.space
    k = len(reports)
    if k == 0:
        return True
    gram = np.zeros((k, k), dtype=complex)
    norms = []
    for r in reports:
        norms.append(np.sqrt(abs(to_complex(space.pairing(r.vector, r.vector)))))
    for i in range(k):
        for j in range(k):
            gram[i, j] = to_complex(space.pairing(reports[i].vector, reports[j].vector))
            gram[i, j] /= norms[i] * norms[j]
    return abs(np.linalg.det(gram)) > rank_tol


# ---------------------------------------------------------------------------
# solve routing


@dataclass
class SolveOutcome:
    method: str
    l: tuple
    solutions: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    note: str = ""


def _is_defining(mod, ps) -> bool:
    from .superalg import Weight

    return mod.dim == ps.dim and mod.hw_weight == Weight.eps(1, ps.dim)


def solve_problem(
    chain: ChainSpec,
    l,
    *,
    seed: int = 0,
    tol: float = NEWTON_TOL,
    eps0: float = 1e-2,
    max_dim: int = 4096,
    c_param=Fraction(1),
) -> SolveOutcome:
    """Route an instance to the matching closed form, else to continuation.

    Closed forms: decoupled gl(1|1) chains, two-site box x hook chains with a
    single root ladder, and the one-point typical chain with both simple
    roots odd.  Chains of defining representations go through the scaling
    continuation; anything else is refused as unsupported.
    """
    from .bethe import (
        gl11_solve,
        gl11_solve_exact,
        gl21_one_point,
        map_two_point_roots,
    )
    from .errors import UnsupportedInstance
    from .reps import hook_to_weight

    ps = chain.ps
    l = tuple(int(x) for x in l)
    if chain.space.dim > max_dim:
        raise TooLarge(f"chain dimension {chain.space.dim} exceeds cap {max_dim}")

    # decoupled gl(1|1) chains
    if ps.dim == 2:
        import itertools

        count = l[0]
        h = [m.hw_weight.component(1) + m.hw_weight.component(2) for m in chain.modules]
        roots = gl11_solve_exact(h, chain.z) if chain.exact else None
        if roots is None:
            roots = gl11_solve(h, chain.z).roots
        out = SolveOutcome(method="gl11_closed", l=l)
        if count > len(roots):
            out.note = f"only {len(roots)} decoupled roots exist; no solutions"
            return out
        prob = BetheProblem(chain, l)
        for subset in itertools.combinations(range(len(roots)), count):
            chosen = BetheRoots([roots[i] for i in subset], (1,) * count)
            report = verify_solution(prob, chosen)
            out.solutions.append(
                SolvedChain(("roots",) + subset, chosen, report.residual_norm, report)
            )
        return out

    # one-point typical gl(2|1)-style chain, both simple roots odd
    if (
        chain.N == 1
        and ps.rank == 2
        and ps.simple_root_parity(1) == 1
        and ps.simple_root_parity(2) == 1
    ):
        lam = chain.modules[0].hw_weight
        r1 = lam.component(1) + lam.component(2)
        r2 = lam.component(2) + lam.component(3)
        if r1.denominator == 1 and r2.denominator == 1 and r1 > r2 > 0:
            out = SolveOutcome(method="gl21_one_point", l=l)
            fams = gl21_one_point(int(r1), int(r2), l[0], l[1], c_param=c_param)
            prob = BetheProblem(chain, l)
            for fam in fams:
                chosen = fam.roots()
                report = verify_solution(prob, chosen)
                out.solutions.append(
                    SolvedChain(
                        ("one_point", str(fam.c_param)),
                        chosen,
                        report.residual_norm,
                        report,
                    )
                )
            if not fams:
                out.note = "no admissible solutions for these root counts"
            return out

    # two-site box (x) hook with one root per colour 1..a
    if chain.N == 2:
        flags = [_is_defining(m, ps) for m in chain.modules]
        if any(flags) and not all(flags):
            box_site = flags.index(True)
            v_site = 1 - box_site
            mu = getattr(chain.modules[v_site], "hook", None)
            a = sum(1 for x in l if x == 1)
            ladder = tuple(1 if b < a else 0 for b in range(ps.rank))
            if mu is not None and l == ladder:
                out = SolveOutcome(method="two_point_closed", l=l)
                lam = hook_to_weight(ps, mu)
                if a > 0 and not box_addable(lam, a, ps):
                    out.note = f"component a={a} not Pieri-admissible; no solutions"
                    return out
                base = two_point_solve(mu, a, ps)
                roots = map_two_point_roots(
                    base, chain.z[box_site], chain.z[v_site]
                )
                prob = BetheProblem(chain, l)
                report = verify_solution(prob, roots)
                out.solutions.append(
                    SolvedChain(("two_point", a), roots, report.residual_norm, report)
                )
                return out

    # chains of defining representations: continuation over all chains
    if all(_is_defining(m, ps) for m in chain.modules):
        full = homotopy_complete(
            ps, chain.N, chain.z, seed=seed, eps0=eps0, tol=tol, max_dim=max_dim
        )
        out = SolveOutcome(method="homotopy", l=l)
        out.unresolved = full.unresolved
        for sol in full.solutions:
            if tuple(chain_root_counts(ps, sol.label)[0]) == l:
                out.solutions.append(sol)
        return out

    # arbitrary chain, no roots: the trivial solution
    if sum(l) == 0:
        out = SolveOutcome(method="trivial", l=l)
        roots = BetheRoots([], ())
        prob = BetheProblem(chain, l)
        report = verify_solution(prob, roots)
        out.solutions.append(SolvedChain(("trivial",), roots, 0.0, report))
        return out

    # arbitrary chain, single root: the equation is one rational function
    if sum(l) == 1:
        return _solve_single_root(chain, l, tol)

    raise UnsupportedInstance(
        "no closed form or continuation route matches this chain; "
        "supported: gl(1|1) chains, one-point typical rank-2 odd-odd chains, "
        "two-site box x hook ladders, chains of defining representations, "
        "and arbitrary chains with at most one root"
    )


def _solve_single_root(chain: ChainSpec, l, tol: float) -> SolveOutcome:
    """All solutions when one Bethe root is sought: the single equation
    -sum_s (alpha_c, lam^(s)) / (t - z_s) = 0 clears to a polynomial of degree
    at most N-1; a nonzero constant numerator proves there is no solution."""
    prob = BetheProblem(chain, l)
    coeffs = [prob.pairing_rs(0, s) for s in range(chain.N)]
    # numerator of sum_s c_s / (t - z_s), descending powers
    poly = [0] * chain.N
    for s in range(chain.N):
        term = [1]
        for s2 in range(chain.N):
            if s2 != s:
                nxt = list(term) + [0]
                for i in range(len(term)):
                    nxt[i + 1] = nxt[i + 1] - term[i] * chain.z[s2]
                term = nxt
        for i, c in enumerate(term):
            poly[i + chain.N - len(term)] = poly[i + chain.N - len(term)] + coeffs[s] * c
    out = SolveOutcome(method="single_root_rational", l=l)
    nonzero = [i for i, c in enumerate(poly) if to_complex(c) != 0]
    if not nonzero:
        out.note = "equation is identically zero; every pole-free point solves it"
        return out
    if nonzero[-1] == len(poly) - 1 and len(nonzero) == 1:
        out.note = "numerator is a nonzero constant; the equation has no finite zero"
        return out
    lead = nonzero[0]
    reduced = [to_complex(c) for c in poly[lead:]]
    roots = np.roots(reduced) if len(reduced) > 1 else []
    for value in sorted(roots, key=lambda v: (v.real, v.imag)):
        candidate = BetheRoots([complex(value)], prob.colours)
        polish = newton(prob, candidate, tol=tol)
        if not polish.converged:
            continue
        report = verify_solution(prob, polish.roots)
        out.solutions.append(
            SolvedChain(("rational_zero",), polish.roots, report.residual_norm, report)
        )
    if not out.solutions:
        out.note = out.note or "no pole-free zeros of the rational equation"
    return out
