"""Acceptance suite: one test per criterion, each printing a PASS line with
the measured quantities when it completes.

Run with `pytest -v -s tests/test_acceptance.py` to see the per-criterion
lines; every tolerance is pinned in the assertions below.
"""

import itertools
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from supergaudin import (
    ParitySequence,
    Weight,
    box_addable,
    cartan_matrix,
    distinguished_parities,
    hook_to_weight,
    pieri,
    singular_vectors,
)
from supergaudin.bethe import (
    BetheProblem,
    BetheRoots,
    bae_jacobian,
    bae_residual,
    canonical_colours,
    eigenvalues_vector_rep,
    gl11_log_master_hessian_det,
    gl11_norm_factors,
    gl11_solve,
    gl11_solve_exact,
    gl21_bethe_vector_ratio,
    gl21_one_point,
    gl21_weight_closed,
    two_point_solve,
    weight_function,
)
from supergaudin.errors import NoSuchComponent, PoleCollision
from supergaudin.gaudin import ChainSpec, brute_spectrum, hamiltonian, verify_hamiltonians
from supergaudin.linalg import SpanBasis, vec_add, vec_scale
from supergaudin.reps import (
    defining_module,
    dual_module,
    gl11_module,
    realize_module,
)
from supergaudin.scalars import SqrtExt, to_complex
from supergaudin.solver import (
    homotopy_complete,
    simple_spectrum_check,
    verify_solution,
)

GL43_MATRICES = {
    (0, 0, 0, 0, 1, 1, 1): (
        (2, -1, 0, 0, 0, 0),
        (-1, 2, -1, 0, 0, 0),
        (0, -1, 2, -1, 0, 0),
        (0, 0, -1, 0, -1, 0),
        (0, 0, 0, 1, 2, -1),
        (0, 0, 0, 0, -1, 2),
    ),
    (0, 0, 1, 1, 1, 0, 0): (
        (2, -1, 0, 0, 0, 0),
        (-1, 0, -1, 0, 0, 0),
        (0, 1, 2, -1, 0, 0),
        (0, 0, -1, 2, -1, 0),
        (0, 0, 0, -1, 0, -1),
        (0, 0, 0, 0, 1, 2),
    ),
    (0, 1, 0, 1, 0, 1, 0): (
        (0, -1, 0, 0, 0, 0),
        (1, 0, -1, 0, 0, 0),
        (0, 1, 0, -1, 0, 0),
        (0, 0, 1, 0, -1, 0),
        (0, 0, 0, 1, 0, -1),
        (0, 0, 0, 0, 1, 0),
    ),
}


def report(num, text):
    print(f"ACCEPTANCE {num:02d} PASS: {text}")


def _hooks_up_to(m, n, boxes):
    out, frontier = [], [()]
    for _ in range(boxes):
        frontier = sorted({rho for mu in frontier for rho in pieri(mu, m, n)})
        out.extend(frontier)
    return sorted(set(out))


def test_criterion_01_cartan_data():
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        results = {p: cartan_matrix(ParitySequence(p)).cartan for p in GL43_MATRICES}
        sym21 = cartan_matrix(ParitySequence((0, 1, 0))).symmetrized
        best = min(best, time.perf_counter() - t0)
    for parities, expected in GL43_MATRICES.items():
        assert results[parities] == expected
    assert sym21 == ((0, 1), (1, 0))
    assert best < 1e-3
    report(1, f"three gl(4|3) Cartan matrices and gl(2|1) symmetrized exact ({best*1e6:.0f} us)")


def test_criterion_02_hook_weights():
    mu = (7, 6, 4, 4, 3, 3, 1, 1, 1)
    expected = {
        (0, 0, 0, 0, 1, 1, 1): (7, 6, 4, 4, 5, 2, 2),
        (0, 0, 1, 1, 1, 0, 0): (7, 6, 7, 4, 4, 1, 1),
        (0, 1, 0, 1, 0, 1, 0): (7, 8, 5, 4, 2, 3, 1),
    }
    for parities, coords in expected.items():
        assert hook_to_weight(ParitySequence(parities), mu) == Weight(coords)
    report(2, "all three highest-weight vectors of the 30-box hook exact")


def test_criterion_03_algebra_relations():
    checked = 0
    for parities, boxes in [((0, 1), 4), ((0, 1, 0), 4), ((0, 0, 1), 4), ((0, 1, 1), 4)]:
        ps = ParitySequence(parities)
        for mu in _hooks_up_to(ps.m, ps.n, boxes):
            mod = realize_module(mu, ps)
            assert mod.supercommutator_table_errors() == [], (parities, mu)
            checked += 1
    report(3, f"defining supercommutation relations exact on {checked} realized modules")


def test_criterion_04_proposition_parts():
    t0 = time.perf_counter()
    ps21 = ParitySequence((0, 1, 0))
    box = defining_module(ps21)
    chain = ChainSpec(ps21, [(Fraction(0), box), (Fraction(1), box), (Fraction(2), box)])
    rep = verify_hamiltonians(chain)
    assert rep.all_ok, rep.counterexample

    ps11 = distinguished_parities(1, 1)
    mods = [gl11_module(1, 0), gl11_module(2, 1), gl11_module(1, 1)]
    chain11 = ChainSpec(ps11, list(zip([Fraction(0), Fraction(1), Fraction(3)], mods)))
    rep11 = verify_hamiltonians(chain11)
    assert rep11.all_ok, rep11.counterexample
    elapsed = time.perf_counter() - t0
    assert elapsed < 30
    report(4, f"all four Hamiltonian properties exact on both chains ({elapsed:.1f} s)")


def test_criterion_05_closed_forms():
    rng = random.Random(20260809)
    ps = ParitySequence((0, 1, 0))
    mod21 = realize_module((2, 1), ps)
    mod32 = realize_module((3, 2), ps)

    def f_word(mod, word):
        v = mod.hw_vector
        for c in reversed(word):
            v = mod.lowering[c].apply(v)
        return v

    # Example expressions for two sites, l = (1,1) and l = (0,2)
    chain = ChainSpec(ps, [(Fraction(3), mod21), (Fraction(1), mod21)])
    sp = chain.space
    mA, mB = chain.modules
    z1, z2 = chain.z
    checked_11 = checked_02 = 0
    while checked_11 < 20:
        t1, t2 = (Fraction(x) for x in rng.sample(range(5, 200), 2))
        prob = BetheProblem(chain, (1, 1))
        w = weight_function(prob, BetheRoots([t1, t2], (1, 2)))
        terms = [
            (sp.pure_tensor([f_word(mA, (1, 2)), mB.hw_vector]), Fraction(1) / ((t1 - t2) * (t2 - z1))),
            (sp.pure_tensor([f_word(mA, (2, 1)), mB.hw_vector]), -Fraction(1) / ((t2 - t1) * (t1 - z1))),
            (sp.pure_tensor([f_word(mA, (1,)), f_word(mB, (2,))]), Fraction(1) / ((t1 - z1) * (t2 - z2))),
            (sp.pure_tensor([f_word(mA, (2,)), f_word(mB, (1,))]), -Fraction(1) / ((t2 - z1) * (t1 - z2))),
            (sp.pure_tensor([mA.hw_vector, f_word(mB, (1, 2))]), Fraction(1) / ((t1 - t2) * (t2 - z2))),
            (sp.pure_tensor([mA.hw_vector, f_word(mB, (2, 1))]), -Fraction(1) / ((t2 - t1) * (t1 - z2))),
        ]
        expected = {}
        for vec, c in terms:
            expected = vec_add(expected, vec_scale(vec, c))
        assert w == expected
        checked_11 += 1
    while checked_02 < 20:
        t1, t2 = (Fraction(x) for x in rng.sample(range(5, 200), 2))
        prob = BetheProblem(chain, (0, 2))
        w = weight_function(prob, BetheRoots([t1, t2], (2, 2)))
        coeff = -((t1 - t2) * (z1 - z2)) / ((t1 - z1) * (t1 - z2) * (t2 - z1) * (t2 - z2))
        expected = vec_scale(sp.pure_tensor([f_word(mA, (2,)), f_word(mB, (2,))]), coeff)
        assert w == expected
        checked_02 += 1

    # one-point closed forms, balanced and unbalanced branches
    cases = [(1, 1, mod21), (2, 2, mod32), (1, 0, mod21), (2, 1, mod32), (1, 2, mod32)]
    counts = {}
    for l1, l2, mod in cases:
        done = 0
        while done < 20:
            z = Fraction(rng.randint(2, 9))
            one = ChainSpec(ps, [(z, mod)])
            prob = BetheProblem(one, (l1, l2))
            draw = rng.sample(range(10, 500), l1 + l2)
            ts = [Fraction(x) for x in draw[:l1]]
            ss = [Fraction(x) for x in draw[l1:]]
            w = weight_function(prob, BetheRoots(ts + ss, tuple([1] * l1 + [2] * l2)))
            closed = gl21_weight_closed(z, ts, ss).vector(one)
            assert w == closed and w, (l1, l2)
            done += 1
        counts[(l1, l2)] = done
    # vanishing branch
    assert gl21_weight_closed(Fraction(0), [Fraction(3), Fraction(5)], []).is_zero
    report(5, "evaluator equals every closed form at 20 exact rational points per case")


@pytest.fixture(scope="module")
def completeness_runs():
    ps21 = ParitySequence((0, 1, 0))
    ps11 = distinguished_parities(1, 1)
    runs = {}
    t0 = time.perf_counter()
    runs["gl11_3"] = homotopy_complete(ps11, 3, [Fraction(0), Fraction(1), Fraction(3)])
    runs["gl11_4"] = homotopy_complete(ps11, 4, [Fraction(0), Fraction(1), Fraction(3), Fraction(7)])
    runs["gl21_2"] = homotopy_complete(ps21, 2, [Fraction(1), Fraction(0)])
    runs["gl21_3"] = homotopy_complete(ps21, 3, None, seed=1)
    runs["gl21_4"] = homotopy_complete(ps21, 4, [Fraction(0), Fraction(1), Fraction(3), Fraction(7)])
    runs["elapsed"] = time.perf_counter() - t0
    return runs


def _eigen_multiset_match(solutions, chain, tol=1e-7):
    recs = brute_spectrum(chain)
    if len(recs) != len(solutions):
        return False
    key = lambda t: [(c.real, c.imag) for c in t]
    ours = sorted(
        ([complex(to_complex(e)) for e in s.report.eigenvalues] for s in solutions),
        key=key,
    )
    brute = sorted(([complex(e) for e in r.eigenvalues] for r in recs), key=key)
    return all(
        max((abs(x - y) for x, y in zip(a, b)), default=0.0) <= tol
        for a, b in zip(ours, brute)
    )


def test_criterion_06_singularity_and_eigenvalues(completeness_runs):
    ps21 = ParitySequence((0, 1, 0))
    box = defining_module(ps21)
    total = 0
    for tag in ("gl21_2", "gl21_3", "gl21_4"):
        run = completeness_runs[tag]
        assert not run.unresolved
        chain = ChainSpec(ps21, [(z, box) for z in run.z])
        for sol in run.solutions:
            rep = sol.report
            assert not rep.zero_vector
            assert rep.singular_ok and rep.singular_residual <= 1e-8
            assert rep.eigen_ok and rep.eigen_residual <= 1e-8
            l, _ = __import__("supergaudin.solver", fromlist=["chain_root_counts"]).chain_root_counts(ps21, sol.label)
            prob = BetheProblem(chain, l)
            formula = eigenvalues_vector_rep(prob, sol.roots)
            assert max(
                abs(to_complex(a) - to_complex(b))
                for a, b in zip(formula, rep.eigenvalues)
            ) <= 1e-10
            total += 1
        assert _eigen_multiset_match(run.solutions, chain)
    report(6, f"singularity/eigen residuals <= 1e-8 and eigenvalue formulas confirmed on {total} solutions, N <= 4")


def test_criterion_07_two_point_completeness():
    checked_hooks = 0
    for parities in [(0, 1, 0), (0, 0, 1), (0, 1, 1)]:
        ps = ParitySequence(parities)
        box = defining_module(ps)
        for mu in _hooks_up_to(ps.m, ps.n, 4):
            V = realize_module(mu, ps)
            chain = ChainSpec(ps, [(Fraction(1), box), (Fraction(0), V)])
            lam = hook_to_weight(ps, mu)
            summands = pieri(mu, ps.m, ps.n)
            eigs = []
            solved = 0
            for a in range(0, ps.dim):
                admissible = a <= ps.rank and box_addable(lam, a, ps)
                if not admissible:
                    if a <= ps.rank and a > 0:
                        with pytest.raises(NoSuchComponent):
                            two_point_solve(mu, a, ps)
                    continue
                roots = two_point_solve(mu, a, ps)
                l = [0] * ps.rank
                for c in roots.colours:
                    l[c - 1] += 1
                prob = BetheProblem(chain, tuple(l))
                res = bae_residual(prob, roots)
                assert all(r == 0 for r in res)
                rep = verify_solution(prob, roots)
                assert rep.all_ok
                eigs.append(to_complex(rep.eigenvalues[0]))
                solved += 1
            assert solved == len(summands), (parities, mu)
            for i in range(len(eigs)):
                for j in range(i + 1, len(eigs)):
                    assert abs(eigs[i] - eigs[j]) > 1e-6
            checked_hooks += 1
    report(7, f"closed two-point ladders complete with separated spectra on {checked_hooks} hook products")


def test_criterion_08_completeness(completeness_runs):
    ps21 = ParitySequence((0, 1, 0))
    ps11 = distinguished_parities(1, 1)
    box21 = defining_module(ps21)
    box11 = defining_module(ps11)
    for tag, ps, box, expected in [
        ("gl11_3", ps11, box11, 4),
        ("gl11_4", ps11, box11, 8),
    ]:
        run = completeness_runs[tag]
        assert len(run.solutions) == expected == 2 ** (run.N - 1)
        assert not run.unresolved and not run.duplicates
        chain = ChainSpec(ps, [(z, box) for z in run.z])
        assert simple_spectrum_check(run.solutions, chain)
        assert _eigen_multiset_match(run.solutions, chain)

    run = completeness_runs["gl21_3"]
    chain = ChainSpec(ps21, [(z, box21) for z in run.z])
    space = chain.space
    sing_dim = sum(len(singular_vectors(space, w)) for w in space.weight_spaces())
    assert len(run.solutions) == sing_dim
    assert not run.unresolved and not run.duplicates
    assert all(s.report.all_ok for s in run.solutions)
    assert simple_spectrum_check(run.solutions, chain)
    assert _eigen_multiset_match(run.solutions, chain)
    assert completeness_runs["elapsed"] < 300
    report(
        8,
        f"2^(N-1) Bethe bases for gl(1|1), and {sing_dim}/{sing_dim} strata for gl(2|1) N=3 "
        f"with simple joint spectrum ({completeness_runs['elapsed']:.1f} s)",
    )


def test_criterion_09_norms():
    ps = distinguished_parities(1, 1)
    # two sites: rational root
    mods2 = [gl11_module(1, 0), gl11_module(1, 0)]
    z2 = [Fraction(1), Fraction(0)]
    chain2 = ChainSpec(ps, list(zip(z2, mods2)))
    h2 = [Fraction(1), Fraction(1)]
    roots2 = gl11_solve_exact(h2, z2)
    assert roots2 == [Fraction(1, 2)]
    prob2 = BetheProblem(chain2, (1,))
    w2 = weight_function(prob2, BetheRoots(roots2, (1,)))
    norm2 = chain2.space.pairing(w2, w2)
    assert norm2 == gl11_norm_factors(h2, z2, roots2)[0] == 8
    assert norm2 == gl11_log_master_hessian_det(h2, z2, roots2)

    # three sites: quadratic-field roots, exact equality
    mods3 = [gl11_module(1, 0)] * 3
    z3 = [Fraction(0), Fraction(1), Fraction(2)]
    h3 = [Fraction(1)] * 3
    chain3 = ChainSpec(ps, list(zip(z3, mods3)))
    roots3 = gl11_solve_exact(h3, z3)
    assert isinstance(roots3[0], SqrtExt)
    for l in range(3):
        for subset in itertools.combinations(roots3, l):
            prob = BetheProblem(chain3, (l,))
            w = weight_function(prob, BetheRoots(list(subset), (1,) * l))
            norm = chain3.space.pairing(w, w)
            product = Fraction(1)
            for f in gl11_norm_factors(h3, z3, list(subset)):
                product = product * f
            assert norm == product
            assert norm == gl11_log_master_hessian_det(h3, z3, list(subset))

    # four sites: cubic roots, 1e-9 relative
    mods4 = [gl11_module(1, 0)] * 4
    z4 = [0.0, 1.0, 3.0, 7.0]
    h4 = [1.0] * 4
    chain4 = ChainSpec(ps, list(zip(z4, mods4)))
    roots4 = gl11_solve(h4, z4).roots
    prob4 = BetheProblem(chain4, (2,))
    pair = roots4[:2]
    w4 = weight_function(prob4, BetheRoots(pair, (1, 1)))
    norm4 = to_complex(chain4.space.pairing(w4, w4))
    expect4 = np.prod([complex(x) for x in gl11_norm_factors(h4, z4, pair)])
    assert abs(norm4 - expect4) <= 1e-9 * abs(expect4)
    hess4 = complex(gl11_log_master_hessian_det(h4, z4, pair))
    assert abs(norm4 - hess4) <= 1e-9 * abs(hess4)
    report(9, "Shapovalov norms equal the closed product and the log-master Hessian (exact for degree <= 2)")


def test_criterion_10_nonsemisimple_pathology():
    ps = ParitySequence((0, 1, 0))
    box = defining_module(ps)
    dual = dual_module(realize_module((1, 1), ps))
    assert dual.hw_weight == Weight((0, -1, -1))
    chain = ChainSpec(ps, [(Fraction(1), box), (Fraction(0), dual)])
    assert chain.space.dim == 12

    # the single colour-1 equation has a constant, nonzero numerator
    prob = BetheProblem(chain, (1, 0))
    a = prob.pairing_rs(0, 0)
    b = prob.pairing_rs(0, 1)
    lead, const = -(a + b), a * chain.z[1] + b * chain.z[0]
    assert lead == 0 and const != 0

    h1 = hamiltonian(chain, 1)
    space = chain.space
    vw = space.hw_tensor()
    u = vec_add(space.site_gen(1, 2, 1).apply(vw), space.site_gen(2, 2, 1).apply(vw))
    y = space.site_gen(1, 2, 1).apply(vw)
    sb = SpanBasis()
    sb.add(u)
    sb.add(y)
    assert sb.coordinates(h1.apply(u)) == [0, 0]
    assert sb.coordinates(h1.apply(y)) == [1, 0]

    assert (h1 @ h1).is_zero()
    report(10, "no finite BAE zero; H_1 = [[0,1],[0,0]] on (u,y); H_1 nilpotent on all 12 dimensions")


def test_criterion_11_one_point_families():
    for r1, r2 in [(2, 1), (3, 1), (3, 2)]:
        gap = r1 - r2
        for l1 in range(0, 4):
            for l2 in range(0, 4):
                fams = gl21_one_point(r1, r2, l1, l2)
                expect = l1 == l2 and l1 in (0, gap)
                assert bool(fams) == expect, (r1, r2, l1, l2)
        fam = gl21_one_point(r1, r2, gap, gap)[0]
        assert fam.exact
        ca, cb = gl21_bethe_vector_ratio(fam)
        assert ca * r2 - cb * r1 == 0
        # scaled family member stays a solution; rational scaling exact
        # (for gap 2 pick c with one radicand square so one quadratic field suffices)
        c_exact = Fraction(5, 3) if gap == 1 else Fraction(3)
        fam2 = gl21_one_point(r1, r2, gap, gap, c_param=c_exact)[0]
        assert fam2.exact
        ca2, cb2 = gl21_bethe_vector_ratio(fam2)
        assert ca2 * r2 - cb2 * r1 == 0
        # float parameter: collinearity to 1e-10
        fam3 = gl21_one_point(r1, r2, gap, gap, c_param=0.7)[0]
        ca3, cb3 = (to_complex(x) for x in gl21_bethe_vector_ratio(fam3))
        scale = max(1.0, abs(ca3), abs(cb3))
        assert abs(ca3 * r2 - cb3 * r1) <= 1e-10 * scale
    report(11, "one-point families exist exactly for l1 = l2 in {0, r1-r2} with exact residual and collinear vectors")


def test_criterion_12_jacobian_vs_finite_differences():
    rng = random.Random(77)
    ps21 = ParitySequence((0, 1, 0))
    ps11 = distinguished_parities(1, 1)
    box = defining_module(ps21)
    instances = [
        (BetheProblem(ChainSpec(ps21, [(0.0, box), (1.0, box), (3.0, box)]), (2, 1))),
        (
            BetheProblem(
                ChainSpec(
                    ps11,
                    list(
                        zip(
                            [0.0, 1.0, 3.0],
                            [gl11_module(1, 0), gl11_module(2, 1), gl11_module(1, 1)],
                        )
                    ),
                ),
                (2,),
            )
        ),
    ]
    for prob in instances:
        colours = canonical_colours(prob.l)
        checked = 0
        while checked < 100:
            vals = [complex(rng.uniform(4, 9), rng.uniform(-2, 2)) for _ in colours]
            try:
                jac = np.array(
                    [
                        [to_complex(v) for v in row]
                        for row in bae_jacobian(prob, BetheRoots(vals, colours))
                    ]
                )
                h = 1e-6
                fd = np.zeros_like(jac)
                for j in range(len(vals)):
                    up = list(vals)
                    dn = list(vals)
                    up[j] += h
                    dn[j] -= h
                    ru = bae_residual(prob, BetheRoots(up, colours))
                    rd = bae_residual(prob, BetheRoots(dn, colours))
                    fd[:, j] = (
                        np.array([to_complex(x) for x in ru])
                        - np.array([to_complex(x) for x in rd])
                    ) / (2 * h)
            except PoleCollision:
                continue
            scale = max(1.0, float(np.max(np.abs(jac))))
            assert np.max(np.abs(jac - fd)) <= 1e-6 * scale
            checked += 1
    report(12, "analytic Jacobian matches central differences to 1e-6 on 100 points per instance")
