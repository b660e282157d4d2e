from fractions import Fraction

import pytest

from supergaudin.bethe import BetheProblem, BetheRoots, two_point_solve
from supergaudin import ParitySequence
from supergaudin.errors import TooLarge, UnsupportedInstance
from supergaudin.gaudin import ChainSpec, brute_spectrum
from supergaudin.reps import defining_module, dual_module, gl11_module
from supergaudin.scalars import to_complex
from supergaudin.solver import (
    homotopy_complete,
    newton,
    simple_spectrum_check,
    solve_problem,
    verify_solution,
)


def test_newton_already_solved(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), box21)])
    prob = BetheProblem(chain, (1, 0))
    start = two_point_solve((1,), 1, ps21)
    res = newton(prob, start)
    assert res.converged and res.iterations == 0


def test_newton_converges_to_midpoint(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), box21)])
    prob = BetheProblem(chain, (1, 0))
    res = newton(prob, BetheRoots([0.4], (1,)))
    assert res.converged
    assert abs(to_complex(res.roots.values[0]) - 0.5) < 1e-13


def test_newton_start_on_pole(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), box21)])
    prob = BetheProblem(chain, (1, 0))
    res = newton(prob, BetheRoots([1.0], (1,)))
    assert not res.converged and "pole" in res.message


def test_verify_solution_two_point(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), box21)])
    prob = BetheProblem(chain, (1, 0))
    rep = verify_solution(prob, BetheRoots([Fraction(1, 2)], (1,)))
    assert rep.all_ok
    assert rep.eigenvalues == (-1, 1)
    assert rep.residual_norm == 0


def test_verify_trivial_solution_eigenvalues(ps21, box21):
    z = [Fraction(0), Fraction(1), Fraction(3)]
    chain = ChainSpec(ps21, [(zz, box21) for zz in z])
    prob = BetheProblem(chain, (0, 0))
    rep = verify_solution(prob, BetheRoots([], ()))
    assert rep.all_ok
    for i in range(3):
        expect = sum(Fraction(1) / (z[i] - z[j]) for j in range(3) if j != i)
        assert rep.eigenvalues[i] == expect


def test_homotopy_gl11_counts(ps11):
    out = homotopy_complete(ps11, 3, [Fraction(0), Fraction(1), Fraction(3)])
    assert len(out.solutions) == 4
    assert not out.unresolved and not out.duplicates
    assert all(s.report.all_ok for s in out.solutions)


def test_homotopy_matches_brute_and_simple(ps21, box21):
    z = [Fraction(0), Fraction(1), Fraction(3)]
    out = homotopy_complete(ps21, 3, z)
    chain = ChainSpec(ps21, [(zz, box21) for zz in z])
    recs = brute_spectrum(chain)
    assert len(out.solutions) == len(recs) == 4
    key = lambda t: [(c.real, c.imag) for c in t]
    ours = sorted(
        ([complex(to_complex(e)) for e in s.report.eigenvalues] for s in out.solutions),
        key=key,
    )
    brute = sorted(([complex(e) for e in r.eigenvalues] for r in recs), key=key)
    for a, b in zip(ours, brute):
        assert max(abs(x - y) for x, y in zip(a, b)) < 1e-7
    assert simple_spectrum_check(out.solutions, chain)


def test_homotopy_deterministic(ps11):
    a = homotopy_complete(ps11, 4, None, seed=42)
    b = homotopy_complete(ps11, 4, None, seed=42)
    assert a.z == b.z
    assert [str(s.roots.values) for s in a.solutions] == [
        str(s.roots.values) for s in b.solutions
    ]


def test_homotopy_dimension_cap(ps21):
    with pytest.raises(TooLarge):
        homotopy_complete(ps21, 9, None, max_dim=4096)


def test_solve_routing_gl11(ps11):
    mods = [gl11_module(1, 0), gl11_module(2, 1), gl11_module(1, 1)]
    chain = ChainSpec(ps11, list(zip([Fraction(0), Fraction(1), Fraction(3)], mods)))
    out = solve_problem(chain, (1,))
    assert out.method == "gl11_closed"
    assert len(out.solutions) == 2
    assert all(s.report.all_ok for s in out.solutions)


def test_solve_routing_two_point(ps21, box21, module_cache):
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), module_cache((2,), ps21))])
    out = solve_problem(chain, (1, 0))
    assert out.method == "two_point_closed"
    assert out.solutions[0].roots.values == [Fraction(2, 3)]
    assert out.solutions[0].report.all_ok


def test_solve_routing_two_point_inadmissible(ps21, box21, module_cache):
    # no hook extension of (1,1) has weight lam + eps_3, so a=2 is inadmissible
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), module_cache((1, 1), ps21))])
    out = solve_problem(chain, (1, 1))
    assert out.method == "two_point_closed"
    assert out.solutions == [] and "not Pieri-admissible" in out.note


def test_solve_routing_one_point(ps21, module_cache):
    chain = ChainSpec(ps21, [(Fraction(0), module_cache((2, 1), ps21))])
    out = solve_problem(chain, (2, 2))
    assert out.method == "gl21_one_point"
    assert len(out.solutions) == 1
    rep = out.solutions[0].report
    assert rep.residual_norm == 0
    assert rep.zero_vector  # Verma singular vector dies in the typical quotient


def test_solve_routing_homotopy(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(0), box21), (Fraction(1), box21), (Fraction(3), box21)])
    out = solve_problem(chain, (1, 0))
    assert out.method == "homotopy"
    assert len(out.solutions) == 2
    assert all(s.report.all_ok for s in out.solutions)


def test_solve_routing_unsupported(ps21, box21, module_cache):
    # mixed multi-site chain with several roots: no route covers it
    V = module_cache((2, 1), ps21)
    chain = ChainSpec(
        ps21, [(Fraction(0), V), (Fraction(1), V), (Fraction(3), box21)]
    )
    with pytest.raises(UnsupportedInstance):
        solve_problem(chain, (1, 1))


def test_solve_single_root_on_three_site_mixed_chain(ps21, box21, module_cache):
    V = module_cache((2, 1), ps21)
    chain = ChainSpec(
        ps21, [(Fraction(0), V), (Fraction(1), V), (Fraction(3), box21)]
    )
    out = solve_problem(chain, (1, 0))
    assert out.method == "single_root_rational"
    assert out.solutions
    for sol in out.solutions:
        assert sol.report.residual_norm <= 1e-9
        assert sol.report.singular_ok and sol.report.eigen_ok


def test_nonsemisimple_chain_no_solution(ps21, box21, module_cache):
    # the l=(1,0) equations on box x dual(V(1,1)) have constant nonzero numerator
    dual = dual_module(module_cache((1, 1), ps21))
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), dual)])
    prob = BetheProblem(chain, (1, 0))
    a = prob.pairing_rs(0, 0)
    b = prob.pairing_rs(0, 1)
    # residual = -a/(t-z1) - b/(t-z2); numerator -a(t-z2) - b(t-z1)
    lead = -(a + b)
    const = a * chain.z[1] + b * chain.z[0]
    assert lead == 0 and const != 0


def test_homotopy_gl12(ps12):
    out = homotopy_complete(ps12, 3, [Fraction(0), Fraction(1), Fraction(3)])
    assert len(out.solutions) == 4
    assert not out.unresolved and not out.duplicates
    assert all(s.report.all_ok for s in out.solutions)


def test_homotopy_gl12_four_sites(ps12):
    out = homotopy_complete(ps12, 4, [Fraction(0), Fraction(1), Fraction(3), Fraction(7)])
    assert len(out.solutions) == 10
    assert not out.unresolved and not out.duplicates
    assert all(s.report.all_ok for s in out.solutions)


def test_homotopy_pure_even_gl2():
    # classical gl(2) chains work through the same machinery; N=3 is plain
    ps = ParitySequence((0, 0))
    out = homotopy_complete(ps, 3, [Fraction(0), Fraction(1), Fraction(3)])
    assert len(out.solutions) == 3
    assert not out.unresolved and all(s.report.all_ok for s in out.solutions)


def test_homotopy_pure_even_branch_point_detour():
    # at z=(0,1,3,7) one chain's two roots collide on the real path and
    # continue as a complex-conjugate pair; the tracker must reroute through
    # complex eps and the resulting pair is a genuine second eigenvector
    ps = ParitySequence((0, 0))
    box = defining_module(ps)
    z = [Fraction(0), Fraction(1), Fraction(3), Fraction(7)]
    out = homotopy_complete(ps, 4, z)
    assert len(out.solutions) == 6
    assert not out.unresolved and not out.duplicates
    assert all(s.report.all_ok for s in out.solutions)
    complex_pairs = [
        s
        for s in out.solutions
        if any(abs(to_complex(v).imag) > 1e-6 for v in s.roots.values)
    ]
    assert complex_pairs, "expected a complex-conjugate root pair"
    chain = ChainSpec(ps, [(zz, box) for zz in z])
    recs = brute_spectrum(chain)
    assert len(recs) == 6


def test_newton_rejects_runaway_iterates(ps21):
    box = defining_module(ps21)
    chain = ChainSpec(ps21, [(Fraction(1), box), (Fraction(0), box)])
    prob = BetheProblem(chain, (1, 0))
    res = newton(prob, BetheRoots([1e12 + 0j], (1,)))
    assert not res.converged and "diverged" in res.message


def test_solve_nonsemisimple_chain_reports_empty(ps21, box21, module_cache):
    # box x dual(V(1,1)): the l=(1,0) equation has a constant numerator
    dual = dual_module(module_cache((1, 1), ps21))
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), dual)])
    out = solve_problem(chain, (1, 0))
    assert out.method == "single_root_rational"
    assert out.solutions == []
    assert "no finite zero" in out.note


def test_solve_trivial_on_mixed_chain(ps21, module_cache):
    V = module_cache((2, 1), ps21)
    W = module_cache((1, 1), ps21)
    chain = ChainSpec(ps21, [(Fraction(0), V), (Fraction(1), W)])
    out = solve_problem(chain, (0, 0))
    assert out.method == "trivial"
    rep = out.solutions[0].report
    assert rep.all_ok
    # eigenvalues reduce to the pairing term over site pairs
    from supergaudin.superalg import weight_inner

    lam = [V.hw_weight, W.hw_weight]
    expect = weight_inner(ps21.parities and ps21, lam[0], lam[1])
    assert rep.eigenvalues[0] == expect / (Fraction(0) - Fraction(1))


def test_solve_single_root_on_mixed_chain(ps21, box21, module_cache):
    # box x V(2,1) with one colour-2 root: rational-zero route, solutions
    # verified end to end
    V = module_cache((2, 1), ps21)
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), V)])
    out = solve_problem(chain, (0, 1))
    assert out.method == "single_root_rational"
    for sol in out.solutions:
        assert sol.report.residual_norm <= 1e-10
