from fractions import Fraction

import numpy as np
import pytest

from supergaudin import ParitySequence, brute_spectrum, hamiltonian, verify_hamiltonians
from supergaudin.errors import DuplicateSite, TooLarge
from supergaudin.gaudin import ChainSpec, chain_gram
from supergaudin.reps import defining_module, dual_module, gl11_module
from supergaudin.scalars import GaussianRational


def test_duplicate_sites_rejected(ps21, box21):
    with pytest.raises(DuplicateSite):
        ChainSpec(ps21, [(Fraction(1), box21), (Fraction(1), box21)])


def test_h1_is_graded_permutation(ps11, box11):
    chain = ChainSpec(ps11, [(1, box11), (0, box11)])
    h1 = hamiltonian(chain, 1)
    space = chain.space
    expect = {
        (space.index((0, 0)), space.index((0, 0))): Fraction(1),
        (space.index((0, 1)), space.index((1, 0))): Fraction(1),
        (space.index((1, 0)), space.index((0, 1))): Fraction(1),
        (space.index((1, 1)), space.index((1, 1))): Fraction(-1),
    }
    assert h1.entries == expect


def test_h1_fixes_top_vector(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(2), box21), (Fraction(0), box21)])
    h1 = hamiltonian(chain, 1)
    top = chain.space.hw_tensor()
    assert h1.apply(top) == {k: v / 2 for k, v in top.items()}


def test_proposition_parts_c21_three_sites(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(0), box21), (Fraction(1), box21), (Fraction(2), box21)])
    report = verify_hamiltonians(chain)
    assert report.all_ok, report.counterexample


def test_proposition_parts_gl11_modules():
    ps = ParitySequence((0, 1))
    mods = [gl11_module(1, 0), gl11_module(2, 1), gl11_module(1, 1)]
    chain = ChainSpec(ps, list(zip([Fraction(0), Fraction(1), Fraction(3)], mods)))
    report = verify_hamiltonians(chain)
    assert report.all_ok, report.counterexample


def test_sum_zero_single_pair(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(5), box21), (Fraction(2), box21)])
    h = hamiltonian(chain, 1) + hamiltonian(chain, 2)
    assert h.is_zero()


def test_gaussian_rational_sites_stay_exact(ps11, box11):
    z2 = GaussianRational(0, 1)
    chain = ChainSpec(ps11, [(Fraction(1), box11), (z2, box11)])
    assert chain.exact
    report = verify_hamiltonians(chain)
    assert report.all_ok


def test_float_sites_tolerance_suite(ps21, box21):
    chain = ChainSpec(ps21, [(0.0, box21), (1.25, box21), (2.5, box21)])
    assert not chain.exact
    report = verify_hamiltonians(chain)
    assert report.all_ok


def test_chain_gram_kron(ps11):
    mods = [gl11_module(2, 1), gl11_module(1, 0)]
    chain = ChainSpec(ps11, list(zip([Fraction(0), Fraction(1)], mods)))
    g = chain_gram(chain)
    assert g[(0, 0)] == 1
    # diag entries multiply: <Fv, Fv> factors are r+s
    space = chain.space
    i = space.index((1, 1))
    assert g[(i, i)] == 3 * 1


def test_brute_spectrum_weight_stratum_pm1(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), box21)])
    recs = brute_spectrum(chain, strata="weight")
    stratum = [r for r in recs if tuple(r.weight) == (1, 1, 0)]
    eigs = sorted(e[0].real for e in (r.eigenvalues for r in stratum))
    assert len(stratum) == 2
    assert np.allclose(eigs, [-1.0, 1.0])
    sing = [r for r in brute_spectrum(chain, strata="singular") if tuple(r.weight) == (1, 1, 0)]
    assert len(sing) == 1 and abs(sing[0].eigenvalues[0] + 1) < 1e-10


def test_brute_spectrum_sum_zero(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(0), box21), (Fraction(1), box21), (Fraction(3), box21)])
    for rec in brute_spectrum(chain):
        assert abs(sum(rec.eigenvalues)) < 1e-9


def test_brute_spectrum_cap(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(i), box21) for i in range(5)])
    with pytest.raises(TooLarge):
        brute_spectrum(chain, cap=100)


def test_nonsemisimple_chain_jordan_block(ps21, box21, module_cache):
    dual = dual_module(module_cache((1, 1), ps21))
    chain = ChainSpec(ps21, [(Fraction(1), box21), (Fraction(0), dual)])
    recs = brute_spectrum(chain, strata="weight")
    target = [r for r in recs if tuple(r.weight) == (0, 0, -1)]
    assert target and not target[0].diagonalizable
    lam, sizes = target[0].jordan_blocks[0]
    assert abs(lam) < 1e-8 and sizes == (2,)


def test_hamiltonian_report_serializes(ps21, box21):
    chain = ChainSpec(ps21, [(Fraction(0), box21), (Fraction(1), box21)])
    doc = verify_hamiltonians(chain).as_dict()
    import json

    assert json.loads(json.dumps(doc)) == doc
    assert set(doc) == {"commute", "invariant", "symmetric", "sum_zero", "counterexample"}
