import pytest

from supergaudin import (
    ParitySequence,
    Weight,
    cartan_matrix,
    distinguished_parities,
    simple_root,
    weight_inner,
)
from supergaudin.errors import DimensionMismatch, InvalidParity
from supergaudin.superalg import coroot_pairing

GL43_FIRST = (
    (2, -1, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0),
    (0, -1, 2, -1, 0, 0),
    (0, 0, -1, 0, -1, 0),
    (0, 0, 0, 1, 2, -1),
    (0, 0, 0, 0, -1, 2),
)
GL43_SECOND = (
    (2, -1, 0, 0, 0, 0),
    (-1, 0, -1, 0, 0, 0),
    (0, 1, 2, -1, 0, 0),
    (0, 0, -1, 2, -1, 0),
    (0, 0, 0, -1, 0, -1),
    (0, 0, 0, 0, 1, 2),
)
GL43_THIRD = (
    (0, -1, 0, 0, 0, 0),
    (1, 0, -1, 0, 0, 0),
    (0, 1, 0, -1, 0, 0),
    (0, 0, 1, 0, -1, 0),
    (0, 0, 0, 1, 0, -1),
    (0, 0, 0, 0, 1, 0),
)


def test_distinguished():
    assert distinguished_parities(2, 1).parities == (0, 0, 1)
    assert distinguished_parities(1, 0).parities == (0,)
    assert distinguished_parities(4, 3).parities == (0, 0, 0, 0, 1, 1, 1)


def test_distinguished_rejects_pure_odd():
    with pytest.raises(InvalidParity):
        distinguished_parities(0, 2)


def test_leading_odd_rejected():
    with pytest.raises(InvalidParity):
        ParitySequence((1, 0))


@pytest.mark.parametrize(
    "parities,expected",
    [
        ((0, 0, 0, 0, 1, 1, 1), GL43_FIRST),
        ((0, 0, 1, 1, 1, 0, 0), GL43_SECOND),
        ((0, 1, 0, 1, 0, 1, 0), GL43_THIRD),
    ],
)
def test_gl43_cartan_matrices(parities, expected):
    rd = cartan_matrix(ParitySequence(parities))
    assert rd.cartan == expected


def test_gl21_symmetrized():
    rd = cartan_matrix(ParitySequence((0, 1, 0)))
    assert rd.symmetrized == ((0, 1), (1, 0))


def test_gl2_trivial():
    rd = cartan_matrix(ParitySequence((0, 0)))
    assert rd.cartan == ((2,),)


def test_weight_inner_examples():
    ps = ParitySequence((0, 1))
    e2 = Weight.eps(2, 2)
    assert weight_inner(ps, e2, e2) == -1
    assert weight_inner(ps, Weight.eps(1, 2), e2) == 0
    ps3 = ParitySequence((0, 1, 0))
    a1, a2 = simple_root(ps3, 1), simple_root(ps3, 2)
    assert weight_inner(ps3, a1, a2) == 1
    assert weight_inner(ps3, a1, a2) == cartan_matrix(ps3).symmetrized[0][1]


def test_weight_inner_length_mismatch():
    ps = ParitySequence((0, 1))
    with pytest.raises(DimensionMismatch):
        weight_inner(ps, Weight((1, 0, 0)), Weight((1, 0)))


@pytest.mark.parametrize(
    "parities",
    [(0, 1), (0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 0, 0, 0, 1, 1, 1), (0, 1, 0, 1)],
)
def test_symmetrized_is_root_inner_products(parities):
    ps = ParitySequence(parities)
    rd = cartan_matrix(ps)
    for a in range(1, ps.rank + 1):
        for b in range(1, ps.rank + 1):
            assert rd.symmetrized[a - 1][b - 1] == weight_inner(
                ps, simple_root(ps, a), simple_root(ps, b)
            )


@pytest.mark.parametrize("parities", [(0, 1), (0, 1, 0), (0, 0, 1, 1), (0, 1, 1, 0)])
def test_cartan_is_coroot_pairing(parities):
    ps = ParitySequence(parities)
    rd = cartan_matrix(ps)
    for a in range(1, ps.rank + 1):
        for b in range(1, ps.rank + 1):
            assert rd.cartan[b - 1][a - 1] == coroot_pairing(
                ps, a, simple_root(ps, b)
            )


def test_symmetrized_diagonal_zero_iff_odd_root():
    for parities in [(0, 1), (0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 1, 0, 1)]:
        ps = ParitySequence(parities)
        rd = cartan_matrix(ps)
        for a in range(ps.rank):
            assert (rd.symmetrized[a][a] == 0) == (rd.simple_root_parities[a] == 1)


def test_parity_flip_invariance():
    # gl(m|n) ~ gl(n|m): flipping all parities leaves the Cartan data fixed,
    # whenever the flipped sequence is itself admissible (starts even).
    for parities in [(0, 1), (0, 1, 0, 1), (0, 0, 1, 1)]:
        ps = ParitySequence(parities)
        flipped = tuple(1 - x for x in parities)
        if flipped[0] != 0:
            continue
        rd1 = cartan_matrix(ps)
        rd2 = cartan_matrix(ParitySequence(flipped))
        assert rd1.cartan == rd2.cartan
        assert rd1.symmetrized == rd2.symmetrized


def test_parity_string_round_trip():
    ps = ParitySequence.from_string("0011")
    assert ps.as_string() == "0011"
    assert (ps.m, ps.n) == (2, 2)
    with pytest.raises(InvalidParity):
        ParitySequence.from_string("0021")
