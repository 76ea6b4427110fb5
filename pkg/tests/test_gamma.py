from math import comb

import pytest
from hypothesis import given, strategies as st

from simplicial_hopf import gamma, sampling
from simplicial_hopf.exceptions import ValidationError
from simplicial_hopf.gamma import ChainComplex, GammaElement, Z2
from simplicial_hopf.verify.suites import TEST_COMPLEXES

from strategies import seeded


def sym(n, J, z):
    return GammaElement.symbol(n, J, z)


def test_sphere_complex():
    assert Z2.ranks == {2: 1}
    assert all(not any(any(row) for row in d) for d in Z2.differentials.values())
    assert gamma.sphere_complex(0).ranks == {0: 1}
    Z2.validate()


def test_validate_rejects_nonzero_square():
    C = ChainComplex({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]})
    with pytest.raises(ValidationError):
        C.validate()
    with pytest.raises(ValidationError):
        ChainComplex({0: 1, 1: 1}, {1: [[1, 2]]})


def test_complex_json_round_trip():
    for C in TEST_COMPLEXES.values():
        assert ChainComplex.from_json(C.to_json()) == C


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (5, 10), (1, 0), (0, 0)])
def test_basis_counts(n, count):
    assert len(gamma.gamma_basis(Z2, n)) == count


def test_basis_degree_three_words():
    assert [J for J, r, g in gamma.gamma_basis(Z2, 3)] == [(0,), (1,), (2,)]


def test_face_examples():
    assert gamma.gamma_face(Z2, 0, sym(3, (0,), 1)) == sym(2, (), 1)
    assert gamma.gamma_face(Z2, 2, sym(3, (1,), 1)) == sym(2, (), 1)
    assert gamma.gamma_face(Z2, 3, sym(3, (0,), 1)) == GammaElement.zero(2)


def test_degeneracy_examples():
    assert gamma.gamma_degeneracy(Z2, 0, sym(3, (1,), 1)) == sym(4, (2, 0), 1)
    assert gamma.gamma_degeneracy(Z2, 3, sym(3, (2,), 1)) == sym(4, (3, 2), 1)
    assert gamma.gamma_degeneracy(Z2, 1, sym(3, (0,), 1)) == sym(4, (1, 0), 1)


def test_top_face_uses_differential():
    C = ChainComplex({1: 2, 2: 1}, {2: [[2], [3]]})
    x = sym(2, (), 1)
    assert gamma.gamma_face(C, 2, x) == GammaElement(1, {(): (2, 3)})
    assert gamma.gamma_face(C, 0, x) == GammaElement.zero(1)


def test_arithmetic_and_json():
    x = sym(3, (0,), 2) + sym(3, (2,), -1)
    assert x - x == GammaElement.zero(3)
    assert 3 * x == x + x + x
    assert -x + x == GammaElement.zero(3)
    assert GammaElement.from_json(x.to_json()) == x
    assert x.to_json()["deg"] == 3
    with pytest.raises(ValidationError):
        sym(3, (0,), 1) + sym(4, (0,), 1)


def test_check_element_rejects_bad_symbols():
    with pytest.raises(ValidationError):
        GammaElement.symbol(3, (0, 1), 1)
    with pytest.raises(ValidationError):
        gamma.check_element(Z2, GammaElement(3, {(0, ): (1, 2)}))


def test_coordinates_round_trip():
    x = sym(4, (1, 0), 2) + sym(4, (3, 1), -5)
    assert gamma.from_coordinates(Z2, 4, gamma.coordinates(Z2, x)) == x


@pytest.mark.parametrize("D", [3, 5])
def test_normalized_chains_sphere(D):
    N = gamma.normalized_chains(Z2, D)
    assert [N.rank(n) for n in range(D + 1)] == [0, 0, 1] + [0] * (D - 2)


def test_normalized_chains_other_complexes():
    assert gamma.normalized_chains(gamma.sphere_complex(0), 3).ranks == {0: 1}
    assert gamma.normalized_chains(Z2, 2).rank(1) == 0
    for C in TEST_COMPLEXES.values():
        N = gamma.normalized_chains(C, C.top_degree + 2)
        assert N == C


def test_normalized_chains_is_identity_on_longer_complex():
    C = ChainComplex({0: 2, 1: 3, 2: 2, 3: 1},
                     {1: [[1, 0, 2], [0, 1, 1]], 2: [[2, 0], [1, 0], [-1, 0]], 3: [[0], [1]]})
    C.validate()
    assert gamma.normalized_chains(C, 5) == C


def test_canonical_moore_basis_projects_to_standard_basis():
    C = TEST_COMPLEXES["two-term"]
    for n in (1, 2):
        for k, x in enumerate(gamma.canonical_moore_basis(C, n)):
            sign = -1 if (n * (n + 1) // 2) % 2 else 1
            assert x.terms[()] == tuple(sign * int(i == k) for i in range(C.rank(n)))
            assert all(not gamma.gamma_face(C, i, x) for i in range(1, n + 1))


complexes = st.sampled_from(list(TEST_COMPLEXES.values()))


@given(complexes, st.integers(1, 6), st.data())
def test_faces_and_degeneracies_are_linear(C, n, data):
    x = data.draw(seeded(lambda r: sampling.random_gamma_element(r, n, C)))
    y = data.draw(seeded(lambda r: sampling.random_gamma_element(r, n, C)))
    i = data.draw(st.integers(0, n))
    assert gamma.gamma_face(C, i, x + y) == gamma.gamma_face(C, i, x) + gamma.gamma_face(C, i, y)
    assert gamma.gamma_degeneracy(C, i, x - y) == gamma.gamma_degeneracy(C, i, x) - gamma.gamma_degeneracy(C, i, y)


@given(complexes, st.integers(2, 7), st.data())
def test_simplicial_identities(C, n, data):
    x = data.draw(seeded(lambda r: sampling.random_gamma_element(r, n, C)))
    i = data.draw(st.integers(0, n))
    j = data.draw(st.integers(0, n))
    d = lambda k, v: gamma.gamma_face(C, k, v)
    s = lambda k, v: gamma.gamma_degeneracy(C, k, v)
    if i < j:
        assert d(i, d(j, x)) == d(j - 1, d(i, x))
        assert d(i, s(j, x)) == s(j - 1, d(i, x))
    if i <= j:
        assert s(i, s(j, x)) == s(j + 1, s(i, x))
    if i == j:
        assert d(i, s(j, x)) == x and d(i + 1, s(j, x)) == x
    if i > j + 1:
        assert d(i, s(j, x)) == s(j, d(i - 1, x))


@pytest.mark.parametrize("n", range(2, 13))
def test_rank_is_binomial(n):
    assert len(gamma.gamma_basis(Z2, n)) == comb(n, n - 2)
