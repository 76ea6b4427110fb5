import random

import pytest
from hypothesis import given, strategies as st

from simplicial_hopf import gamma, loop_group as lg, sampling, twisting as tw
from simplicial_hopf.exceptions import ValidationError
from simplicial_hopf.gamma import GammaElement, Z2
from simplicial_hopf.loop_group import LoopWord
from simplicial_hopf.twisting import BaseSimplex, Y
from simplicial_hopf.verify.suites import eta_by_recursion

s = tw.s2_degeneracy


def bar(n, J, z):
    return LoopWord(n - 1, ((GammaElement.symbol(n, J, z), 1),))


def test_s2_listing():
    assert tw.s2_simplices(0) == [BaseSimplex.point(0)]
    assert tw.s2_simplices(1) == [BaseSimplex.point(1)]
    assert set(tw.s2_simplices(2)) == {BaseSimplex.point(2), Y}
    three = tw.s2_simplices(3)
    assert len(three) == 4
    assert set(three) == {BaseSimplex.point(3)} | {BaseSimplex.on_cell((j,)) for j in range(3)}


@pytest.mark.parametrize("n", range(2, 9))
def test_s2_counts(n):
    assert len(tw.s2_simplices(n)) == 1 + n * (n - 1) // 2


def test_s2_face_examples():
    assert tw.s2_face(0, Y) == BaseSimplex.point(1)
    assert tw.s2_face(2, s(1, Y)) == Y
    assert tw.s2_face(0, s(1, Y)) == BaseSimplex.point(2)
    with pytest.raises(ValidationError):
        tw.s2_face(3, Y)


def test_base_simplex_json():
    b = s(3, s(1, Y))
    assert b.to_json() == {"cell": "y", "word": [3, 1], "deg": 4}
    assert BaseSimplex.from_json(b.to_json()) == b
    with pytest.raises(ValidationError):
        BaseSimplex.from_json({"cell": "y", "word": [1, 3], "deg": 4})


@pytest.mark.parametrize("n", range(0, 9))
def test_s2_simplicial_identities_exhaustive(n):
    d = tw.s2_face
    for x in tw.s2_simplices(n):
        for i in range(n + 2):
            for j in range(n + 2):
                if i < j <= n and n >= 2:
                    assert d(i, d(j, x)) == d(j - 1, d(i, x))
                if i <= j <= n:
                    assert s(i, s(j, x)) == s(j + 1, s(i, x))
                if j <= n and i in (j, j + 1):
                    assert d(i, s(j, x)) == x
                if j <= n and i < j and n >= 1:
                    assert d(i, s(j, x)) == s(j - 1, d(i, x))
                if j <= n and j + 1 < i <= n + 1 and n >= 1:
                    assert d(i, s(j, x)) == s(j, d(i - 1, x))


def test_eta_examples():
    assert tw.eta(1, Y) == bar(2, (), 1)
    assert tw.eta(1, s(0, Y)).is_identity
    assert tw.eta(1, s(2, s(1, Y))) == bar(4, (2, 1), 1)
    assert tw.eta(3, Y) == bar(2, (), 3)
    assert tw.eta(1, BaseSimplex.point(1)).is_identity
    with pytest.raises(ValidationError):
        tw.eta(1, BaseSimplex.point(0))


def test_alpha_examples():
    assert tw.alpha(1, Y) == GammaElement.symbol(2, (), 1)
    for m in (-2, 4):
        assert tw.alpha(m, s(1, Y)) == GammaElement.symbol(3, (1,), m)
        assert tw.alpha(m, BaseSimplex.point(1)) == GammaElement.zero(1)


def test_universal_zeta_examples():
    assert tw.universal_zeta(GammaElement.symbol(2, (), 1)) == bar(2, (), 1)
    assert tw.universal_zeta(GammaElement.symbol(3, (0,), 2)).is_identity


@pytest.mark.parametrize("m", range(-3, 4))
def test_eta_factors_through_gamma(m):
    for n in range(1, 7):
        for b in tw.s2_simplices(n):
            assert tw.universal_zeta(tw.alpha(m, b)) == tw.eta(m, b)
            assert eta_by_recursion(m, b) == tw.eta(m, b)


@pytest.mark.parametrize("m", range(-2, 3))
def test_check_twisting_eta(m):
    report = tw.check_twisting(tw.HopfTwisting(m), 6)
    assert report.ok and report.checks > 0


def test_check_twisting_universal_zeta():
    rng = random.Random(5)
    xs = [sampling.random_gamma_element(rng, n) for n in range(1, 6) for _ in range(10)]
    report = tw.check_twisting(tw.universal_zeta, 5, simplices=xs,
                               face=lambda i, x: gamma.gamma_face(Z2, i, x),
                               degeneracy=lambda i, x: gamma.gamma_degeneracy(Z2, i, x))
    assert report.ok and report.checks > 100


def test_check_twisting_catches_corrupted_eta():
    def corrupted(b):
        if b == Y:
            return LoopWord.identity(1)
        return tw.eta(1, b)

    report = tw.check_twisting(corrupted, 3)
    assert not report.ok
    names = {v.identity for v in report.violations}
    assert "s_i t(b) = t(s_{i+1} b)" in names
    witness = report.violations[0].to_json()
    assert BaseSimplex.from_json(witness["simplex"]).degree <= 3


@given(st.integers(-5, 5), st.integers(1, 6), st.data())
def test_eta_is_identity_exactly_on_s0_and_point_simplices(m, n, data):
    b = data.draw(st.sampled_from(tw.s2_simplices(n)))
    trivial = b.cell == tw.POINT or (b.word and b.word[-1] == 0) or m == 0
    assert tw.eta(m, b).is_identity == bool(trivial)
