import pytest
from hypothesis import given, settings, strategies as st

from motdec.characters import (
    LaurentCharacter,
    NotACharacterError,
    branch_sp4_to_gl2,
    decompose_gl,
    decompose_sp4,
    exterior_powers,
    gl_dimension,
    schur_character,
    sp4_character,
    sp4_dimension,
    standard_character,
)
from oracles import c2_weyl_dimension, exterior_weights, hook_content_dimension, schur_by_tableaux

dominant = st.integers(1, 3).flatmap(
    lambda d: st.lists(st.integers(-2, 4), min_size=d, max_size=d).map(
        lambda xs: tuple(sorted(xs, reverse=True))
    )
)


def test_laurent_arithmetic():
    x = LaurentCharacter.monomial((1, 0))
    y = LaurentCharacter.monomial((0, 1))
    s = x + y
    assert (s * s).terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (s * s - x * x).exact_divide(y).terms == {(1, 0): 2, (0, 1): 1}
    assert (s - s) == LaurentCharacter(2)
    assert s.dimension() == 2


def test_inexact_division_raises():
    x = LaurentCharacter.monomial((1, 0))
    with pytest.raises(ArithmeticError):
        (x + 1).exact_divide(x + LaurentCharacter.monomial((0, 1)))


@settings(max_examples=40, deadline=None)
@given(dominant)
def test_schur_matches_tableaux(lam):
    assert schur_character(lam).terms == schur_by_tableaux(lam)


@settings(max_examples=40, deadline=None)
@given(dominant)
def test_gl_dimension_matches_hook_content(lam):
    twist = min(0, lam[-1])
    shape = tuple(x - twist for x in lam)
    assert gl_dimension(lam) == hook_content_dimension(shape, len(lam))
    assert schur_character(lam).dimension() == gl_dimension(lam)


@settings(max_examples=30, deadline=None)
@given(st.lists(dominant.filter(lambda t: len(t) == 2), min_size=1, max_size=4))
def test_decompose_gl_recovers_sums(labels):
    total = LaurentCharacter(2)
    expected: dict = {}
    for lam in labels:
        total = total + schur_character(lam)
        expected[lam] = expected.get(lam, 0) + 1
    assert decompose_gl(total, 2) == expected


def test_decompose_gl_rejects_non_character():
    with pytest.raises(NotACharacterError):
        decompose_gl(LaurentCharacter.monomial((1, 0)), 2)


@pytest.mark.parametrize("d,m", [(1, 4), (2, 1), (2, 2), (2, 3), (3, 2)])
def test_exterior_powers_match_subset_enumeration(d, m):
    got = exterior_powers(standard_character(d, m))
    want = exterior_weights(d, m)
    assert len(got) == len(want)
    for ch, counter in zip(got, want):
        assert ch.terms == dict(counter)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(9) for b in range(5) if a + 2 * b <= 8])
def test_sp4_dimension_three_ways(a, b):
    ch = sp4_character(a, b)
    assert ch.dimension() == sp4_dimension(a, b) == c2_weyl_dimension(a, b)
    branched = branch_sp4_to_gl2(a, b)
    assert sum(c * gl_dimension(mu) for mu, c in branched.items()) == sp4_dimension(a, b)


def test_sp4_small_branchings():
    # standard, five-dimensional and adjoint representations of sp_4 on gl_2
    assert branch_sp4_to_gl2(1, 0) == {(1, 0): 1, (0, -1): 1}
    assert branch_sp4_to_gl2(0, 1) == {(1, 1): 1, (1, -1): 1, (-1, -1): 1}
    assert branch_sp4_to_gl2(2, 0) == {(2, 0): 1, (1, -1): 1, (0, 0): 1, (0, -2): 1}


def test_decompose_sp4_roundtrip():
    total = sp4_character(1, 1) * 2 + sp4_character(0, 2) + sp4_character(0, 0)
    assert decompose_sp4(total) == {(1, 1): 2, (0, 2): 1, (0, 0): 1}


def test_tensor_square_of_standard():
    std = sp4_character(1, 0)
    assert decompose_sp4(std * std) == {(2, 0): 1, (0, 1): 1, (0, 0): 1}
