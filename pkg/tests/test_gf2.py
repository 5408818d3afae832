import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadbent.gf2 import (
    BitMatrix,
    DimensionError,
    is_alternating,
    is_involution,
    is_invertible,
    matmul,
)
from oracles import matmul_naive, rank_naive


def square(n_max=16):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n).map(
            lambda rows: BitMatrix(n, n, tuple(rows))
        )
    )


@st.composite
def same_size_triple(draw):
    n = draw(st.integers(1, 16))
    row = st.integers(0, (1 << n) - 1)
    mk = lambda: BitMatrix(n, n, tuple(draw(st.lists(row, min_size=n, max_size=n))))
    return mk(), mk(), mk()


J_PLUS_I = lambda n: BitMatrix.ones(n) + BitMatrix.identity(n)


def test_identity_times_x():
    x = BitMatrix.from_rows(["101", "011", "110"])
    assert BitMatrix.identity(3) @ x == x
    assert x @ BitMatrix.identity(3) == x


def test_j_plus_i_squared_even():
    assert matmul(J_PLUS_I(6), J_PLUS_I(6)) == BitMatrix.identity(6)


def test_j_squared_odd_is_j():
    j = BitMatrix.ones(5)
    assert matmul(j, j) == j
    assert matmul_naive(j.to_lists(), j.to_lists()) == j.to_lists()


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionError):
        matmul(BitMatrix.zeros(2, 3), BitMatrix.zeros(2, 3))


def test_rectangular_product():
    x = BitMatrix.from_rows(["110", "011"])
    y = BitMatrix.from_rows(["10", "01", "11"])
    assert (x @ y).to_lists() == matmul_naive(x.to_lists(), y.to_lists())


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_involution_even(n):
    assert is_involution(BitMatrix.identity(n))
    assert is_involution(J_PLUS_I(n))
    assert is_alternating(J_PLUS_I(n))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_j_plus_i_odd_not_involution(n):
    assert not is_involution(J_PLUS_I(n))


def test_alternating_basics():
    assert is_alternating(BitMatrix.zeros(4))
    assert not is_alternating(BitMatrix.identity(4))
    assert not is_alternating(BitMatrix.from_rows(["01", "00"]))


def test_invertible_examples():
    assert is_invertible(BitMatrix.identity(5))
    assert not is_invertible(BitMatrix.ones(4))
    sub = BitMatrix.from_rows(["1100", "0111", "0011", "0001"])
    assert is_invertible(sub)
    assert rank_naive(sub.to_lists()) == 4


def test_non_square_predicates_raise():
    for pred in (is_involution, is_alternating, is_invertible):
        with pytest.raises(DimensionError):
            pred(BitMatrix.zeros(2, 3))


def test_text_round_trip():
    x = BitMatrix.from_rows(["1100", "0111", "0011", "0001"])
    assert x.to_text() == "1100\n0111\n0011\n0001\n"
    assert BitMatrix.from_text(x.to_text()) == x


@given(same_size_triple())
def test_associativity(xyz):
    x, y, z = xyz
    assert (x @ y) @ z == x @ (y @ z)


@given(square())
def test_a_plus_a_transpose_alternating(a):
    assert is_alternating(a + a.T)


@given(same_size_triple())
def test_transpose_rules(xyz):
    x, y, _ = xyz
    assert x.T.T == x
    assert (x @ y).T == y.T @ x.T


@given(square(8))
def test_matmul_and_rank_match_naive(a):
    assert (a @ a).to_lists() == matmul_naive(a.to_lists(), a.to_lists())
    assert a.rank() == rank_naive(a.to_lists())


def test_apply_matches_matmul():
    a = BitMatrix.from_rows(["1100", "0111", "0011", "0001"])
    rng = np.random.default_rng(3)
    for x in rng.integers(0, 16, 10).tolist():
        col = BitMatrix(4, 1, tuple((x >> i) & 1 for i in range(4)))
        prod = a @ col
        assert a.apply(x) == sum(r << i for i, r in enumerate(prod.rows))
