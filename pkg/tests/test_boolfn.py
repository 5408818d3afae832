import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadbent.boolfn import (
    Anf,
    SingularMatrixError,
    TableFormatError,
    TruthTable,
    anf,
    apply_affine,
    complement,
    from_anf,
    from_predicate,
    linear_table,
    weight,
)
from quadbent.family import construct_f
from quadbent.gf2 import BitMatrix
from quadbent.walsh import is_bent, wht
from oracles import anf_by_subsets, eval_monomials, family_values, popcount


def tables(max_m=8):
    return st.integers(1, max_m).flatmap(
        lambda m: st.lists(st.integers(0, 1), min_size=1 << m, max_size=1 << m).map(
            lambda v: TruthTable.from_values(m, v)
        )
    )


def pairs_of(i, j, m):
    return {frozenset({a, b}) for a in range(1, m + 1) for b in range(a + 1, m + 1)}


class TestFromPredicate:
    def test_constant_zero(self):
        t = from_predicate(2, lambda i: 0)
        assert t.values.tolist() == [0, 0, 0, 0]

    def test_linear(self):
        t = from_predicate(2, lambda i: popcount(i) % 2)
        assert t.values.tolist() == [0, 1, 1, 0]

    def test_weight_residue_2_3(self):
        assert weight(from_predicate(4, lambda i: popcount(i) % 4 in (2, 3))) == 10

    @pytest.mark.parametrize("m", [0, 25, -1])
    def test_range(self, m):
        with pytest.raises(ValueError):
            from_predicate(m, lambda i: 0)


def test_weights():
    assert weight(TruthTable.constant(3)) == 0
    assert weight(construct_f((0, 1), 10)) == 528
    assert weight(construct_f((1, 2), 6)) == sum(family_values(1, 2, 6)) == 28


def test_bit_ordering_and_call():
    t = construct_f((2, 3), 4)
    assert t(0) == 0
    assert t(0b0011) == 1
    assert t([1, 1, 0, 0]) == 1
    # x_1 is the least significant bit
    x1 = from_predicate(3, lambda i: i & 1)
    assert x1([1, 0, 0]) == 1 and x1(0b100) == 0


def test_immutable():
    t = construct_f((2, 3), 4)
    with pytest.raises(ValueError):
        t.values[0] = 1
    with pytest.raises(AttributeError):
        t.m = 6


class TestAnf:
    def test_single_monomial(self):
        t = TruthTable.from_values(2, [0, 0, 0, 1])
        assert anf(t).monomials == {frozenset({1, 2})}

    def test_f23_all_pairs(self):
        a = anf(construct_f((2, 3), 4))
        assert a.monomials == pairs_of(1, 2, 4)
        assert len(a.monomials) == 6 and a.degree == 2

    def test_f12_singletons_and_pairs(self):
        a = anf(construct_f((1, 2), 4))
        assert a.monomials == pairs_of(1, 2, 4) | {frozenset({i}) for i in range(1, 5)}

    def test_from_anf_constants(self):
        assert from_anf(Anf(3, frozenset())) == TruthTable.constant(3, 0)
        assert from_anf(Anf(3, frozenset({frozenset()}))) == TruthTable.constant(3, 1)

    def test_from_anf_matches_constructor(self):
        assert from_anf(Anf(4, frozenset(pairs_of(1, 2, 4)))) == construct_f((2, 3), 4)

    def test_zero_degree_is_none(self):
        assert Anf(3, frozenset()).degree is None
        assert anf(TruthTable.constant(3, 1)).degree == 0

    def test_bad_variable(self):
        with pytest.raises(ValueError):
            Anf(2, frozenset({frozenset({3})}))

    def test_from_terms_cancels(self):
        assert Anf.from_terms(3, [{1}, {2}, {1}]).monomials == {frozenset({2})}

    @pytest.mark.parametrize("m", range(1, 7))
    def test_round_trip_exhaustive_small(self, m):
        # every table for m <= 3; a fixed sample of all tables for larger m
        rng = np.random.default_rng(m)
        if m <= 3:
            cases = [[(k >> i) & 1 for i in range(1 << m)] for k in range(1 << (1 << m))]
        else:
            cases = rng.integers(0, 2, (200, 1 << m)).tolist()
        for vals in cases:
            t = TruthTable.from_values(m, vals)
            a = anf(t)
            assert a.monomials == anf_by_subsets(vals, m)
            assert from_anf(a) == t

    @settings(max_examples=40, deadline=None)
    @given(tables(12))
    def test_round_trip_random(self, t):
        a = anf(t)
        assert from_anf(a) == t
        assert anf(from_anf(a)) == a

    def test_evaluation_by_monomials(self):
        mons = {frozenset({1, 3}), frozenset({2}), frozenset()}
        assert from_anf(Anf(3, frozenset(mons))).values.tolist() == eval_monomials(mons, 3)


class TestComplement:
    def test_constants(self):
        assert complement(TruthTable.constant(4)) == TruthTable.constant(4, 1)

    def test_family(self):
        assert complement(construct_f((2, 3), 6)) == construct_f((0, 1), 6)
        assert complement(construct_f((1, 2), 4)) == construct_f((0, 3), 4)

    @given(tables())
    def test_weight(self, t):
        assert weight(complement(t)) == (1 << t.m) - weight(t)


class TestAffine:
    def test_identity(self):
        t = construct_f((1, 2), 4)
        assert apply_affine(t, BitMatrix.identity(4)) == t

    def test_eps_complements(self):
        t = construct_f((1, 2), 4)
        assert apply_affine(t, BitMatrix.identity(4), eps=1) == complement(t)

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            apply_affine(construct_f((1, 2), 4), BitMatrix.ones(4))

    def test_pointwise_definition(self):
        t = construct_f((0, 3), 4)
        a = BitMatrix.from_rows(["1100", "0111", "0011", "0001"])
        b, c, eps = 0b1010, 0b0110, 1
        got = apply_affine(t, a, b, c, eps)
        for x in range(16):
            assert got(x) == t(a.apply(x) ^ b) ^ (popcount(c & x) % 2) ^ eps

    @pytest.mark.parametrize("seed", range(5))
    def test_preserves_bentness_and_degree(self, seed):
        rng = np.random.default_rng(seed)
        m = 6
        while True:
            a = BitMatrix(m, m, tuple(int(r) for r in rng.integers(0, 1 << m, m)))
            if a.rank() == m:
                break
        f = construct_f((2, 3), m)
        g = apply_affine(f, a, int(rng.integers(64)), int(rng.integers(64)), int(rng.integers(2)))
        assert is_bent(wht(g))
        assert weight(g) in {32 - 4, 32 + 4}
        assert g.degree == 2

    def test_linear_table(self):
        assert linear_table(2, [1, 1]).values.tolist() == [0, 1, 1, 0]


class TestFileFormat:
    def test_hex_layout(self):
        # bit i lives in bit (i % 8) of byte i // 8
        t = TruthTable.from_values(4, [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0])
        assert t.dumps() == "m=4\n0102\n"

    def test_small_m_single_byte(self):
        t = TruthTable.from_values(2, [0, 1, 1, 0])
        assert t.dumps() == "m=2\n06\n"
        assert TruthTable.loads(t.dumps()) == t

    def test_file_round_trip(self, tmp_path):
        t = construct_f((0, 3), 10)
        path = tmp_path / "f.tt"
        t.write(path)
        assert TruthTable.read(path) == t

    @pytest.mark.parametrize("text", ["", "x=4\n00", "m=4\n01", "m=4\nzz00", "m=2\nf0"])
    def test_malformed(self, text):
        with pytest.raises((TableFormatError, ValueError)):
            TruthTable.loads(text)
