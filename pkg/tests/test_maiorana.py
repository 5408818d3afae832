import numpy as np
import pytest

from quadbent.boolfn import TruthTable, apply_affine
from quadbent.family import BENT_PAIRS, construct_f
from quadbent.gf2 import BitMatrix, is_invertible
from quadbent.maiorana import (
    CoordinateSplit,
    ResourceLimit,
    affine_to_mm_witness,
    all_splits,
    detect_mm,
    detect_mm_any_split,
    mm_construct,
    standard_mm_form,
    witness_identity_holds,
)
from quadbent.walsh import is_bent, wht
from oracles import is_mm_naive, splits


def split(m, *xs):
    return CoordinateSplit(m, frozenset(xs))


def test_split_validation():
    with pytest.raises(ValueError):
        split(4, 1)
    with pytest.raises(ValueError):
        split(4, 1, 5)
    assert split(4, 1, 2).yset == {3, 4}
    assert len(list(all_splits(6))) == 20


def test_construct_m2():
    t = mm_construct([0, 1], TruthTable.constant(1), split(2, 1))
    assert t == TruthTable.from_values(2, [0, 0, 0, 1])


def test_construct_identity_m4():
    t = mm_construct(range(4), TruthTable.constant(2), split(4, 1, 2))
    expected = TruthTable.from_values(4, [((x & 1) & (x >> 2) & 1) ^ ((x >> 1) & 1 & (x >> 3) & 1) for x in range(16)])
    assert t == expected
    assert is_bent(wht(t))


def test_constant_phi_not_bent():
    assert not is_bent(wht(mm_construct([0] * 4, TruthTable.constant(2), split(4, 1, 2))))


def test_construct_size_errors():
    with pytest.raises(ValueError):
        mm_construct([0, 1, 2], TruthTable.constant(2), split(4, 1, 2))
    with pytest.raises(ValueError):
        mm_construct(range(4), TruthTable.constant(3), split(4, 1, 2))


@pytest.mark.parametrize("m", [4, 6, 8])
@pytest.mark.parametrize("seed", range(4))
def test_detect_recovers_witness(m, seed):
    rng = np.random.default_rng(seed)
    h = m // 2
    phi = rng.permutation(1 << h).tolist()
    g = TruthTable.from_values(h, rng.integers(0, 2, 1 << h))
    sp = CoordinateSplit(m, frozenset(rng.choice(np.arange(1, m + 1), h, replace=False).tolist()))
    w = detect_mm(mm_construct(phi, g, sp), sp)
    assert w is not None
    assert list(w.phi) == phi and w.g == g


@pytest.mark.parametrize("m", [4, 6])
def test_bent_iff_bijective(m):
    rng = np.random.default_rng(m)
    h = m // 2
    sp = split(m, *range(1, h + 1))
    for _ in range(20):
        phi = rng.integers(0, 1 << h, 1 << h).tolist()
        g = TruthTable.from_values(h, rng.integers(0, 2, 1 << h))
        t = mm_construct(phi, g, sp)
        assert is_bent(wht(t)) == (len(set(phi)) == len(phi))
        assert (detect_mm(t, sp) is not None) == (len(set(phi)) == len(phi))


def test_family_not_mm_examples():
    assert detect_mm(construct_f((2, 3), 4), split(4, 1, 2)) is None
    f = construct_f((0, 1), 6)
    assert all(detect_mm(f, s) is None for s in all_splits(6))


@pytest.mark.parametrize("m", [4, 6])
@pytest.mark.parametrize("pair", BENT_PAIRS, ids=str)
def test_family_not_mm_matches_naive(pair, m):
    f = construct_f(pair, m)
    vals = f.values.tolist()
    for xs in splits(m):
        assert detect_mm(f, CoordinateSplit(m, frozenset(xs))) is None
        assert not is_mm_naive(vals, m, list(xs))


def test_any_split():
    t = mm_construct(range(4), TruthTable.constant(2), split(4, 1, 2))
    found = detect_mm_any_split(t)
    assert found is not None
    sp, w = found
    assert sp == split(4, 1, 2) and w.phi == (0, 1, 2, 3)
    assert detect_mm_any_split(construct_f((1, 2), 4)) is None
    assert detect_mm_any_split(TruthTable.constant(4)) is None


def test_any_split_limit():
    with pytest.raises(ResourceLimit):
        detect_mm_any_split(construct_f((1, 2), 14))


def test_witness_m4_rows():
    a, c = affine_to_mm_witness(4)
    assert a == BitMatrix.from_rows(["1100", "0111", "0011", "0001"])
    assert c == 0b1010
    assert is_invertible(a)


@pytest.mark.parametrize("m", [4, 6, 8, 10, 12])
def test_witness_identity(m):
    a, c = affine_to_mm_witness(m)
    assert is_invertible(a)
    assert apply_affine(standard_mm_form(m), a, 0, c, 0) == construct_f((2, 3), m)
    assert witness_identity_holds(m)


def test_standard_form_is_mm():
    t = standard_mm_form(6)
    w = detect_mm(t, split(6, 1, 3, 5))
    assert w is not None and w.is_permutation


@pytest.mark.parametrize("m", [2, 5, 7])
def test_witness_domain(m):
    with pytest.raises(ValueError):
        affine_to_mm_witness(m)
