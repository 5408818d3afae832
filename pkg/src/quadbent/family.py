"""The residue-class family f_{i1,i2}: f(x) = 1 iff wt(x) mod 4 is i1 or i2.

With inputs indexed as in :mod:`quadbent.boolfn`, the columns of H_m in index
order are the binary expansions of 0..2^m-1, so the coset leader v_{i1,i2} is
the same bit vector as the truth table of f_{i1,i2}. No separate type is kept.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .boolfn import TruthTable, check_m, indices
from .walsh import DualityClass, wht

# S(j)_m = a*B^2 + b*B, indexed [j][m % 8] -> (a, b)
_S_TABLE = (
    ((1, 1), (2, 1), (1, 0), (2, -1), (1, -1), (2, -1), (1, 0), (2, 1)),
    ((1, 0), (2, 1), (1, 1), (2, 1), (1, 0), (2, -1), (1, -1), (2, -1)),
    ((1, -1), (2, -1), (1, 0), (2, 1), (1, 1), (2, 1), (1, 0), (2, -1)),
    ((1, 0), (2, -1), (1, -1), (2, -1), (1, 0), (2, 1), (1, 1), (2, 1)),
)


@dataclass(frozen=True)
class ResidueClassPair:
    """Unordered pair {i1, i2} of distinct residues mod 4, stored with i1 < i2."""

    i1: int
    i2: int

    def __post_init__(self):
        a, b = int(self.i1), int(self.i2)
        if a not in range(4) or b not in range(4):
            raise ValueError(f"residues must lie in 0..3, got ({a}, {b})")
        if a == b:
            raise ValueError("residues must differ")
        object.__setattr__(self, "i1", min(a, b))
        object.__setattr__(self, "i2", max(a, b))

    @classmethod
    def parse(cls, text: str) -> ResidueClassPair:
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'i1,i2', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    @property
    def odd_difference(self) -> bool:
        return (self.i2 - self.i1) % 2 == 1

    def __iter__(self) -> Iterator[int]:
        return iter((self.i1, self.i2))

    def __str__(self) -> str:
        return f"{self.i1},{self.i2}"


ALL_PAIRS = tuple(ResidueClassPair(a, b) for a in range(4) for b in range(a + 1, 4))
BENT_PAIRS = tuple(p for p in ALL_PAIRS if p.odd_difference)


def _as_pair(p) -> ResidueClassPair:
    return p if isinstance(p, ResidueClassPair) else ResidueClassPair(*p)


def _check_j_m(j: int, m: int) -> None:
    if j not in range(4):
        raise ValueError(f"j must be in 0..3, got {j}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")


def s_sum(j: int, m: int) -> int:
    """Sum of C(m, k) over k = j mod 4, walking one Pascal row exactly."""
    _check_j_m(j, m)
    total = 0
    c = 1
    for k in range(m + 1):
        if k % 4 == j:
            total += c
        c = c * (m - k) // (k + 1)
    return total


def b_m(m: int) -> int:
    return 1 << (m // 2 - 1)


def s_closed(j: int, m: int) -> int:
    _check_j_m(j, m)
    a, b = _S_TABLE[j][m % 8]
    bb = b_m(m)
    return a * bb * bb + b * bb


def _check_even_m(m: int, minimum: int) -> int:
    m = check_m(m)
    if m % 2 or m < minimum:
        raise ValueError(f"m must be even and >= {minimum}, got {m}")
    return m


def residue_mask(m: int, residues) -> np.ndarray:
    w = np.bitwise_count(indices(m)) % 4
    return np.isin(w, list(residues)).astype(np.uint8)


def construct_f(p, m: int) -> TruthTable:
    p = _as_pair(p)
    m = _check_even_m(m, 2)
    return TruthTable.from_values(m, residue_mask(m, (p.i1, p.i2)))


def expected_weight(p, m: int) -> int:
    p = _as_pair(p)
    return s_sum(p.i1, m) + s_sum(p.i2, m)


@dataclass(frozen=True)
class CosetWeightDistribution:
    """Weights of v + c over the 2^(m+1) codewords c of the Hadamard code."""

    m: int
    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_weights(cls, m: int, weights) -> CosetWeightDistribution:
        cnt = Counter(int(w) for w in weights)
        return cls(m, tuple(sorted(cnt.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(w for w, _ in self.counts)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)


def coset_weight_distribution(p, m: int) -> CosetWeightDistribution:
    """Via wt(v + a.x + eps) = 2^(m-1) - (-1)^eps F(a)/2."""
    m = _check_even_m(m, 4)
    spec = wht(construct_f(p, m)).values.astype(np.int64)
    half = 1 << (m - 1)
    weights = np.concatenate([half - spec // 2, half + spec // 2])
    return CosetWeightDistribution.from_weights(m, weights)


def coset_weight_distribution_direct(p, m: int) -> CosetWeightDistribution:
    """Enumerate all codewords a.x + eps and count weights of v + c directly."""
    m = _check_even_m(m, 4)
    v = construct_f(p, m).values
    xs = indices(m)
    n = 1 << m
    weights = []
    for a in range(n):
        c = (np.bitwise_count(xs & np.uint64(a)) & 1).astype(np.uint8)
        w = int(np.count_nonzero(v ^ c))
        weights.append(w)
        weights.append(n - w)
    return CosetWeightDistribution.from_weights(m, weights)


def predicted_duality(p, m: int) -> DualityClass:
    """Duality class of f_{i1,i2} as read off the m mod 8 case table."""
    p = _as_pair(p)
    m = _check_even_m(m, 4)
    if not p.odd_difference:
        return DualityClass.NOT_BENT
    r = m % 8
    if r in (0, 4):
        return DualityClass.NEITHER
    self_dual = {2: {(2, 3), (0, 1)}, 6: {(1, 2), (0, 3)}}[r]
    return DualityClass.SELF_DUAL if (p.i1, p.i2) in self_dual else DualityClass.ANTI_SELF_DUAL


def weight_sign(p, residue: int) -> int:
    """+1 or -1: the sign of B in wt(f) = 2B^2 +/- B, for m = residue (mod 8), residue in {2, 6}."""
    p = _as_pair(p)
    if not p.odd_difference or residue not in (2, 6):
        raise ValueError("weight table covers odd-difference pairs with m = 2, 6 (mod 8)")
    plus_at_2 = (p.i1, p.i2) in {(0, 1), (1, 2)}
    return 1 if plus_at_2 == (residue == 2) else -1


def weight_formula(p, m: int) -> int:
    """wt(f) as 2B^2 +/- B with B = 2^((m-2)/2)."""
    m = _check_even_m(m, 2)
    sign = weight_sign(p, m % 8)
    bb = 1 << ((m - 2) // 2)
    return 2 * bb * bb + sign * bb


def dual_at_zero(p, m: int) -> int:
    """Value of the dual at 0: 1 iff F(0) = 2^m - 2 wt(f) is negative."""
    f0 = (1 << m) - 2 * expected_weight(p, m)
    return int(f0 < 0)


def value_at_zero(p) -> int:
    p = _as_pair(p)
    return int(0 in (p.i1, p.i2))
