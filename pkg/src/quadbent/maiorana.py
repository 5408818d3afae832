"""Maiorana-McFarland functions x.phi(y) + g(y): construction, detection per
coordinate split, and the explicit affine map taking the standard form
y1y2 + y3y4 + ... + y_{m-1}y_m to f_{2,3}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .boolfn import TruthTable, apply_affine, check_m
from .family import construct_f
from .gf2 import BitMatrix, is_invertible

MAX_SPLIT_M = 12


class ResourceLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class CoordinateSplit:
    """Partition of the variables 1..m into an x block and a y block of size m/2."""

    m: int
    xset: frozenset[int]

    def __post_init__(self):
        check_m(self.m)
        xs = frozenset(int(v) for v in self.xset)
        if self.m % 2:
            raise ValueError("a split needs even m")
        if len(xs) != self.m // 2 or not xs <= set(range(1, self.m + 1)):
            raise ValueError(f"xset must be {self.m // 2} distinct variables from 1..{self.m}")
        object.__setattr__(self, "xset", xs)

    @property
    def yset(self) -> frozenset[int]:
        return frozenset(range(1, self.m + 1)) - self.xset

    @property
    def half(self) -> int:
        return self.m // 2

    def positions(self) -> np.ndarray:
        """Full-input index for each (y-subindex, x-subindex); shape (2^h, 2^h).

        Sub-indices take the block's variables in increasing order, LSB first.
        """
        xpos = _deposit_table(sorted(self.xset))
        ypos = _deposit_table(sorted(self.yset))
        return ypos[:, None] | xpos[None, :]

    def __str__(self) -> str:
        return f"{sorted(self.xset)}/{sorted(self.yset)}"


def _deposit_table(variables: Sequence[int]) -> np.ndarray:
    k = len(variables)
    sub = np.arange(1 << k, dtype=np.uint64)
    out = np.zeros_like(sub)
    for bit, v in enumerate(variables):
        out |= ((sub >> np.uint64(bit)) & np.uint64(1)) << np.uint64(v - 1)
    return out


def all_splits(m: int) -> Iterator[CoordinateSplit]:
    for xs in itertools.combinations(range(1, m + 1), m // 2):
        yield CoordinateSplit(m, frozenset(xs))


@dataclass(frozen=True)
class MmWitness:
    phi: tuple[int, ...]
    g: TruthTable

    @property
    def is_permutation(self) -> bool:
        return len(set(self.phi)) == len(self.phi)


def _inner(phi: np.ndarray, h: int) -> np.ndarray:
    u = np.arange(1 << h, dtype=np.uint64)
    return (np.bitwise_count(phi[:, None] & u[None, :]) & 1).astype(np.uint8)


def mm_construct(phi: Sequence[int], g: TruthTable, split: CoordinateSplit) -> TruthTable:
    h = split.half
    phi_arr = np.asarray(phi, dtype=np.uint64)
    if phi_arr.shape != (1 << h,):
        raise ValueError(f"phi needs {1 << h} entries, got {phi_arr.shape[0] if phi_arr.ndim else 0}")
    if np.any(phi_arr >= (1 << h)):
        raise ValueError("phi values must lie in [0, 2^(m/2))")
    if g.m != h:
        raise ValueError(f"g must have {h} variables, got {g.m}")
    block = _inner(phi_arr, h) ^ g.values[:, None]
    vals = np.empty(1 << split.m, dtype=np.uint8)
    vals[split.positions().ravel()] = block.ravel()
    return TruthTable.from_values(split.m, vals)


def detect_mm(t: TruthTable, split: CoordinateSplit) -> MmWitness | None:
    """Witness (phi, g) if t = x.phi(y) + g(y) for this split with phi bijective."""
    if t.m != split.m:
        raise ValueError("split and table disagree on m")
    h = split.half
    block = t.values[split.positions()]
    g = block[:, 0]
    phi = np.zeros(1 << h, dtype=np.uint64)
    for j in range(h):
        phi |= (block[:, 1 << j] ^ g).astype(np.uint64) << np.uint64(j)
    if not np.array_equal(_inner(phi, h) ^ g[:, None], block):
        return None
    if np.unique(phi).size != phi.size:
        return None
    return MmWitness(tuple(int(v) for v in phi), TruthTable.from_values(h, g))


def detect_mm_any_split(t: TruthTable) -> tuple[CoordinateSplit, MmWitness] | None:
    if t.m % 2:
        raise ValueError("MM detection needs even m")
    if t.m > MAX_SPLIT_M:
        raise ResourceLimit(f"exhaustive split search capped at m={MAX_SPLIT_M}")
    for split in all_splits(t.m):
        w = detect_mm(t, split)
        if w is not None:
            return split, w
    return None


def standard_mm_form(m: int) -> TruthTable:
    """y1 y2 + y3 y4 + ... + y_{m-1} y_m."""
    if m % 2:
        raise ValueError("needs even m")
    ys = np.arange(1 << m, dtype=np.uint64)
    odd = ys & np.uint64(int("01" * (m // 2), 2))
    even = (ys >> np.uint64(1)) & np.uint64(int("01" * (m // 2), 2))
    return TruthTable.from_values(m, (np.bitwise_count(odd & even) & 1).astype(np.uint8))


def affine_to_mm_witness(m: int) -> tuple[BitMatrix, int]:
    """Substitution y = A x and linear mask c with (standard form)(A x) = f_{2,3}(x) + c.x.

    Row i (1-based): y_i = x_i + x_{i+1} for odd i, y_i = x_i + ... + x_m for even i.
    c selects x_2, x_4, ..., x_m.
    """
    check_m(m)
    if m % 2 or m < 4:
        raise ValueError(f"m must be even and >= 4, got {m}")
    full = (1 << m) - 1
    rows = []
    for i in range(1, m + 1):
        if i % 2:
            rows.append((1 << (i - 1)) | (1 << i))
        else:
            rows.append(full & ~((1 << (i - 1)) - 1))
    a = BitMatrix(m, m, tuple(rows))
    if not is_invertible(a):
        raise ArithmeticError(f"substitution matrix is singular for m={m}")
    c = sum(1 << (i - 1) for i in range(2, m + 1, 2))
    return a, c


def witness_identity_holds(m: int) -> bool:
    a, c = affine_to_mm_witness(m)
    return apply_affine(standard_mm_form(m), a, 0, c, 0) == construct_f((2, 3), m)
