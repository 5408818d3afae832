"""Boolean functions on F_2^m as bit-packed truth tables, plus ANF conversion.

Index convention: the value of f at input index ``i`` is bit ``i`` of the
table, and variable ``x_j`` (1-based) is bit ``j-1`` of ``i``. Bits are packed
LSB-first into bytes, so bit ``i`` lives in bit ``i % 8`` of byte ``i // 8``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .gf2 import BitMatrix, is_invertible, vector_from_bits

MAX_M = int(os.environ.get("QUADBENT_MAX_M", "24"))


class SingularMatrixError(ValueError):
    pass


class TableFormatError(ValueError):
    pass


def check_m(m: int, max_m: int | None = None) -> int:
    limit = MAX_M if max_m is None else max_m
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool):
        raise TypeError(f"m must be an integer, got {type(m).__name__}")
    if not 1 <= m <= limit:
        raise ValueError(f"m={m} outside supported range [1, {limit}]")
    return int(m)


def _as_mask(v: int | Sequence[int], m: int) -> int:
    word = v if isinstance(v, (int, np.integer)) else vector_from_bits(v)
    word = int(word)
    if not 0 <= word < (1 << m):
        raise ValueError(f"vector {v!r} does not fit in {m} bits")
    return word


def indices(m: int) -> np.ndarray:
    return np.arange(1 << m, dtype=np.uint64)


@dataclass(frozen=True)
class TruthTable:
    m: int
    data: bytes

    def __post_init__(self):
        check_m(self.m)
        nbytes = max(1, (1 << self.m) // 8)
        if len(self.data) != nbytes:
            raise ValueError(f"m={self.m} needs {nbytes} bytes, got {len(self.data)}")
        if self.m < 3 and self.data[0] >> (1 << self.m):
            raise ValueError("padding bits must be zero")

    @classmethod
    def from_values(cls, m: int, values: Iterable[int] | np.ndarray) -> TruthTable:
        m = check_m(m)
        arr = np.asarray(values)
        if arr.shape != (1 << m,):
            raise ValueError(f"expected {1 << m} values, got shape {arr.shape}")
        if arr.dtype != np.bool_:
            if np.any((arr != 0) & (arr != 1)):
                raise ValueError("truth-table values must be 0 or 1")
        return cls(m, np.packbits(arr.astype(np.uint8), bitorder="little").tobytes())

    @classmethod
    def constant(cls, m: int, value: int = 0) -> TruthTable:
        return cls.from_values(m, np.full(1 << check_m(m), value & 1, dtype=np.uint8))

    @cached_property
    def values(self) -> np.ndarray:
        """Unpacked 0/1 vector of length 2^m (read-only)."""
        bits = np.unpackbits(np.frombuffer(self.data, dtype=np.uint8), bitorder="little")
        bits = bits[: 1 << self.m].copy()
        bits.flags.writeable = False
        return bits

    def __len__(self) -> int:
        return 1 << self.m

    def __call__(self, x: int | Sequence[int]) -> int:
        return int(self.values[_as_mask(x, self.m)])

    def __xor__(self, other: TruthTable) -> TruthTable:
        if self.m != other.m:
            raise ValueError("variable counts differ")
        a = np.frombuffer(self.data, dtype=np.uint8)
        b = np.frombuffer(other.data, dtype=np.uint8)
        return TruthTable(self.m, (a ^ b).tobytes())

    @property
    def weight(self) -> int:
        return weight(self)

    @property
    def degree(self) -> int | None:
        return anf(self).degree

    def to_hex(self) -> str:
        return self.data.hex()

    @classmethod
    def from_hex(cls, m: int, text: str) -> TruthTable:
        try:
            raw = bytes.fromhex(text.strip())
        except ValueError as exc:
            raise TableFormatError(f"bad hex payload: {exc}") from None
        return cls(check_m(m), raw)

    def dumps(self) -> str:
        return f"m={self.m}\n{self.to_hex()}\n"

    @classmethod
    def loads(cls, text: str) -> TruthTable:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("m="):
            raise TableFormatError("missing 'm=<int>' header")
        try:
            m = int(lines[0][2:])
        except ValueError:
            raise TableFormatError(f"bad header {lines[0]!r}") from None
        try:
            return cls.from_hex(m, "".join(lines[1:]))
        except ValueError as exc:
            raise TableFormatError(str(exc)) from None

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def read(cls, path: str | Path) -> TruthTable:
        return cls.loads(Path(path).read_text())

    def __repr__(self) -> str:
        hx = self.to_hex()
        if len(hx) > 32:
            hx = hx[:32] + "..."
        return f"TruthTable(m={self.m}, hex={hx})"


@dataclass(frozen=True)
class Anf:
    """XOR of monomials; each monomial is a frozenset of 1-based variable indices."""

    m: int
    monomials: frozenset[frozenset[int]]

    def __post_init__(self):
        check_m(self.m)
        mons = frozenset(frozenset(mon) for mon in self.monomials)
        for mon in mons:
            if any(not 1 <= v <= self.m for v in mon):
                raise ValueError(f"monomial {sorted(mon)} uses a variable outside 1..{self.m}")
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def from_terms(cls, m: int, terms: Iterable[Iterable[int]]) -> Anf:
        """Build from monomials given as iterables; repeated terms cancel mod 2."""
        acc: set[frozenset[int]] = set()
        for t in terms:
            acc ^= {frozenset(t)}
        return cls(m, frozenset(acc))

    @property
    def degree(self) -> int | None:
        """Max monomial size; ``None`` for the zero function."""
        if not self.monomials:
            return None
        return max(len(mon) for mon in self.monomials)

    def coefficients(self) -> np.ndarray:
        coef = np.zeros(1 << self.m, dtype=np.uint8)
        for mon in self.monomials:
            coef[sum(1 << (v - 1) for v in mon)] = 1
        return coef

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        terms = sorted(self.monomials, key=lambda s: (len(s), sorted(s)))
        return " + ".join("1" if not t else "".join(f"x{v}" for v in sorted(t)) for t in terms)


def from_predicate(m: int, pred: Callable[[int], int]) -> TruthTable:
    m = check_m(m)
    return TruthTable.from_values(m, np.fromiter((pred(i) & 1 for i in range(1 << m)), dtype=np.uint8, count=1 << m))


def weight(t: TruthTable) -> int:
    return int(np.bitwise_count(np.frombuffer(t.data, dtype=np.uint8)).sum())


def anf_coefficients(t: TruthTable) -> np.ndarray:
    return _kernels.mobius(t.values.copy())


def anf(t: TruthTable) -> Anf:
    coef = anf_coefficients(t)
    mons = frozenset(
        frozenset(j + 1 for j in range(t.m) if (idx >> j) & 1) for idx in np.flatnonzero(coef).tolist()
    )
    return Anf(t.m, mons)


def from_anf(a: Anf) -> TruthTable:
    # the binary Moebius transform is its own inverse
    return TruthTable.from_values(a.m, _kernels.mobius(a.coefficients()))


def complement(t: TruthTable) -> TruthTable:
    return TruthTable.from_values(t.m, t.values ^ 1)


def linear_table(m: int, c: int | Sequence[int], eps: int = 0) -> TruthTable:
    """The affine function c.x + eps."""
    return TruthTable.from_values(m, _kernels.masked_parity(indices(m), _as_mask(c, m)) ^ (eps & 1))


def transform_indices(a: BitMatrix, m: int) -> np.ndarray:
    """Image ``A x`` of every input index ``x``, as a uint64 index array."""
    xs = indices(m)
    out = np.zeros_like(xs)
    for i, row in enumerate(a.rows):
        out |= _kernels.masked_parity(xs, row).astype(np.uint64) << np.uint64(i)
    return out


def apply_affine(
    t: TruthTable,
    a: BitMatrix,
    b: int | Sequence[int] = 0,
    c: int | Sequence[int] = 0,
    eps: int = 0,
) -> TruthTable:
    """Return x -> t(Ax + b) + c.x + eps."""
    m = t.m
    if (a.nrows, a.ncols) != (m, m):
        raise ValueError(f"A must be {m}x{m}, got {a.nrows}x{a.ncols}")
    if not is_invertible(a):
        raise SingularMatrixError("affine map needs an invertible matrix")
    src = transform_indices(a, m) ^ np.uint64(_as_mask(b, m))
    vals = t.values[src] ^ _kernels.masked_parity(indices(m), _as_mask(c, m)) ^ np.uint8(eps & 1)
    return TruthTable.from_values(m, vals)
