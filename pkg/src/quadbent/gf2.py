"""Dense matrices over GF(2).

Rows are stored as Python ints: bit ``j`` of ``rows[i]`` is entry ``(i, j)``.
Column ``j`` corresponds to variable ``x_{j+1}``, matching the truth-table
index convention, so ``A @ x`` on an index is ``sum_i parity(rows[i] & x) << i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 1 or self.ncols < 1:
            raise DimensionError("matrix dimensions must be positive")
        if len(self.rows) != self.nrows:
            raise DimensionError(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if not 0 <= r < limit:
                raise DimensionError("row has bits beyond ncols")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> BitMatrix:
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, nrows: int, ncols: int | None = None) -> BitMatrix:
        """The all-ones matrix J."""
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, ((1 << ncols) - 1,) * nrows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str]) -> BitMatrix:
        """Build from rows of 0/1 entries, or '0'/'1' strings (column 0 first)."""
        if not rows:
            raise DimensionError("empty matrix")
        parsed = [[int(c) for c in r] for r in rows]
        ncols = len(parsed[0])
        packed = []
        for r in parsed:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
            word = 0
            for j, bit in enumerate(r):
                if bit not in (0, 1):
                    raise ValueError(f"entry {bit!r} is not a bit")
                word |= bit << j
            packed.append(word)
        return cls(len(parsed), ncols, tuple(packed))

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        return cls.from_rows([ln.strip() for ln in text.splitlines() if ln.strip()])

    # -- accessors -----------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def to_text(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.to_lists()) + "\n"

    def __str__(self) -> str:
        return self.to_text().rstrip("\n")

    # -- arithmetic ----------------------------------------------------------

    def transpose(self) -> BitMatrix:
        cols = []
        for j in range(self.ncols):
            word = 0
            for i, r in enumerate(self.rows):
                word |= ((r >> j) & 1) << i
            cols.append(word)
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    @property
    def T(self) -> BitMatrix:
        return self.transpose()

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch in addition")
        return BitMatrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return matmul(self, other)

    def apply(self, x: int) -> int:
        """Matrix-vector product on a vector packed as an int (bit j = x_{j+1})."""
        y = 0
        for i, r in enumerate(self.rows):
            y |= (bin(r & x).count("1") & 1) << i
        return y

    def rank(self) -> int:
        rows = list(self.rows)
        rank = 0
        for col in range(self.ncols):
            bit = 1 << col
            pivot = next((k for k in range(rank, len(rows)) if rows[k] & bit), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for k in range(len(rows)):
                if k != rank and rows[k] & bit:
                    rows[k] ^= rows[rank]
            rank += 1
        return rank

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()


def matmul(x: BitMatrix, y: BitMatrix) -> BitMatrix:
    """Product over GF(2): each output row is the XOR of the rows of ``y``
    selected by the set bits of the matching row of ``x``."""
    if x.ncols != y.nrows:
        raise DimensionError(f"cannot multiply {x.nrows}x{x.ncols} by {y.nrows}x{y.ncols}")
    out = []
    for r in x.rows:
        acc = 0
        k = 0
        while r:
            if r & 1:
                acc ^= y.rows[k]
            r >>= 1
            k += 1
        out.append(acc)
    return BitMatrix(x.nrows, y.ncols, tuple(out))


def _require_square(x: BitMatrix) -> None:
    if not x.is_square:
        raise DimensionError(f"expected a square matrix, got {x.nrows}x{x.ncols}")


def is_involution(x: BitMatrix) -> bool:
    _require_square(x)
    return matmul(x, x) == BitMatrix.identity(x.nrows)


def is_alternating(x: BitMatrix) -> bool:
    """Symmetric with zero diagonal; over GF(2) this is the same as X = A + A^T."""
    _require_square(x)
    if any((r >> i) & 1 for i, r in enumerate(x.rows)):
        return False
    return x == x.transpose()


def is_invertible(x: BitMatrix) -> bool:
    _require_square(x)
    return x.rank() == x.nrows


def vector_from_bits(bits: Iterable[int]) -> int:
    """Pack a 0/1 sequence (x_1 first) into an int."""
    word = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not a bit")
        word |= b << j
    return word


def vector_to_bits(word: int, n: int) -> list[int]:
    return [(word >> j) & 1 for j in range(n)]
