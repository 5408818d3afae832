"""Quadratic forms f(x) = x Q x^T + L.x + eps over GF(2), Q strictly upper triangular."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .boolfn import Anf, TruthTable, indices
from .family import ResidueClassPair, _as_pair, _check_even_m
from .gf2 import BitMatrix, is_alternating, is_involution, matmul


class NotQuadratic(ValueError):
    pass


class NotQuadraticFamily(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticForm:
    m: int
    q: BitMatrix
    linear: int = 0
    eps: int = 0

    def __post_init__(self):
        if (self.q.nrows, self.q.ncols) != (self.m, self.m):
            raise ValueError(f"Q must be {self.m}x{self.m}")
        for i, row in enumerate(self.q.rows):
            if row & ((1 << (i + 1)) - 1):
                raise ValueError("Q must be strictly upper triangular; use from_matrix to fold")
        if not 0 <= self.linear < (1 << self.m):
            raise ValueError("linear part does not fit in m bits")
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")

    @classmethod
    def from_matrix(cls, m: int, mat: BitMatrix, linear: int = 0, eps: int = 0) -> QuadraticForm:
        """Fold an arbitrary coefficient matrix: entries (i,j) and (j,i) merge into
        the upper triangle, diagonal entries become linear terms since x_i^2 = x_i."""
        upper = []
        lin = linear
        for i in range(m):
            row = 0
            for j in range(i + 1, m):
                row |= (mat[i, j] ^ mat[j, i]) << j
            upper.append(row)
            lin ^= mat[i, i] << i
        return cls(m, BitMatrix(m, m, tuple(upper)), lin, eps)

    @property
    def linear_bits(self) -> list[int]:
        return [(self.linear >> j) & 1 for j in range(self.m)]

    def summary(self) -> dict:
        return {
            "Q": [("".join(str(b) for b in row)) for row in self.q.to_lists()],
            "L": "".join(str(b) for b in self.linear_bits),
            "eps": self.eps,
        }


def upper_ones(m: int) -> BitMatrix:
    """All-ones strictly upper triangular m x m matrix."""
    full = (1 << m) - 1
    return BitMatrix(m, m, tuple(full & ~((1 << (i + 1)) - 1) for i in range(m)))


def from_anf(a: Anf) -> QuadraticForm:
    if a.degree is not None and a.degree > 2:
        raise NotQuadratic(f"degree {a.degree} > 2")
    m = a.m
    rows = [0] * m
    linear = 0
    eps = 0
    for mon in a.monomials:
        vs = sorted(v - 1 for v in mon)
        if len(vs) == 0:
            eps = 1
        elif len(vs) == 1:
            linear |= 1 << vs[0]
        else:
            rows[vs[0]] |= 1 << vs[1]
    return QuadraticForm(m, BitMatrix(m, m, tuple(rows)), linear, eps)


def family_form(p, m: int) -> QuadraticForm:
    """Closed form for the four bent members: shared Q, with L and eps per pair."""
    p = _as_pair(p)
    m = _check_even_m(m, 4)
    if not p.odd_difference:
        raise NotQuadraticFamily(f"pair ({p}) has even difference")
    all_linear = (1 << m) - 1
    linear, eps = {
        (2, 3): (0, 0),
        (1, 2): (all_linear, 0),
        (0, 1): (0, 1),
        (0, 3): (all_linear, 1),
    }[(p.i1, p.i2)]
    return QuadraticForm(m, upper_ones(m), linear, eps)


def symplectic(q: QuadraticForm) -> BitMatrix:
    return q.q + q.q.T


def hou_criterion(q: QuadraticForm) -> bool:
    """(Q+Q^T)^2 = I and (Q+Q^T) Q (Q+Q^T) + Q^T alternating. Matrix algebra only."""
    return hou_conditions(q) == (True, True)


def hou_conditions(q: QuadraticForm) -> tuple[bool, bool]:
    b = symplectic(q)
    inv = is_involution(b)
    alt = is_alternating(matmul(matmul(b, q.q), b) + q.q.T)
    return inv, alt


def evaluate(q: QuadraticForm) -> TruthTable:
    xs = indices(q.m)
    vals = _kernels.masked_parity(xs, q.linear) ^ np.uint8(q.eps)
    for i, row in enumerate(q.q.rows):
        if row:
            xi = ((xs >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
            vals ^= xi & _kernels.masked_parity(xs, row)
    return TruthTable.from_values(q.m, vals)


__all__ = [
    "NotQuadratic",
    "NotQuadraticFamily",
    "QuadraticForm",
    "ResidueClassPair",
    "evaluate",
    "family_form",
    "from_anf",
    "hou_conditions",
    "hou_criterion",
    "symplectic",
    "upper_ones",
]
