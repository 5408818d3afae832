"""Walsh-Hadamard spectra, bentness, duals and self-duality classes."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .boolfn import TruthTable, anf, complement

MAX_SPECTRUM_M = 30


class NotBentInput(ValueError):
    pass


class DualityClass(str, enum.Enum):
    SELF_DUAL = "SelfDual"
    ANTI_SELF_DUAL = "AntiSelfDual"
    NEITHER = "Neither"
    NOT_BENT = "NotBent"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    m: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.int32)
        if vals.shape != (1 << self.m,):
            raise ValueError(f"spectrum for m={self.m} needs {1 << self.m} entries")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __eq__(self, other):
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.m, self.values.tobytes()))

    def __getitem__(self, a: int) -> int:
        return int(self.values[a])

    def parseval_sum(self) -> int:
        v = self.values.astype(np.int64)
        return int(np.dot(v, v))

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "values": self.values.tolist()})

    @classmethod
    def from_json(cls, text: str) -> WalshSpectrum:
        obj = json.loads(text)
        return cls(int(obj["m"]), np.asarray(obj["values"]))


def wht(t: TruthTable) -> WalshSpectrum:
    """F(a) = sum_x (-1)^(f(x) + a.x), by the in-place butterfly."""
    if t.m > MAX_SPECTRUM_M:
        raise ValueError(f"spectrum width is 32-bit; m={t.m} exceeds {MAX_SPECTRUM_M}")
    signed = 1 - 2 * t.values.astype(np.int32)
    return WalshSpectrum(t.m, _kernels.fwht(signed))


def is_bent(s: WalshSpectrum) -> bool:
    if s.m % 2:
        return False
    return bool(np.all(np.abs(s.values) == (1 << (s.m // 2))))


def dual(s: WalshSpectrum) -> TruthTable:
    """The bent function g with F(y) = 2^(m/2) (-1)^g(y)."""
    if not is_bent(s):
        raise NotBentInput("dual is only defined for bent spectra")
    return TruthTable.from_values(s.m, (s.values < 0).astype(np.uint8))


def duality_class(t: TruthTable, fast: bool = False) -> DualityClass:
    """Classify ``t`` by comparing it with its dual.

    With ``fast=True`` and a quadratic ``t`` whose Hou matrix criterion holds,
    only position 0 of the dual is compared; otherwise whole tables are.
    """
    s = wht(t)
    if not is_bent(s):
        return DualityClass.NOT_BENT
    if fast:
        from .quadratic import NotQuadratic, from_anf, hou_criterion

        try:
            form = from_anf(anf(t))
        except NotQuadratic:
            form = None
        if form is not None and hou_criterion(form):
            dual0 = int(s.values[0] < 0)
            return DualityClass.SELF_DUAL if dual0 == t(0) else DualityClass.ANTI_SELF_DUAL
    d = dual(s)
    if d == t:
        return DualityClass.SELF_DUAL
    if d == complement(t):
        return DualityClass.ANTI_SELF_DUAL
    return DualityClass.NEITHER
