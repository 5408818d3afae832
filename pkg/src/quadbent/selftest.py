"""Fast end-to-end consistency checks, small m only. Used by ``quadbent selftest``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .boolfn import TruthTable, anf, complement
from .family import (
    ALL_PAIRS,
    BENT_PAIRS,
    coset_weight_distribution,
    coset_weight_distribution_direct,
    construct_f,
    expected_weight,
    predicted_duality,
    s_closed,
    s_sum,
)
from .maiorana import all_splits, detect_mm, witness_identity_holds
from .quadratic import family_form, hou_criterion
from .walsh import DualityClass, dual, duality_class, is_bent, wht


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def defining_sum(t: TruthTable) -> np.ndarray:
    """O(4^m) spectrum straight from the definition."""
    xs = np.arange(1 << t.m, dtype=np.uint64)
    dots = np.bitwise_count(xs[:, None] & xs[None, :]) & 1
    signs = 1 - 2 * ((dots + t.values[None, :].astype(np.uint8)) & 1).astype(np.int64)
    return signs.sum(axis=1)


def _even(max_m: int, lo: int = 4) -> list[int]:
    return list(range(lo, max_m + 1, 2))


def check_closed_forms(max_m: int, seed: int) -> bool:
    return all(s_closed(j, m) == s_sum(j, m) for m in range(2, max(max_m, 32) + 1) for j in range(4))


def check_bentness(max_m: int, seed: int) -> bool:
    return all(is_bent(wht(construct_f(p, m))) == p.odd_difference for m in _even(max_m) for p in ALL_PAIRS)


def check_weights(max_m: int, seed: int) -> bool:
    return all(construct_f(p, m).weight == expected_weight(p, m) for m in _even(max_m, 2) for p in ALL_PAIRS)


def check_anf(max_m: int, seed: int) -> bool:
    for m in _even(max_m):
        pairs = {frozenset({i, j}) for i in range(1, m + 1) for j in range(i + 1, m + 1)}
        singles = {frozenset({i}) for i in range(1, m + 1)}
        if anf(construct_f((2, 3), m)).monomials != pairs:
            return False
        if anf(construct_f((1, 2), m)).monomials != pairs | singles:
            return False
        if complement(construct_f((2, 3), m)) != construct_f((0, 1), m):
            return False
        if complement(construct_f((1, 2), m)) != construct_f((0, 3), m):
            return False
    return True


def check_duality(max_m: int, seed: int) -> bool:
    for m in _even(max_m):
        for p in BENT_PAIRS:
            f = construct_f(p, m)
            cls = duality_class(f)
            if cls != predicted_duality(p, m):
                return False
            if hou_criterion(family_form(p, m)) != (m % 4 != 0) or (cls != DualityClass.NEITHER) != (m % 4 != 0):
                return False
            d = dual(wht(f))
            if dual(wht(d)) != f:
                return False
    return True


def check_cosets(max_m: int, seed: int) -> bool:
    for m in _even(max_m):
        two = {(1 << (m - 1)) - (1 << (m // 2 - 1)), (1 << (m - 1)) + (1 << (m // 2 - 1))}
        for p in ALL_PAIRS:
            dist = coset_weight_distribution(p, m)
            if (dist.support == two) != p.odd_difference:
                return False
            if dist != coset_weight_distribution_direct(p, m):
                return False
    return True


def check_mm(max_m: int, seed: int) -> bool:
    ok = all(
        detect_mm(construct_f(p, m), s) is None for m in _even(min(max_m, 6)) for p in BENT_PAIRS for s in all_splits(m)
    )
    return ok and all(witness_identity_holds(m) for m in _even(max_m))


def check_transform(max_m: int, seed: int) -> bool:
    rng = np.random.default_rng(seed)
    for m in _even(max_m):
        tables = [construct_f(p, m) for p in ALL_PAIRS]
        tables += [TruthTable.from_values(m, rng.integers(0, 2, 1 << m)) for _ in range(10)]
        for t in tables:
            s = wht(t)
            if not np.array_equal(s.values, defining_sum(t)) or s.parseval_sum() != 1 << (2 * m):
                return False
    return True


CHECKS: list[tuple[str, Callable[[int, int], bool]]] = [
    ("closed-form binomial sums", check_closed_forms),
    ("bent iff odd residue difference", check_bentness),
    ("weights equal S(i1)+S(i2)", check_weights),
    ("quadratic ANF identities and complements", check_anf),
    ("duality classes, Hou criterion, dual involution", check_duality),
    ("coset weight distributions", check_cosets),
    ("no MM split; affine witness identity", check_mm),
    ("butterfly equals defining sum; Parseval", check_transform),
]


def run(max_m: int = 8, seed: int = 0) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            results.append(CheckResult(name, bool(fn(max_m, seed))))
        except Exception as exc:  # a crash is a failed check, not a crashed selftest
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
