"""Quadratic bent functions defined by Hamming weight mod 4."""

from .boolfn import Anf, TruthTable, anf, apply_affine, complement, from_anf, from_predicate, weight
from .family import (
    ALL_PAIRS,
    BENT_PAIRS,
    CosetWeightDistribution,
    ResidueClassPair,
    coset_weight_distribution,
    construct_f,
    predicted_duality,
    s_closed,
    s_sum,
)
from .gf2 import BitMatrix
from .quadratic import QuadraticForm, family_form, hou_criterion
from .walsh import DualityClass, WalshSpectrum, dual, duality_class, is_bent, wht

__version__ = "0.1.0"
