"""Exact GKM models of affine Springer fibers, Cherednik algebra actions and Dunkl operators."""

from .affine import (
    AffineCharacter,
    AffineWeylElement,
    act_char,
    affine_reflection,
    alcove_profile,
    length,
    multiply,
)
from .cherednik import (
    CherednikParams,
    LaurentElem,
    check_algebra_relations,
    compare_dunkl_truncated,
    rational_dunkl,
    trig_dunkl,
)
from .combinat import alcove_ideal, equivalence_classes, perm_module_character
from .exactfrac import FracElem, PolyElem, frac_arith, residue
from .gkmmodel import (
    GkmClass,
    cell_weights,
    cs_apply,
    ecm_apply,
    membership,
    swap_condition,
    upsilon,
    upsilon_inverse,
    verify_relations,
)
from .rootsys import RootSystem, build_root_system, coxeter_number
from .sl2 import sl2_basis_element, sl2_expand

__version__ = "0.1.0"

__all__ = [
    "act_char",
    "affine_reflection",
    "AffineCharacter",
    "AffineWeylElement",
    "alcove_ideal",
    "alcove_profile",
    "build_root_system",
    "cell_weights",
    "check_algebra_relations",
    "CherednikParams",
    "compare_dunkl_truncated",
    "coxeter_number",
    "cs_apply",
    "ecm_apply",
    "equivalence_classes",
    "frac_arith",
    "FracElem",
    "GkmClass",
    "LaurentElem",
    "length",
    "membership",
    "multiply",
    "perm_module_character",
    "PolyElem",
    "rational_dunkl",
    "residue",
    "RootSystem",
    "sl2_basis_element",
    "sl2_expand",
    "swap_condition",
    "trig_dunkl",
    "upsilon",
    "upsilon_inverse",
    "verify_relations",
]
