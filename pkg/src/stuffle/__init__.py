"""Stuffle (quasi-shuffle) products of words over {z_k}, their expansion
formulas, and truncated-series evaluation of multiple zeta values."""
from .algebra import (
    EMPTY,
    DomainError,
    LinComb,
    SurjectionPattern,
    enumerate_patterns,
    length,
    oracle_product,
    pattern_count,
    product,
    stuffle,
    stuffle_star,
    weight,
    word,
    word_power,
)
from .formulas import (
    AdmissibilityError,
    GeneralProductSpec,
    GWordSet,
    ReductionStats,
    cor_1_1_expand,
    cor_1_2_expand,
    enumerate_G,
    index_image,
    lemma_0_2_expand,
    lemma_0_22_expand,
    recursive_expand,
    reduce_general,
    simple_product_closed,
    zeta_stuffle_formula_1_1,
)
from .numeval import EvalConfig, Estimate, ZetaIndex, apply_Z, eval_zeta, eval_zeta_star

__version__ = "0.1.0"
