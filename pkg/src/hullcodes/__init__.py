"""Hulls of linear codes over finite fields, and constructions that change them."""

from .codes import (
    HullReport,
    LinearCode,
    ScalingVector,
    ZeroDual,
    code_sum,
    dual,
    extend_with_dual_word,
    hull,
    hull_oracle,
    is_lcd,
    is_mds,
    is_self_dual,
    is_self_orthogonal,
    make_code,
    minimum_distance,
    parity_check,
    permute,
    scale,
    standard_form,
)
from .constructions import (
    ConstructionReport,
    containment_hull_bound,
    construction1_extend,
    construction1_search,
    corollary_lcd_to_one,
    decompose_form31,
    decompose_formL,
    lemma31_rescale,
    lemma3ab_rescale,
    rs_code,
    sum_hull_predict,
    theorem31_construct,
    theorem42_construct,
)
from .errors import (
    BudgetExceededError,
    DimensionError,
    FieldError,
    FieldMismatchError,
    HullCodesError,
    HypothesisError,
    ParseError,
    ZeroCodeError,
)
from .gf import GF, Felt, Field
from .matgf import MatGF

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
