"""Linear codes over finite quotient rings F_q[x]/<f(x)>.

Submodules of A^l for A = F[x]/<f>: canonical generator matrices, duals by
direct construction, self-dual and isodual classification, and expansion to
F-linear codes of length l*deg(f).
"""

from ringcodes.codes import (
    BasisDiagnostics,
    Code,
    CodeMatrix,
    CodeWord,
    DivisorBasisInfo,
    direct_product,
    divisor_basis,
    enumerate_codes,
    is_cgm,
    is_divisor_basis,
    membership_witness,
)
from ringcodes.dual import (
    DualResult,
    dual_code,
    dual_oracle,
    dual_word_count,
    gen_mat_dual,
    punctured_dual_check,
    reverse_cgm,
)
from ringcodes.errors import (
    BudgetExceededError,
    CodeFileError,
    ContextMismatchError,
    InvariantViolationError,
    NotADivisorBasisError,
    NotADivisorError,
    RingCodesError,
)
from ringcodes.expansion import (
    FCode,
    FMatrix,
    companion,
    expand_code,
    f_dual,
    f_nullspace,
    f_rref,
    fdual_always_acode,
    fdual_equals_adual,
    fdual_reverse_basis,
    is_acode,
    m_of_g,
    psi,
    word_fvector,
    x_inverse,
    zeta,
    zeta_basis,
)
from ringcodes.fields import FieldCtx, FieldElem
from ringcodes.kernel import BACKEND
from ringcodes.polynomials import (
    NEG_DEG,
    FactorProfile,
    Poly,
    SquarefreeDecomp,
    divisors,
    extgcd,
    factor_profile,
    format_poly,
    gcd,
    is_square,
    monic_polys,
    parse_poly,
    polys_below,
    pow_mod,
    reciprocal,
    sqrt2,
    squarefree_decomposition,
)
from ringcodes.quotient import QuotRing, RingElem, divide_in_ideal
from ringcodes.selfdual import (
    ExistenceReport,
    Length2Class,
    build_selfdual_class3,
    char2_selfdual_family,
    class3_selfdual_conditions,
    class3_witness,
    classify_length2,
    dual_of_length2,
    enumerate_selfdual,
    is_isodual,
    is_self_dual,
    is_self_reciprocal_dual,
    minus_one_is_square,
    selfdual_existence,
    selfdual_single_row,
    selfrecip_single_row,
    srd_length2,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasisDiagnostics",
    "BudgetExceededError",
    "Code",
    "CodeFileError",
    "CodeMatrix",
    "CodeWord",
    "ContextMismatchError",
    "DivisorBasisInfo",
    "DualResult",
    "ExistenceReport",
    "FCode",
    "FMatrix",
    "FactorProfile",
    "FieldCtx",
    "FieldElem",
    "InvariantViolationError",
    "Length2Class",
    "NEG_DEG",
    "NotADivisorBasisError",
    "NotADivisorError",
    "Poly",
    "QuotRing",
    "RingCodesError",
    "RingElem",
    "SquarefreeDecomp",
    "build_selfdual_class3",
    "char2_selfdual_family",
    "class3_selfdual_conditions",
    "class3_witness",
    "classify_length2",
    "companion",
    "direct_product",
    "divide_in_ideal",
    "divisor_basis",
    "divisors",
    "dual_code",
    "dual_of_length2",
    "dual_oracle",
    "dual_word_count",
    "enumerate_codes",
    "enumerate_selfdual",
    "expand_code",
    "extgcd",
    "f_dual",
    "f_nullspace",
    "f_rref",
    "factor_profile",
    "fdual_always_acode",
    "fdual_equals_adual",
    "fdual_reverse_basis",
    "format_poly",
    "gcd",
    "gen_mat_dual",
    "is_acode",
    "is_cgm",
    "is_divisor_basis",
    "is_isodual",
    "is_self_dual",
    "is_self_reciprocal_dual",
    "is_square",
    "m_of_g",
    "membership_witness",
    "minus_one_is_square",
    "monic_polys",
    "parse_poly",
    "polys_below",
    "pow_mod",
    "psi",
    "punctured_dual_check",
    "reciprocal",
    "reverse_cgm",
    "selfdual_existence",
    "selfdual_single_row",
    "selfrecip_single_row",
    "sqrt2",
    "squarefree_decomposition",
    "srd_length2",
    "word_fvector",
    "x_inverse",
    "zeta",
    "zeta_basis",
]
