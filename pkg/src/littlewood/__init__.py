"""Exact norms, unit-ball geometry, and Littlewood 4/3 ratios for 2x2
bilinear forms on the two-dimensional max-norm space."""

__version__ = "0.1.0"

from .forms import (
    BoundaryProfilePoint,
    FormCoefficients,
    InvalidExponent,
    NonFiniteInput,
    NormBranch,
    NormResult,
    ScalarField,
    boundary_profile,
    coeff_lp_norm,
    evaluate_real,
    make_form,
    norm_complex_real_coeffs,
    norm_real,
)
from .geometry import (
    ClassificationResult,
    DualFunctional,
    ExtremeKind,
    ExtremePoint,
    IsExtreme,
    NotExtremePoint,
    OutsideBall,
    SplitWitness,
    Verdict,
    classify,
    dual_norm,
    exposing_functional,
    extreme_points,
    split_witness,
)
from .lemmas import (
    HypothesisNotMet,
    InvalidRegion,
    SignedQuadruple,
    maxig_check,
    maxneg_equiv,
    maxpos_equiv,
    monomax_check,
    tec01_equiv,
    verify_lemma_suite,
)
from .oracle import PhaseGridConfig, oracle_norm_complex, oracle_norm_real
from .ratios import (
    CaseLabel,
    RatioReport,
    ScanConfig,
    ScanReport,
    UncoveredCase,
    ZeroForm,
    classify_complex_case,
    grid_scan,
    is_real_optimizer,
    littlewood_ratio,
    verify_case_bound,
)

__all__ = [
    "__version__",
    "FormCoefficients",
    "ScalarField",
    "NormBranch",
    "NormResult",
    "BoundaryProfilePoint",
    "NonFiniteInput",
    "InvalidExponent",
    "make_form",
    "evaluate_real",
    "norm_real",
    "norm_complex_real_coeffs",
    "boundary_profile",
    "coeff_lp_norm",
    "PhaseGridConfig",
    "oracle_norm_real",
    "oracle_norm_complex",
    "ExtremeKind",
    "ExtremePoint",
    "SplitWitness",
    "Verdict",
    "ClassificationResult",
    "DualFunctional",
    "IsExtreme",
    "OutsideBall",
    "NotExtremePoint",
    "extreme_points",
    "classify",
    "split_witness",
    "exposing_functional",
    "dual_norm",
    "RatioReport",
    "CaseLabel",
    "ScanConfig",
    "ScanReport",
    "ZeroForm",
    "UncoveredCase",
    "littlewood_ratio",
    "is_real_optimizer",
    "classify_complex_case",
    "grid_scan",
    "verify_case_bound",
    "SignedQuadruple",
    "InvalidRegion",
    "HypothesisNotMet",
    "maxpos_equiv",
    "maxneg_equiv",
    "maxig_check",
    "monomax_check",
    "tec01_equiv",
    "verify_lemma_suite",
]
