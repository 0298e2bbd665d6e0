"""Exact verification engine for the determinant structure of 1-D Gaussian
covariance matrices of evenly spaced points: closed-form elimination stages,
the h-factor determinant factorization, its leading spacing-order term, the
simplicial multiset identities behind them, and an exhaustive minor
positivity probe."""

from .exact import (
    BigRational,
    EtaPoly,
    EtaRatFunc,
    TruncatedSeries,
    poly_gcd,
    poly_h,
    series_one_minus_exp,
)
from .multisets import (
    IDENTITY_NAMES,
    IdentityReport,
    LiftDualityError,
    SideConditionError,
    SignedMultiset,
    SimplexSpec,
    enumerate_simplex,
    identity_param_names,
    lift_duality,
    verify_identity,
)
from .neville import (
    CovarianceParams,
    EliminationTrace,
    SymMatrix,
    ZeroPivotError,
    brute_force_det,
    build_covariance,
    diagonal_product,
    neville_eliminate,
)
from .closedform import (
    AgreementReport,
    ClosedFormElement,
    FactoredDeterminant,
    LeadingTerm,
    ai1_grid_holds,
    ai2_grid_holds,
    check_ai1,
    check_ai2,
    closed_form_u,
    factored_determinant,
    leading_term,
    series_determinant,
    superfactorial,
    verify_closed_form,
)
from .tpprobe import MinorIndex, TpReport, all_minors_positive, minor_value

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "EtaPoly",
    "EtaRatFunc",
    "TruncatedSeries",
    "poly_gcd",
    "poly_h",
    "series_one_minus_exp",
    "IDENTITY_NAMES",
    "IdentityReport",
    "LiftDualityError",
    "SideConditionError",
    "SignedMultiset",
    "SimplexSpec",
    "enumerate_simplex",
    "identity_param_names",
    "lift_duality",
    "verify_identity",
    "CovarianceParams",
    "EliminationTrace",
    "SymMatrix",
    "ZeroPivotError",
    "brute_force_det",
    "build_covariance",
    "diagonal_product",
    "neville_eliminate",
    "AgreementReport",
    "ClosedFormElement",
    "FactoredDeterminant",
    "LeadingTerm",
    "ai1_grid_holds",
    "ai2_grid_holds",
    "check_ai1",
    "check_ai2",
    "closed_form_u",
    "factored_determinant",
    "leading_term",
    "series_determinant",
    "superfactorial",
    "verify_closed_form",
    "MinorIndex",
    "TpReport",
    "all_minors_positive",
    "minor_value",
    "__version__",
]
