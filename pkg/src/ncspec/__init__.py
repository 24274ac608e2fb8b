"""Exact prime spectra of finite-dimensional algebras and the adjointness of
the restriction and extension functors on their closed-set lattices."""

from .exactlin import GF, QQ, FieldSpec, Subspace
from .algebra import (
    Algebra,
    AlgebraElement,
    AlgebraHom,
    Bimodule,
    ValidationError,
    cyclic_group_table,
    direct_product,
    group_algebra,
    identity_hom,
    matrix_algebra,
    quotient_algebra,
    regular_bimodule,
    subalgebra_from_generators,
    symmetric_group_table,
    upper_triangular_algebra,
)
from .ideals import Ideal, UnsupportedCharacteristic, jacobson_radical, two_sided_ideal_generated
from .spectrum import (
    NonSplitCenter,
    RankUncertified,
    all_closed_sets,
    definitional_prime_oracle,
    goldie_rank,
    is_prime,
    spec,
)
from .correspondence import HomAnalysis, analyze_hom, lambda_functor, r_of, rho_functor

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FieldSpec", "Subspace",
    "Algebra", "AlgebraElement", "AlgebraHom", "Bimodule", "ValidationError",
    "cyclic_group_table", "direct_product", "group_algebra", "identity_hom",
    "matrix_algebra", "quotient_algebra", "regular_bimodule",
    "subalgebra_from_generators", "symmetric_group_table", "upper_triangular_algebra",
    "Ideal", "UnsupportedCharacteristic", "jacobson_radical", "two_sided_ideal_generated",
    "NonSplitCenter", "RankUncertified", "all_closed_sets", "definitional_prime_oracle",
    "goldie_rank", "is_prime", "spec",
    "HomAnalysis", "analyze_hom", "lambda_functor", "r_of", "rho_functor",
]
