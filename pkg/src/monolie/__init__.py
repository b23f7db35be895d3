"""monolie: weight-space analysis of derivation Lie algebras of finite
monomial algebras, and exact reconstruction of the ideal from weight data."""

from .derivations import (
    AutWeightReport,
    DerivationMatrix,
    HomogeneousDerivation,
    WeightDecomposition,
    WeightSpace,
    aut_weight_report,
    candidate_degrees,
    cosupport_steps,
    derivation_matrix,
    inner_weight_dim,
    is_trivial_on_quotient,
    lie_bracket,
    matrix_commutator,
    outer_shape,
    outer_weight_dim,
    perm_symmetries,
    preserves_ideal,
    weight_decomposition,
    weight_dim,
    weight_space,
)
from .errors import (
    DimensionMismatch,
    IdealSyntaxError,
    InconsistentWeightFunction,
    InfiniteAlgebra,
    MissingKey,
    MonolieError,
    NotADerivation,
    NotDownwardClosed,
    NotFull,
    NotInner,
    NotOuter,
    UnsupportedDimension,
    ZeroGenerator,
)
from .ideals import (
    CoSupport,
    MonomialIdeal,
    cosupport,
    ideal_from_cosupport,
    weights_generate_lattice,
)
from .parsing import IdealSource, parse_ideal, parse_ideal_source, render_ideal
from .random_ideals import random_corpus, random_full_finite_ideal
from .reconstruction import (
    RestrictedWeightData,
    WeightFunction,
    extend_restricted,
    iso_check,
    reconstruct_cosupport,
    reconstruct_ideal,
    restricted_weight_data,
    weight_data_iso_check,
    weight_function_of,
)
from .report import AnalysisReport, analyze, render_human, render_machine, staircase_diagram

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AutWeightReport",
    "CoSupport",
    "DerivationMatrix",
    "DimensionMismatch",
    "HomogeneousDerivation",
    "IdealSource",
    "IdealSyntaxError",
    "InconsistentWeightFunction",
    "InfiniteAlgebra",
    "MissingKey",
    "MonolieError",
    "MonomialIdeal",
    "NotADerivation",
    "NotDownwardClosed",
    "NotFull",
    "NotInner",
    "NotOuter",
    "RestrictedWeightData",
    "UnsupportedDimension",
    "WeightDecomposition",
    "WeightFunction",
    "WeightSpace",
    "ZeroGenerator",
    "analyze",
    "aut_weight_report",
    "candidate_degrees",
    "cosupport",
    "cosupport_steps",
    "derivation_matrix",
    "extend_restricted",
    "ideal_from_cosupport",
    "inner_weight_dim",
    "is_trivial_on_quotient",
    "iso_check",
    "lie_bracket",
    "matrix_commutator",
    "outer_shape",
    "outer_weight_dim",
    "parse_ideal",
    "parse_ideal_source",
    "perm_symmetries",
    "preserves_ideal",
    "random_corpus",
    "random_full_finite_ideal",
    "reconstruct_cosupport",
    "reconstruct_ideal",
    "render_human",
    "render_ideal",
    "render_machine",
    "restricted_weight_data",
    "staircase_diagram",
    "weight_data_iso_check",
    "weight_decomposition",
    "weight_dim",
    "weight_function_of",
    "weight_space",
    "weights_generate_lattice",
]
