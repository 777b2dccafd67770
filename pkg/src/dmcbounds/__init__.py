"""Capacity bounds for discrete memoryless channels with invertible positive
channel matrices: a closed-form upper bound with checkable exactness
conditions, reference capacities (iterative and brute-force), competing
published bounds, and the channel families used to exercise them."""

from .bounds import (
    BoundReport,
    Condition,
    back_projected_input,
    capacity_upper_bound,
    check_coarse_condition,
    check_feasibility_condition,
    check_gershgorin_condition,
    check_spectral_condition,
    inverse_row_entropies,
    optimal_output_distribution,
    spectral_surrogates,
)
from .errors import (
    ConvergenceFailure,
    DmcError,
    InputError,
    InvalidParameter,
    InvalidPmf,
    InvalidRange,
    MatrixFormatError,
    NegativeEntry,
    NotConverged,
    NotPositive,
    NotSquare,
    NumericError,
    PreconditionNotMet,
    RowSumViolation,
    SingularMatrix,
    TooLarge,
)
from .families import (
    FamilySpec,
    SplitMix64,
    beta_family,
    bsc,
    build_family,
    fixed_example,
    gamma_family,
    random_sdd_positive,
    relay_miso,
    relay_miso_explicit3,
)
from .matrix import (
    ChannelMatrix,
    InverseAnalysis,
    analyze_inverse,
    dump_matrix_csv,
    entropy_bits,
    gershgorin,
    invert,
    load_matrix_csv,
    min_singular_value,
    mutual_information,
    row_entropies,
    validate_channel,
)
from .reference import (
    CapacityEstimate,
    arimoto_upper_bound,
    blahut_arimoto,
    boyd_chiang_upper_bound,
    grid_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapacityEstimate",
    "ChannelMatrix",
    "Condition",
    "ConvergenceFailure",
    "DmcError",
    "FamilySpec",
    "InputError",
    "InvalidParameter",
    "InvalidPmf",
    "InvalidRange",
    "InverseAnalysis",
    "MatrixFormatError",
    "NegativeEntry",
    "NotConverged",
    "NotPositive",
    "NotSquare",
    "NumericError",
    "PreconditionNotMet",
    "RowSumViolation",
    "SingularMatrix",
    "SplitMix64",
    "TooLarge",
    "analyze_inverse",
    "arimoto_upper_bound",
    "back_projected_input",
    "beta_family",
    "blahut_arimoto",
    "boyd_chiang_upper_bound",
    "bsc",
    "build_family",
    "capacity_upper_bound",
    "check_coarse_condition",
    "check_feasibility_condition",
    "check_gershgorin_condition",
    "check_spectral_condition",
    "dump_matrix_csv",
    "entropy_bits",
    "fixed_example",
    "gamma_family",
    "gershgorin",
    "grid_oracle",
    "invert",
    "inverse_row_entropies",
    "load_matrix_csv",
    "min_singular_value",
    "mutual_information",
    "optimal_output_distribution",
    "random_sdd_positive",
    "relay_miso",
    "relay_miso_explicit3",
    "row_entropies",
    "spectral_surrogates",
    "validate_channel",
]
