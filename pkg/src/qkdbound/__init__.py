"""Key-rate lower bounds for a three-state prepare-and-measure QKD protocol.

The sender uses only |0>, |1> and |a> = alpha |0> + beta |1>; the missing
fourth state is compensated by keeping the usually-discarded
mismatched-basis measurement statistics, which constrain the adversary's
collective attack enough to push the noise tolerance to the four-state
level (positive rates up to Q of about 11% on depolarizing channels).

Layout: `entropy` holds the scalar/matrix entropy primitives, `attacks`
the collective-attack model and exact-entropy oracle, `scenarios` the
named noise channels, `estimation` the overlap reconstruction from
statistics, `keyrate` the bound itself, `validation` the randomized
certification harness, and `cli` the command-line front end.
"""

from .attacks import (
    AttackOperator,
    InnerProducts,
    SymmetryReport,
    copying_attack,
    depolarizing_attack,
    exact_conditional_entropy,
    exact_inner_products,
    extremal_depolarizing_attack,
    identity_attack,
    induced_statistics,
    rephased_attack,
    symmetry_report,
)
from .entropy import (
    binary_entropy,
    check_probability,
    hermitian_eigenvalues,
    shannon_entropy,
    von_neumann_entropy,
)
from .errors import (
    AsymmetricAttackError,
    DomainError,
    EigensolverError,
    InconsistentStatisticsError,
    NonPhysicalStateError,
    QkdBoundError,
    ScenarioInfeasibleError,
    StatisticsSchemaError,
    UnitarityError,
    UnphysicalStatisticsError,
)
from .estimation import (
    InnerProductEstimates,
    estimate_inner_products,
    feasible_re12_set,
)
from .keyrate import (
    KeyRateResult,
    bb84_reference_rate,
    keyrate_bound,
    lambda_rho,
    lambda_sigma,
)
from .scenarios import (
    SCENARIO_DESCRIPTIONS,
    SCENARIO_NAMES,
    ObservedStatistics,
    ScenarioSpec,
    depolarizing_statistics,
    scenario_statistics,
)
from .validation import (
    ValidationReport,
    run_validation,
    sample_symmetric_attack,
    trial_attack,
    trial_rng,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricAttackError",
    "AttackOperator",
    "DomainError",
    "EigensolverError",
    "InconsistentStatisticsError",
    "InnerProductEstimates",
    "InnerProducts",
    "KeyRateResult",
    "NonPhysicalStateError",
    "ObservedStatistics",
    "QkdBoundError",
    "SCENARIO_DESCRIPTIONS",
    "SCENARIO_NAMES",
    "ScenarioInfeasibleError",
    "ScenarioSpec",
    "StatisticsSchemaError",
    "SymmetryReport",
    "UnitarityError",
    "UnphysicalStatisticsError",
    "ValidationReport",
    "bb84_reference_rate",
    "binary_entropy",
    "check_probability",
    "copying_attack",
    "depolarizing_attack",
    "depolarizing_statistics",
    "estimate_inner_products",
    "exact_conditional_entropy",
    "exact_inner_products",
    "extremal_depolarizing_attack",
    "feasible_re12_set",
    "hermitian_eigenvalues",
    "identity_attack",
    "induced_statistics",
    "keyrate_bound",
    "lambda_rho",
    "lambda_sigma",
    "rephased_attack",
    "run_validation",
    "sample_symmetric_attack",
    "scenario_statistics",
    "shannon_entropy",
    "symmetry_report",
    "trial_attack",
    "trial_rng",
    "von_neumann_entropy",
]
