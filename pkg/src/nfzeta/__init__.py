"""nfzeta: number-field invariants, Dedekind zeta evaluation, and family-limit experiments."""

from .analytic import (
    CentralData,
    ConvergenceError,
    DomainError,
    EvalPoint,
    NumericalConsistencyError,
    PoleError,
    central_data,
    clear_caches,
    dedekind_zeta,
    dedekind_zeta_pole_removed,
    dirichlet_L,
    euler_kronecker,
    hurwitz_zeta,
)
from .arith import (
    ContinuedFractionUnit,
    Factorization,
    factorize,
    fundamental_unit,
    is_prime,
    is_squarefree,
    kronecker_symbol,
    prime_power_split,
    primes_up_to,
    squarefree_part,
)
from .classdata import (
    ClassData,
    ResidueValue,
    RoundingGapError,
    brauer_siegel_ratio,
    class_data_discrepancy,
    class_data_imaginary,
    class_data_real,
    class_number_imaginary,
    residue_kappa,
)
from .dbclient import (
    ClientConfig,
    DecodeError,
    FetchResult,
    FieldRecord,
    QuerySpec,
    TransportError,
    cache_lookup,
    fetch,
    load_config,
    to_descriptor,
)
from .family import (
    CSV_HEADER,
    CyclotomicPrimePower,
    EmptyFamilyError,
    ExperimentRow,
    ExperimentTable,
    FamilySpec,
    ImaginaryQuadratic,
    IngestedFamily,
    LimitZeta,
    RealQuadratic,
    SplitConstrained,
    Synthetic,
    TVInvariants,
    ek_limit,
    enumerate_family,
    estimate_tv_invariants,
    limit_zeta,
    run_brauer_siegel,
    run_ek,
    run_theorem1,
    run_theorem2,
    tvz_rhs,
    tvz_tail_bound,
)
from .numberfield import (
    Cyclotomic,
    FieldInvariants,
    Ingested,
    Monogenic,
    Quadratic,
    SplittingProfile,
    UnsupportedKindError,
    dirichlet_coefficients,
    euler_product_coefficients,
    field_id,
    field_invariants,
    fundamental_discriminant,
    fundamental_discriminants_in,
    is_fundamental_discriminant,
    splitting_profile,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "CentralData",
    "ClassData",
    "ClientConfig",
    "ContinuedFractionUnit",
    "ConvergenceError",
    "Cyclotomic",
    "CyclotomicPrimePower",
    "DecodeError",
    "DomainError",
    "EmptyFamilyError",
    "EvalPoint",
    "ExperimentRow",
    "ExperimentTable",
    "Factorization",
    "FamilySpec",
    "FetchResult",
    "FieldInvariants",
    "FieldRecord",
    "ImaginaryQuadratic",
    "Ingested",
    "IngestedFamily",
    "LimitZeta",
    "Monogenic",
    "NumericalConsistencyError",
    "PoleError",
    "Quadratic",
    "QuerySpec",
    "RealQuadratic",
    "ResidueValue",
    "RoundingGapError",
    "SplitConstrained",
    "SplittingProfile",
    "Synthetic",
    "TVInvariants",
    "TransportError",
    "UnsupportedKindError",
    "brauer_siegel_ratio",
    "cache_lookup",
    "central_data",
    "class_data_discrepancy",
    "class_data_imaginary",
    "class_data_real",
    "class_number_imaginary",
    "clear_caches",
    "dedekind_zeta",
    "dedekind_zeta_pole_removed",
    "dirichlet_L",
    "dirichlet_coefficients",
    "ek_limit",
    "enumerate_family",
    "estimate_tv_invariants",
    "euler_kronecker",
    "euler_product_coefficients",
    "factorize",
    "fetch",
    "field_id",
    "field_invariants",
    "fundamental_discriminant",
    "fundamental_discriminants_in",
    "fundamental_unit",
    "hurwitz_zeta",
    "is_fundamental_discriminant",
    "is_prime",
    "is_squarefree",
    "kronecker_symbol",
    "limit_zeta",
    "load_config",
    "prime_power_split",
    "primes_up_to",
    "residue_kappa",
    "run_brauer_siegel",
    "run_ek",
    "run_theorem1",
    "run_theorem2",
    "splitting_profile",
    "squarefree_part",
    "to_descriptor",
    "tvz_rhs",
    "tvz_tail_bound",
]
