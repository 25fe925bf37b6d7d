"""Exact counting of non-negative integer solutions of
a_1 x_1 + ... + a_k x_k = n, with proven two-sided polynomial bounds,
Frobenius number machinery, and a reproducible verification harness.
"""

from .bfnum import BFQuery, bf_explicit, bf_query, bf_recursive
from .bounds import (
    BoundReport,
    BoundSequences,
    blom_froberg_bounds,
    bound_sequences,
    inequality_a,
    inequality_b_lower,
    main_term,
    prefix_sum_count,
    relaxed_count_bounds,
    relaxed_count_chain,
    relaxed_shift_sequence,
)
from .core import (
    BudgetExceededError,
    CoefficientTuple,
    DenumerantError,
    DomainError,
    ExactRational,
    GcdChain,
    IndexRangeError,
    InvariantViolationError,
    NotApplicableError,
    NotCoprimeError,
    NotInvertibleError,
    TooShortTupleError,
    format_rational,
    gcd_chain,
    integer_part,
    parse_rational,
    reduce_by_gcd,
)
from .exact import (
    CountResult,
    denumerant,
    extended_count,
    modular_inverse,
    oracle_count,
    popoviciu,
)
from .frobenius import FrobeniusReport, bound_frobenius, frobenius_exact
from .powersum import (
    PowerSumQuery,
    check_sum_bounds,
    power_sum,
    refined_upper_bound,
)
from .sweep import (
    SUITE_NAMES,
    Failure,
    SplitMix64,
    SweepConfig,
    VerificationReport,
    run_verify,
    shrink_failure,
)

__version__ = "0.1.0"

__all__ = [
    "BFQuery",
    "BoundReport",
    "BoundSequences",
    "BudgetExceededError",
    "CoefficientTuple",
    "CountResult",
    "DenumerantError",
    "DomainError",
    "ExactRational",
    "Failure",
    "FrobeniusReport",
    "GcdChain",
    "IndexRangeError",
    "InvariantViolationError",
    "NotApplicableError",
    "NotCoprimeError",
    "NotInvertibleError",
    "PowerSumQuery",
    "SUITE_NAMES",
    "SplitMix64",
    "SweepConfig",
    "TooShortTupleError",
    "VerificationReport",
    "bf_explicit",
    "bf_query",
    "bf_recursive",
    "blom_froberg_bounds",
    "bound_frobenius",
    "bound_sequences",
    "check_sum_bounds",
    "denumerant",
    "extended_count",
    "format_rational",
    "frobenius_exact",
    "gcd_chain",
    "inequality_a",
    "inequality_b_lower",
    "integer_part",
    "main_term",
    "modular_inverse",
    "oracle_count",
    "parse_rational",
    "popoviciu",
    "power_sum",
    "prefix_sum_count",
    "reduce_by_gcd",
    "refined_upper_bound",
    "relaxed_count_bounds",
    "relaxed_count_chain",
    "relaxed_shift_sequence",
    "run_verify",
    "shrink_failure",
]
