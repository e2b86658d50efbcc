"""Exact enumeration of integer partitions and verification of partition-sum
decompositions of powers of two."""
from .exact import Rational, binomial, double_factorial, multinomial, pow2
from .identities import (
    ALL_IDS,
    REGISTRY,
    RangeError,
    ScanReport,
    VerificationResult,
    Verdict,
    evaluate_lhs,
    expected_rhs,
    scan,
    term,
    verify,
    verify_delta,
    verify_fine,
)
from .partitions import (
    conjugate,
    enumerate_compositions,
    enumerate_partitions,
    ferrers,
    from_multiplicities,
    multiplicities,
    pad,
    partition_count,
)
from .weights import WeightKind, chain_weight, multinomial_weight, rational_weight, sign_lambda1

__version__ = "0.1.0"
