"""Truncated linear classifiers under sparse adversarial perturbations."""

from ._core import (
    InternalInconsistency,
    ValidationError,
    brute_force_robust,
    empirical_robust_loss,
    encode,
    evaluate_robust,
    log_growth_bound_T,
    lower_sum,
    robust_misclassified,
    run_cli,
    sample_complexity,
    sample_mixture,
    theorem1_bound,
    train,
    trunc_inner,
    tsum,
    universal_constant,
    upper_sum,
)

__all__ = [
    "InternalInconsistency",
    "ValidationError",
    "brute_force_robust",
    "empirical_robust_loss",
    "encode",
    "evaluate_robust",
    "log_growth_bound_T",
    "lower_sum",
    "robust_misclassified",
    "run_cli",
    "sample_complexity",
    "sample_mixture",
    "theorem1_bound",
    "train",
    "trunc_inner",
    "tsum",
    "universal_constant",
    "upper_sum",
]
