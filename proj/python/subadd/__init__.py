"""Subadditive and periodic sequence analysis."""

from ._subadd import (
    Interpolant,
    audit_subadditivity,
    constant_partition,
    decompose,
    epsilon_for_period,
    fekete_estimate,
    generate,
    hermite_hadamard_bounds,
    is_subadditive,
    partial_sum_profile,
    ratio_infimum,
    run_cli,
    scan_periods,
    subadditive_envelope,
    verify_maximality,
)

__all__ = [
    "Interpolant",
    "audit_subadditivity",
    "constant_partition",
    "decompose",
    "epsilon_for_period",
    "fekete_estimate",
    "generate",
    "hermite_hadamard_bounds",
    "is_subadditive",
    "partial_sum_profile",
    "ratio_infimum",
    "run_cli",
    "scan_periods",
    "subadditive_envelope",
    "verify_maximality",
]
