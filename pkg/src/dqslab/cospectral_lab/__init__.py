"""Cospectral-mate search, determination verdicts, known families and theorem checks."""
from dqslab.cospectral_lab.hunt import (
    DETERMINED,
    NOT_DETERMINED,
    OUT_OF_SCOPE,
    DqsVerdict,
    MateReport,
    digest,
    hunt_mates,
    prefilter,
    verify_dqs,
)
from dqslab.cospectral_lab.registry import CLAIMS, Claim, Match, registry_lookup
from dqslab.cospectral_lab.theorems import (
    THEOREMS,
    HypothesisViolation,
    TheoremReport,
    load_table,
    run_row,
    verify_theorem,
)

__all__ = [
    "CLAIMS", "DETERMINED", "NOT_DETERMINED", "OUT_OF_SCOPE", "THEOREMS", "Claim",
    "DqsVerdict", "HypothesisViolation", "Match", "MateReport", "TheoremReport", "digest",
    "hunt_mates", "load_table", "prefilter", "registry_lookup", "run_row", "verify_dqs",
    "verify_theorem",
]
