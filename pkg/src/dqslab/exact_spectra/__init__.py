"""Exact A/L/Q characteristic polynomials, invariants and root counting."""
from dqslab.exact_spectra.charpoly import (
    KINDS,
    CharPoly,
    bareiss_determinant,
    charpoly,
    count_roots_geq,
    eigenvalues,
    is_cospectral,
    matrix,
    spanning_tree_count,
    spectrum_text,
)
from dqslab.exact_spectra.invariants import (
    QInvariants,
    power_sums,
    power_sums_closed_form,
    q_invariants,
)

__all__ = [
    "KINDS", "CharPoly", "QInvariants", "bareiss_determinant", "charpoly",
    "count_roots_geq", "eigenvalues", "is_cospectral", "matrix", "power_sums",
    "power_sums_closed_form", "q_invariants", "spanning_tree_count", "spectrum_text",
]
