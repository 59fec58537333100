"""Canonical forms and isomorphism-free graph generation."""
from dqslab.enumerate.canon import canonical_form, canonical_graph, canonical_labelling
from dqslab.enumerate.generate import EXHAUSTIVE_CAP, ScopeError, count, generate, map_subtrees

__all__ = [
    "EXHAUSTIVE_CAP", "ScopeError", "canonical_form", "canonical_graph",
    "canonical_labelling", "count", "generate", "map_subtrees",
]
