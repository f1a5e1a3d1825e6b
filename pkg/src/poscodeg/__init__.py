"""Exact computations around the minimum positive co-degree of r-graphs."""

from .hypergraph import (
    GammaRegion,
    HypergraphError,
    RGraph,
    canonical_form,
    classify_gamma_region,
    exists_embedding,
    exists_homomorphism,
    is_isomorphic,
    min_pos_codegree,
)
from .constructions import WeightedBlowup, instantiate_blowup, named_construction, optimize_blowup_weights
from .enumeration import Family, ForbiddenSpec, enumerate_up_to_iso, induced_family_of_blowup
from .extremal import co_plus_ex_exact, naive_oracle

__version__ = "0.1.0"

__all__ = [
    "GammaRegion", "HypergraphError", "RGraph", "canonical_form", "classify_gamma_region",
    "exists_embedding", "exists_homomorphism", "is_isomorphic", "min_pos_codegree",
    "WeightedBlowup", "instantiate_blowup", "named_construction", "optimize_blowup_weights",
    "Family", "ForbiddenSpec", "enumerate_up_to_iso", "induced_family_of_blowup",
    "co_plus_ex_exact", "naive_oracle",
]
