"""Unmixedness of d-uniform hypergraphs: cover enumeration, structural
criteria on clique-row labelings, and the edge-ideal zero-divisor view."""

__version__ = "0.1.0"

from .characterization import (
    Certificate,
    Witness,
    check_witness,
    graph_neighborhood_condition,
    cross_validate,
    lemma32_check,
    pairwise_matching_condition,
    prop36_hypothesis,
    theorem33_condition,
    villarreal_condition,
)
from .covers import BudgetExceeded, CoverReport, enumerate_minimal_covers, is_unmixed
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    SubmaximalEdge,
    build,
    is_clique,
    is_independent,
    is_minimal_vertex_cover,
    is_vertex_cover,
    neighborhood,
    neighborhood_of,
    skeleton,
    submaximal_edges,
    uniformity,
)
from .ideal import (
    MonomialIdeal,
    contains_squarefree,
    edge_ideal,
    export_ideal,
    is_zero_divisor_sum,
    zero_divisor_oracle,
)
from .instance import InstanceDocument, InstanceError, parse_instance, write_instance
from .partition import (
    Matching,
    PartitionLabeling,
    find_perfect_matching,
    find_starstar_labeling,
    validate_condition_star,
    validate_matching,
    validate_starstar,
)


__all__ = [
    "BudgetExceeded",
    "Certificate",
    "CoverReport",
    "Hypergraph",
    "HypergraphError",
    "InstanceDocument",
    "InstanceError",
    "Matching",
    "MonomialIdeal",
    "PartitionLabeling",
    "SubmaximalEdge",
    "Witness",
    "build",
    "check_witness",
    "contains_squarefree",
    "graph_neighborhood_condition",
    "cross_validate",
    "edge_ideal",
    "enumerate_minimal_covers",
    "export_ideal",
    "find_perfect_matching",
    "find_starstar_labeling",
    "is_clique",
    "is_independent",
    "is_minimal_vertex_cover",
    "is_unmixed",
    "is_vertex_cover",
    "is_zero_divisor_sum",
    "lemma32_check",
    "neighborhood",
    "neighborhood_of",
    "pairwise_matching_condition",
    "parse_instance",
    "prop36_hypothesis",
    "skeleton",
    "submaximal_edges",
    "theorem33_condition",
    "uniformity",
    "validate_condition_star",
    "validate_matching",
    "validate_starstar",
    "villarreal_condition",
    "write_instance",
    "zero_divisor_oracle",
]
