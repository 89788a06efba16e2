"""Deciding m-separation in mixed graphs by four equivalent criteria."""
from .augmentation import (
    UndirectedGraph,
    Step,
    Walk,
    augmented_graph,
    collider_connected,
    is_collider_at,
    skeleton,
    u_separated,
)
from .errors import (
    CriterionDisagreement,
    GraphError,
    InstanceTooLarge,
    MalformedVertexName,
    OverlappingSets,
    ParseError,
    SelfLoop,
    UnknownVertex,
)
from .graph import Edge, EdgeKind, MixedGraph, build_graph
from .io import format_graph_file, parse_graph_file
from .separation import (
    Certificate,
    ReducedGraph,
    SeparationDecision,
    SeparationQuery,
    build_reduced_graph,
    decide,
    lemma_boundary_check,
    msep_augmentation,
    msep_district,
    msep_oracle,
    msep_walk,
    oracle_walk,
    partition_star,
)
from .witness import certificate_problems, check_decision, walk_problems

__version__ = "0.1.0"
