"""Minimal dominating set enumeration for (in)comparability graphs of posets of bounded dimension."""

from .core import (
    ContractError,
    Graph,
    MalformedInputError,
    Poset,
    SearchStats,
    Sink,
    CollectingSink,
    comparability_graph,
    incomparability_graph,
    members,
    poset_from_orders,
    random_poset,
    standard_example,
    vset,
)
from .flashlight import enumerate_mds_incomparability, iter_mds_incomparability
from .flipping import enumerate_mds_flipping, iter_mds_flipping
from .hypergraph import Hypergraph, enumerate_transversals, iter_transversals

__all__ = [
    "CollectingSink",
    "ContractError",
    "Graph",
    "Hypergraph",
    "MalformedInputError",
    "Poset",
    "SearchStats",
    "Sink",
    "comparability_graph",
    "enumerate_mds_flipping",
    "enumerate_mds_incomparability",
    "enumerate_transversals",
    "incomparability_graph",
    "iter_mds_flipping",
    "iter_mds_incomparability",
    "iter_transversals",
    "members",
    "poset_from_orders",
    "random_poset",
    "standard_example",
    "vset",
]
