"""Robust MST covers: the union of minimum spanning trees over every
(k-1)-vertex deletion of a weighted complete graph, and the k-constructible
graphs that describe them."""

from .connectivity import SeparatorCertificate, local_connectivity, min_separator
from .constructible import (
    ConstructionOrder,
    OrderVerdict,
    check_order,
    construction_order_for,
    embed_weights,
    extend_maximal,
    is_k_constructible,
    is_k_minimal,
)
from .cover import CoverReport, check_monotone, edge_bound, mk_brute, mk_fast
from .errors import DomainError, GraphFormatError, InvariantViolation, RobustMSTError
from .generators import fixture_c4, gen_random_complete, gen_random_order, gen_tight
from .graph import SimpleGraph, WeightedGraph, edge, induced_subgraph, parse_graph, serialize_graph
from .mst import DisjointSets, mst, mst_leaves

__version__ = "0.1.0"
