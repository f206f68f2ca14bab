from dlmkit.core.graph import (
    MAX_VERTICES,
    DistanceTable,
    Graph,
    add_edge,
    complement,
    complete_graph,
    components,
    connected_component_count,
    diameter,
    disjoint_union,
    distance_table,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_connected,
    join,
    relabel,
    remove_edge,
    transmissions,
)
from dlmkit.core.graph6 import ingest_graph6_stream, parse_graph6, to_graph6

__all__ = [
    "MAX_VERTICES",
    "DistanceTable",
    "Graph",
    "add_edge",
    "complement",
    "complete_graph",
    "components",
    "connected_component_count",
    "diameter",
    "disjoint_union",
    "distance_table",
    "empty_graph",
    "from_edges",
    "induced_subgraph",
    "is_connected",
    "join",
    "relabel",
    "remove_edge",
    "transmissions",
    "ingest_graph6_stream",
    "parse_graph6",
    "to_graph6",
]
