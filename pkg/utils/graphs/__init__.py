"""
Graph core: simple graphs on dense integer vertices, named families,
the Cartesian product with a complete graph, girth, and graph I/O.
"""

from .core import (
    ACYCLIC,
    FAMILIES,
    Graph,
    build_graph,
    cartesian_with_complete,
    from_networkx,
    generate_named,
    girth,
    product_coordinates,
    product_vertex,
)
from .canonical import canonical_form
from .formats import (
    GRAPH_FORMATS,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    read_edge_list,
    read_graph,
    read_graph6,
)

__version__ = "0.1.0"
__all__ = [
    "ACYCLIC",
    "FAMILIES",
    "GRAPH_FORMATS",
    "Graph",
    "build_graph",
    "cartesian_with_complete",
    "canonical_form",
    "from_networkx",
    "generate_named",
    "girth",
    "product_coordinates",
    "product_vertex",
    "format_edge_list",
    "parse_edge_list",
    "parse_graph6",
    "read_edge_list",
    "read_graph",
    "read_graph6",
]
