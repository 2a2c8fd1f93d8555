"""
Graph utilities and exact packing counters used by the analysis scripts.
"""

from .graphs import Graph, build_graph, generate_named, read_graph
from .packing import (
    classical_packing_count,
    count_packings_direct,
    equality_probe,
    list_packing_function_exact,
    list_packing_function_sampled,
    packing_lower_bound,
)

__all__ = [
    "Graph",
    "build_graph",
    "generate_named",
    "read_graph",
    "classical_packing_count",
    "count_packings_direct",
    "equality_probe",
    "list_packing_function_exact",
    "list_packing_function_sampled",
    "packing_lower_bound",
]
