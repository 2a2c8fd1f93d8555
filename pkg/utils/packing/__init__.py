"""
Exact counting and minimization of proper list-colouring packings.

Counting reduces packings of size k on G to colourings of G □ K_k; the list
packing function is minimized over intersection patterns of q-assignments.
"""

from .assignments import (
    DEFAULT_PATTERN_BUDGET,
    ListAssignment,
    PatternAssignment,
    assignment_from_json,
    assignment_to_json,
    canonical_pattern,
    constant_assignment,
    count_patterns,
    enumerate_patterns,
    lift_assignment,
    normalize_colors,
    random_assignment,
    read_assignment,
    realize_pattern,
    subset_order,
)
from .bounds import (
    BoundReport,
    alon_furedi_nonzero_bound,
    check_bound_against_count,
    girth8_exponent_margin,
    dz_threshold,
    exact_ceiling,
    girth8_bound,
    list_coloring_lower_bound,
    packing_lower_bound,
    planar_girth_edge_cap,
    tree_packing_value,
)
from .chromatic import METHODS, Polynomial, chromatic_polynomial
from .counting import (
    classical_packing_count,
    complete_graph_packing_count,
    count_fpf_bijections,
    count_list_colorings,
    count_ordered_packings,
    count_packings_direct,
    count_packings_via_product,
    derangements,
    has_proper_packing,
    latin_array_count,
)
from .errors import ConfigError, InvariantViolation, PatternBudgetExceeded
from .extremal import (
    EqualityProbeResult,
    GapRow,
    MinimizationResult,
    PackingNumberResult,
    PositivityTable,
    equality_probe,
    list_packing_function_exact,
    list_packing_function_sampled,
    list_packing_number,
    positivity_table,
)

__version__ = "0.1.0"
__all__ = [
    "DEFAULT_PATTERN_BUDGET",
    "METHODS",
    "BoundReport",
    "ConfigError",
    "EqualityProbeResult",
    "GapRow",
    "InvariantViolation",
    "ListAssignment",
    "MinimizationResult",
    "PackingNumberResult",
    "PatternAssignment",
    "PatternBudgetExceeded",
    "Polynomial",
    "PositivityTable",
    "alon_furedi_nonzero_bound",
    "assignment_from_json",
    "assignment_to_json",
    "canonical_pattern",
    "check_bound_against_count",
    "chromatic_polynomial",
    "classical_packing_count",
    "complete_graph_packing_count",
    "constant_assignment",
    "girth8_exponent_margin",
    "count_fpf_bijections",
    "count_list_colorings",
    "count_ordered_packings",
    "count_packings_direct",
    "count_packings_via_product",
    "count_patterns",
    "derangements",
    "dz_threshold",
    "enumerate_patterns",
    "equality_probe",
    "exact_ceiling",
    "girth8_bound",
    "has_proper_packing",
    "latin_array_count",
    "lift_assignment",
    "list_coloring_lower_bound",
    "list_packing_function_exact",
    "list_packing_function_sampled",
    "list_packing_number",
    "normalize_colors",
    "packing_lower_bound",
    "planar_girth_edge_cap",
    "positivity_table",
    "random_assignment",
    "read_assignment",
    "realize_pattern",
    "subset_order",
    "tree_packing_value",
]
