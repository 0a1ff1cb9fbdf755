"""Weak and strong coloring numbers of geometric intersection graphs."""

from .bounds import (
    BoundCase,
    generic_theorem_upper,
    lb_value,
    property_p_parameters,
    scol_upper,
    thm_weak_upper,
    wcol_recurrence_upper,
)
from .constructions import (
    ScaffoldResult,
    build_theorem_lb_instance,
    gen_fprime,
    gen_hprime,
    lift_dimension,
    scaffold_boxes,
    scaffold_graph,
    touching_lift,
)
from .exact import coloring_number, scol_exact, wcol_exact
from .geometry import (
    Ball,
    Box,
    Representation,
    diam_sq,
    inflate,
    interiors_overlap,
    intersects,
    is_comparable_boxes,
    is_m_shrinking,
    side_length,
    thinness,
)
from .graph import Graph, Ordering, intersection_graph, sizewise_order
from .radius import PropertyPSpec, check_property_P, lambda_r, size_radius
from .reach import (
    colnum_ordered,
    decr,
    decreasing_tree_depth,
    sreach,
    vertex_separation,
    verify_diameter_condition,
    wreach,
)

__all__ = [
    "Ball", "BoundCase", "Box", "Graph", "Ordering", "PropertyPSpec", "Representation", "ScaffoldResult",
    "build_theorem_lb_instance", "check_property_P", "colnum_ordered", "coloring_number", "decr",
    "decreasing_tree_depth", "diam_sq", "gen_fprime", "gen_hprime", "generic_theorem_upper", "inflate",
    "interiors_overlap", "intersection_graph", "intersects", "is_comparable_boxes", "is_m_shrinking",
    "lambda_r", "lb_value", "lift_dimension", "property_p_parameters", "scaffold_boxes", "scaffold_graph",
    "scol_exact", "scol_upper", "side_length", "size_radius", "sizewise_order", "sreach", "thinness",
    "thm_weak_upper", "touching_lift", "vertex_separation", "verify_diameter_condition", "wcol_exact",
    "wcol_recurrence_upper", "wreach",
]
