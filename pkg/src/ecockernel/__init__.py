"""Linear kernels for l-Exact Component Order Connectivity."""

from .graph import (
    Graph,
    Instance,
    VertexSet,
    connected_components,
    enumerate_connected_sets,
    iter_connected_sets,
    neighborhood,
    remove_vertices,
)
from .kernel import (
    EcocCrown,
    KernelResult,
    TraceStep,
    apply_crown,
    find_ecoc_crown_via_lp,
    kernelize,
    rule1_size_check,
    rule23_component_reduction,
    validate_ecoc_crown,
)
from .lp import CoveringLp, LpSolution, build_wecoc_lp, classify_vertices, solve_lp_exact
from .matching import BipartiteGraph, VcCrown, find_vc_crown, max_matching

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CoveringLp",
    "EcocCrown",
    "Graph",
    "Instance",
    "KernelResult",
    "LpSolution",
    "TraceStep",
    "VcCrown",
    "VertexSet",
    "apply_crown",
    "build_wecoc_lp",
    "classify_vertices",
    "connected_components",
    "enumerate_connected_sets",
    "find_ecoc_crown_via_lp",
    "find_vc_crown",
    "iter_connected_sets",
    "kernelize",
    "max_matching",
    "neighborhood",
    "remove_vertices",
    "rule1_size_check",
    "rule23_component_reduction",
    "solve_lp_exact",
    "validate_ecoc_crown",
]
