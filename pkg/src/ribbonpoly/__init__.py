"""Exact link-diagram invariants via ribbon graphs.

Parse a planar diagram, build the ribbon graph of any Kauffman state,
compute its three-variable polynomial by three independent methods, and
specialize to the Kauffman bracket and Jones polynomial.
"""

from .bracket import (
    Adequacy,
    GenusCertificate,
    SpanBounds,
    TuraevGenusBound,
    adequacy,
    bracket_statesum,
    bracket_via_brt,
    genus_invariance_certificate,
    jones,
    span_bounds,
    turaev_genus_bound,
)
from .brt import (
    ActivityRecord,
    brt_recursive,
    brt_subgraph,
    brt_tree_expansion,
    enumerate_spanning_trees,
)
from .diagram import (
    DisconnectedDiagram,
    LabelError,
    PDSyntaxError,
    PlanarDiagram,
    State,
    StateCircles,
    TooManyCrossings,
    dual_state,
    mirror,
    parse_braid,
    parse_pd,
    trace_state_circles,
    writhe,
)
from .polynomials import (
    DELTA,
    LaurentA,
    LaurentT,
    MultiPoly,
    NegativeDeltaExponent,
    specialize_brt,
    substitute_t,
)
from .ribbon import (
    DisconnectedGraph,
    GraphCounts,
    LoopContraction,
    RibbonGraph,
    UnknownEdge,
    isolated_vertex_graph,
)
from .state_ribbon import (
    all_a,
    all_b,
    build_state_graph,
    is_alternating_diagram,
    turaev_genus_of_diagram,
)

__all__ = [
    "Adequacy",
    "ActivityRecord",
    "DELTA",
    "DisconnectedDiagram",
    "DisconnectedGraph",
    "GenusCertificate",
    "GraphCounts",
    "LabelError",
    "LaurentA",
    "LaurentT",
    "LoopContraction",
    "MultiPoly",
    "NegativeDeltaExponent",
    "PDSyntaxError",
    "PlanarDiagram",
    "RibbonGraph",
    "SpanBounds",
    "State",
    "StateCircles",
    "TooManyCrossings",
    "TuraevGenusBound",
    "UnknownEdge",
    "adequacy",
    "all_a",
    "all_b",
    "bracket_statesum",
    "bracket_via_brt",
    "brt_recursive",
    "brt_subgraph",
    "brt_tree_expansion",
    "build_state_graph",
    "dual_state",
    "enumerate_spanning_trees",
    "genus_invariance_certificate",
    "is_alternating_diagram",
    "isolated_vertex_graph",
    "jones",
    "mirror",
    "parse_braid",
    "parse_pd",
    "span_bounds",
    "specialize_brt",
    "substitute_t",
    "trace_state_circles",
    "turaev_genus_bound",
    "turaev_genus_of_diagram",
    "writhe",
]

__version__ = "0.1.0"
