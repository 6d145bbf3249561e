"""Combinatorial 1-plane drawings and exact clique-count checks."""

from .checks import (
    CycleSideReport,
    K4Class,
    RichnessReport,
    check_rich,
    classify_k4_drawing,
    cycle_sides,
    find_conflict_triangles,
    lemma_audit,
)
from .drawing import (
    DrawingError,
    FaceCensus,
    OnePlaneDrawing,
    SkeletonMap,
    biedl_check,
    is_triangulated,
    plane_map,
    skeleton,
    trace_faces,
    validate_drawing,
)
from .graph import (
    CliqueCensus,
    ConnectivityReport,
    GraphError,
    SeparatorCensus,
    SimpleGraph,
    build_graph,
    clique_census,
    count_cliques,
    enumerate_3_separators,
    vertex_connectivity,
)
from .io import FormatError, format_1pl, format_edge_list, parse_1pl, parse_edge_list, roundtrip
from .reports import IdentityReport
from .theorems import (
    BoundReport,
    euler_face_relation,
    gollin_triangle_identity,
    lemma34_identity,
    skeleton_f3_lower,
    theorem_bounds,
)

__version__ = "0.1.0"
