"""Strong geodetic set toolkit.

Exact solving on small graphs, closed forms for complete bipartite,
crown, and hypercube families, and constructive verified witnesses.
"""

from .construct import (
    ConstructionResult,
    HypercubeConstructionPlan,
    build_bipartite_witness,
    build_crown_witness,
    build_hypercube_basic,
    build_hypercube_improved,
)
from .errors import (
    AssignmentInfeasible,
    DiameterTooSmall,
    DimensionTooLarge,
    Disconnected,
    DisconnectedFamily,
    GeodesicExplosion,
    IndexOutOfRange,
    MalformedWitness,
    OutOfRange,
    ParseError,
    SgeoError,
    SizeLimitExceeded,
    Unreachable,
)
from .formulas import (
    big_F,
    big_G,
    f_val,
    g_val,
    hypercube_lower,
    hypercube_upper_basic,
    hypercube_upper_basic_at,
    hypercube_upper_improved,
    hypercube_upper_improved_at,
    s_val,
    sg_balanced,
    sg_bipartite_closed,
    sg_bipartite_opt,
    sg_complete_bipartite,
    sg_crown,
    small_hypercube_known,
)
from .graph import (
    DEFAULT_GEODESIC_CAP,
    Graph,
    complete_bipartite,
    count_geodesics,
    crown,
    diameter,
    distances_from,
    enumerate_geodesics,
    from_edge_list,
    graph_from_edges,
    hypercube,
    is_connected,
    is_geodesic,
    to_edge_list,
)
from .results import CrownSplit, FormulaTrace, SgResult
from .solver import forced_vertices, lower_bound_general, sg_exact
from .verify import (
    CoverageReport,
    PairGeodesic,
    Witness,
    is_strong_geodetic_set,
    make_witness,
    report_to_dict,
    verify_witness,
    witness_from_dict,
    witness_to_dict,
)

__all__ = [name for name in dir() if not name.startswith("_")]
