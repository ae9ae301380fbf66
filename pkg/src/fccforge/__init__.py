"""Distance graphs, covering radii and strict function-correcting codes."""

__version__ = "0.1.0"

from .gf import GF, distance_to_code, field, hamming_distance, hamming_weight, set_distance
from .codes import (
    Code,
    Family,
    binary_golay,
    dual_code,
    dual_distance,
    even_weight,
    extend_parity,
    extended_golay,
    extended_hamming_code,
    from_generator,
    from_list,
    hamming_code,
    is_mds,
    is_perfect,
    maximum_distance,
    min_weight_span_test,
    minimum_distance,
    puncture_at,
    reed_muller1,
    reed_solomon,
    repetition,
)
from .distgraph import (
    DistanceGraph,
    build_alpha_graph,
    component_profile,
    connectivity_threshold,
    export_dot,
    minimum_distance_graph,
)
from .covering import (
    CoveringResult,
    covering_radius,
    covering_radius_coset_leader,
    covering_radius_exact,
    janwa_mattson_bound,
    known_covering_radius,
    rm1_covering_radius,
)
from .fcc import (
    FccEncoding,
    FunctionSpec,
    evaluate,
    feasibility_report,
    mds_redundancy_bound,
    perfect_redundancy_bound,
    simulate_channel,
    strict_feasible,
    two_step_construct,
    verify_fcc,
)
from .mdspath import mds_path, neighbor_step, projection_decode
