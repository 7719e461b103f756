"""Exact combinatorics workbench: cover ideals, symbolic powers, and
vertex decomposability of simplicial complexes and hypergraphs."""

from .complexes import (
    AttachmentRecord,
    Cycle,
    SimplicialComplex,
    SkeletonSpec,
    attach_skeletons,
    build_skeleton_complex,
    delete,
    good_leaf_order,
    is_cycle_cover,
    is_forest,
    is_good_leaf,
    is_unmixed,
    link,
    minimum_cycle_covers,
    skeleton,
    special_cycles,
)
from .decompose import VDResult, VDWitness, is_shedding_vertex, vd_check, verify_certificate
from .errors import BudgetExceeded, InternalCheckFailed, MovePatternExhausted, TraceInvalid
from .expansion import (
    PolarizationReport,
    WeightedHypergraph,
    check_star_condition,
    expand_edge,
    expand_hypergraph,
    uniform_weights,
    verify_polarization_identity,
    weighted_from_record,
)
from .homology import (
    hochster_regularity,
    is_cohen_macaulay,
    reduced_betti,
    verify_theorem_b,
)
from .hypergraphs import (
    Hypergraph,
    contract_vertex,
    delete_vertex,
    from_complex,
    independence_complex,
    isolated_vertices,
    maximal_independent_sets,
    minimal_vertex_covers,
    strip_isolated,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    alexander_dual,
    cl_certificate,
    colon_by_monomial,
    cover_ideal,
    deg_max,
    edge_ideal,
    intersect,
    linear_quotients_order,
    polarize,
    power,
    reg_if_cl,
    symbolic_power,
)
from .traces import (
    ReductionTrace,
    TraceState,
    apply_trace,
    check_constructible_duality,
    check_witness_properties,
    cmp_index,
    cmp_shadow,
    is_constructible,
    witness_sequence,
)

__version__ = "0.1.0"
