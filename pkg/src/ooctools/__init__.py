"""Optical orthogonal codes over Z_v: verification, bounds, constructions,
conversions and exact search, with lambda_a and lambda_c kept separate."""

from ._accel import BACKEND
from .bounds import (
    BoundReport,
    bound_report,
    csw_lower_bound,
    fm_lower_bound,
    gv_lower_bound,
    johnson_bound,
    lambda_a_min,
    lambda_c_min,
    yang_fuja_bound,
)
from .constructions import (
    ConstructionError,
    construct,
    construct_appended,
    construct_block,
    construct_cosets,
    construct_paley,
    construct_powers_of_two,
    construct_t_family,
)
from .conversions import (
    ConstantWeightCode,
    CyclicPacking,
    check_cac,
    check_df,
    check_irs,
    check_rdf,
    check_sdf,
    check_sedf,
    cwcpc_to_ooc,
    cyclic_closure,
    hamming_and_cyclic_distances,
    ooc_to_cwcpc,
    ooc_to_packing,
    packing_to_ooc,
    sdf_to_ooc,
    sedf_to_ooc,
)
from .core import (
    Codeword,
    CorrelationProfile,
    DegenerateError,
    ModulusError,
    OocError,
    OocFamily,
    are_equivalent,
    auto_profile,
    canonical_form,
    cross_profile,
    is_full_cyclic_order,
    is_nondegenerate,
    max_auto,
    max_cross,
    multiply,
    orbit_rep,
    properness,
    scale,
    shift,
    verify_ooc,
)
from .differences import (
    check_intersection_theorem,
    external_differences,
    internal_differences,
    multiset_intersection,
)
from .search import build_graph, enumerate_orbit_reps, max_clique, phi_search

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
