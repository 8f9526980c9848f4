"""Exact cylinder-space toolkit for finite fuzzy topologies.

Everything is computed over rational scalars with zero-tolerance equality:
membership-graph regions on the cylinder X x [0,1), the induced base
topology, a certified deformation retraction onto the zero slice, a closed
path DSL with decidable continuity, and the complement-as-path-inversion
decision procedure.
"""

from .base_space import (
    ConnectivityReport,
    FiniteTopology,
    check_pc_lpc,
    component_cylinder_expr,
    connected_components,
    fence_between,
    iota_x,
    slice_agrees,
    specialization_preorder,
)
from .cylinder import (
    CompatReport,
    CylinderOpen,
    LawReport,
    OpenExpr,
    SubbasisElem,
    complement_compat,
    critical_gammas,
    cyl_complement,
    cyl_contains,
    cyl_intersect,
    cyl_subset,
    cyl_union,
    empty_cylinder,
    open_realize,
    pi2,
    psi_star,
    recover_membership,
    subbasis_elements,
    subbasis_realize,
    tstar,
    verify_psi_laws,
    whole_cylinder,
)
from .functor import (
    ComplementReport,
    FunctorEval,
    check_constant_inverse,
    check_functoriality,
    complement_report,
    is_complement,
)
from .fuzzy import (
    FuzzySet,
    FuzzyTopology,
    GroundSet,
    ValidationReport,
    fz_complement,
    fz_generate_topology,
    fz_indicator,
    fz_is_topology,
    fz_join,
    fz_meet,
    ground,
)
from .intervals import (
    EMPTY_SET,
    WHOLE_J,
    Interval,
    IntervalSet,
    iv_complement_in_J,
    iv_contains,
    iv_intersect,
    iv_subset,
    iv_supremum,
    iv_union,
    make_interval,
    make_unit_interval,
    singleton,
)
from .oracle import GridOracle, oracle_compare, oracle_rasterize
from .paths import (
    ChiBoundary,
    Concat,
    Const,
    FencePath,
    HLift,
    HTransform,
    PathExpr,
    Reverse,
    VerticalAffine,
    chi_boundary,
    chi_eval,
    eval_path,
    functor_object_path,
    kappa,
    make_fence_path,
    normalize_path,
    path_from_json,
    path_in_open,
    path_preimage,
    path_preimage_open,
    path_to_json,
    vertical_connector,
)
from .rationals import ONE, ZERO, format_rational, frac, parse_rational
from .retraction import (
    BoxWitness,
    CylPoint,
    continuity_witness,
    h_eval,
    h_image_of_box,
    point,
    sigma_eval,
    sigma_image,
    sigma_image_subbasis,
    verify_witness,
)

__version__ = "0.1.0"
