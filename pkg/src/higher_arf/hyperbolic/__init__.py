"""PSL(2, R) kernel: elements, lifted arguments and levels, sequential sets."""

from .lifting import (
    LiftedElement,
    axes_intersect,
    chart_level,
    level_mod,
    level_of,
    lift,
    lifted_inverse,
    lifted_product,
    oracle_jump,
    principal_argument,
    product_jump_closed_form,
)
from .moebius import (
    INF,
    ElementInfo,
    ElementKind,
    MoebiusElement,
    commutator,
    commutator_trace,
    compose,
    conjugate,
    element_info,
    element_kind,
    inverse,
    make_elliptic,
    make_hyperbolic,
    make_parabolic,
)
from .sampling import REGIMES, verify_level_lemmas
from .sequential import (
    BUILT_FAMILIES,
    SequentialSet,
    build_sequential_set,
    check_lift_relation,
    closed_form_winding,
    hyperbolic_pair_type,
    hyperbolic_parabolic_pair_type,
    is_sequential_set,
    relator_winding,
)
