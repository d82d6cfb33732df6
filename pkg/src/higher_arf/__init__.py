"""m-Arf functions on surfaces with holes and punctures: enumeration, the
Dehn twist action, orbit census and classification by type, plus a PSL(2, R)
kernel for lifting Fuchsian groups to m-fold covers."""

from .arf import (
    Twist,
    apply_twist,
    apply_word,
    enumerate_arfs,
    new_arf,
    twist_generators,
)
from .core import (
    ArfBasisValues,
    ArfType,
    LinearFunctional,
    SurfaceSignature,
    arf_count,
    teich_dimension,
    validate_signature,
)
from .errors import ArfError
from .invariants import (
    arf_invariant_delta,
    enumerate_realizable_types,
    is_normal_form,
    is_realizable_type,
    normalize,
    type_of,
)
from .orbits import DEFAULT_GRID, DEFAULT_MODULI, component_census, orbit_of, verify_classification

__version__ = "0.1.0"
