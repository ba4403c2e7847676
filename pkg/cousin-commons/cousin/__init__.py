"""Cousin Python - exact Lie combinatorics for slope conditions and Cousin complexes."""

from __future__ import annotations

# Public API facade
from .core.char_ring import (
    FormalCharacter,
    kostant_partition_count,
    verma_character,
    weyl_character,
    weyl_dimension,
)
from .core.cousin_complex import (
    big_weight,
    big_weight_filter,
    bw_amplitude,
    bwb,
    classical_ranges,
    dot_orbit_top,
    flag_cousin,
    shimura_cousin_shape,
)
from .core.errors import (
    ConfigError,
    CousinError,
    PreconditionError,
    ResourceBoundError,
)
from .core.hecke import hecke_operators, hecke_table
from .core.models import (
    BoundVariant,
    Chamber,
    Coweight,
    Flavor,
    Kind,
    MwForm,
    Order,
    Sign,
    SlopeVector,
    Weight,
)
from .core.newton import (
    NewtonPolygon,
    PValuation,
    finite_slope_dimension,
    h_slope_dimension,
    is_slope_leq_h,
    newton_polygon,
)
from .core.presets import get_preset, load_datum_document
from .core.root_datum import (
    LeviDatum,
    RootDatum,
    is_dominant,
    leq,
    pairing,
    restrict_to_split,
    rho,
    rho_m,
    two_rho_nc,
)
from .core.slope_calc import (
    c_set,
    ell_min_max,
    kappa_from_nu,
    nu_from_kappa,
    slope_bound,
    slope_condition,
    w_set,
)
from .core.weyl import (
    WeylElement,
    WeylGroup,
    bruhat_leq,
    cell_dimension,
    dot_action,
    ell_pm,
    enumerate_group,
    kostant_reps,
    longest_element,
)

# Version info
__version__ = "0.1.0"

__all__ = [
    # Version
    "__version__",
    # Models
    "BoundVariant",
    "Chamber",
    "Coweight",
    "Flavor",
    "Kind",
    "MwForm",
    "Order",
    "Sign",
    "SlopeVector",
    "Weight",
    # Errors
    "ConfigError",
    "CousinError",
    "PreconditionError",
    "ResourceBoundError",
    # Root data
    "LeviDatum",
    "RootDatum",
    "get_preset",
    "is_dominant",
    "leq",
    "load_datum_document",
    "pairing",
    "restrict_to_split",
    "rho",
    "rho_m",
    "two_rho_nc",
    # Weyl groups
    "WeylElement",
    "WeylGroup",
    "bruhat_leq",
    "cell_dimension",
    "dot_action",
    "ell_pm",
    "enumerate_group",
    "kostant_reps",
    "longest_element",
    # Characters
    "FormalCharacter",
    "kostant_partition_count",
    "verma_character",
    "weyl_character",
    "weyl_dimension",
    # Slopes
    "c_set",
    "ell_min_max",
    "hecke_operators",
    "hecke_table",
    "kappa_from_nu",
    "nu_from_kappa",
    "slope_bound",
    "slope_condition",
    "w_set",
    # Cousin complexes
    "big_weight",
    "big_weight_filter",
    "bw_amplitude",
    "bwb",
    "classical_ranges",
    "dot_orbit_top",
    "flag_cousin",
    "shimura_cousin_shape",
    # Newton polygons
    "NewtonPolygon",
    "PValuation",
    "finite_slope_dimension",
    "h_slope_dimension",
    "is_slope_leq_h",
    "newton_polygon",
]
