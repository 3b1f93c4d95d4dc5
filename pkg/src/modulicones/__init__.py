"""Exact rational cone computations for symmetrized moduli of pointed rational curves."""

from .cones import (
    Certificate,
    Cone,
    ConeComparison,
    conic_combination,
    dual_description,
    facet_description,
    hrep_to_vrep,
    minimal_hrep,
    separating_functional,
    vrep_to_hrep,
)
from .spaces import (
    BoundaryLabel,
    CurveClass,
    DivisorClass,
    SpaceId,
    boundary_class,
    canonical_label,
    enumerate_boundaries,
    express_in_basis,
    forgetful_pullback,
    pair,
    picard_number,
    quotient_pushforward,
    relations_and_basis,
)
from .curves import (
    AttachMapSpec,
    attach_pushforward,
    class_l7,
    counterexample_ftau,
    curve_ck,
    curve_ck_star,
    eff_cone,
    named_class,
    nem_hrep,
    nem_rays_inductive,
    nem_xn1_decomposition,
)
from .bridge import (
    BridgeMap,
    hyperelliptic_pullback_cone,
    hyperelliptic_pushforward,
    m21_cones,
    m21_pushforward,
    mg1_inequality_family,
    pointed_pushforward,
    x71_mori_data,
)

__all__ = [
    "AttachMapSpec",
    "BoundaryLabel",
    "BridgeMap",
    "Certificate",
    "Cone",
    "ConeComparison",
    "CurveClass",
    "DivisorClass",
    "SpaceId",
    "attach_pushforward",
    "boundary_class",
    "canonical_label",
    "class_l7",
    "conic_combination",
    "counterexample_ftau",
    "curve_ck",
    "curve_ck_star",
    "dual_description",
    "eff_cone",
    "enumerate_boundaries",
    "express_in_basis",
    "facet_description",
    "forgetful_pullback",
    "hrep_to_vrep",
    "hyperelliptic_pullback_cone",
    "hyperelliptic_pushforward",
    "m21_cones",
    "m21_pushforward",
    "mg1_inequality_family",
    "minimal_hrep",
    "named_class",
    "nem_hrep",
    "nem_rays_inductive",
    "nem_xn1_decomposition",
    "pair",
    "picard_number",
    "pointed_pushforward",
    "quotient_pushforward",
    "relations_and_basis",
    "separating_functional",
    "vrep_to_hrep",
]

__version__ = "0.1.0"
