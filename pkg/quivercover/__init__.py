# __init__.py
# quiver-cover: bound quiver presentations, Γ and universal cover certificates

import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())

from .nodes.Validate import NODE_CLASS_MAPPINGS as VAL_MAPPINGS
from .nodes.Validate import NODE_DISPLAY_NAME_MAPPINGS as VAL_DISPLAY

from .nodes.Paths import NODE_CLASS_MAPPINGS as PATHS_MAPPINGS
from .nodes.Paths import NODE_DISPLAY_NAME_MAPPINGS as PATHS_DISPLAY

from .nodes.Bypasses import NODE_CLASS_MAPPINGS as BYP_MAPPINGS
from .nodes.Bypasses import NODE_DISPLAY_NAME_MAPPINGS as BYP_DISPLAY

from .nodes.Order import NODE_CLASS_MAPPINGS as ORD_MAPPINGS
from .nodes.Order import NODE_DISPLAY_NAME_MAPPINGS as ORD_DISPLAY

from .nodes.NormalForm import NODE_CLASS_MAPPINGS as NF_MAPPINGS
from .nodes.NormalForm import NODE_DISPLAY_NAME_MAPPINGS as NF_DISPLAY

from .nodes.Compose import NODE_CLASS_MAPPINGS as COMP_MAPPINGS
from .nodes.Compose import NODE_DISPLAY_NAME_MAPPINGS as COMP_DISPLAY

from .nodes.Apply import NODE_CLASS_MAPPINGS as APPLY_MAPPINGS
from .nodes.Apply import NODE_DISPLAY_NAME_MAPPINGS as APPLY_DISPLAY

from .nodes.Groebner import NODE_CLASS_MAPPINGS as GB_MAPPINGS
from .nodes.Groebner import NODE_DISPLAY_NAME_MAPPINGS as GB_DISPLAY

from .nodes.MinRels import NODE_CLASS_MAPPINGS as MR_MAPPINGS
from .nodes.MinRels import NODE_DISPLAY_NAME_MAPPINGS as MR_DISPLAY

from .nodes.Psi import NODE_CLASS_MAPPINGS as PSI_MAPPINGS
from .nodes.Psi import NODE_DISPLAY_NAME_MAPPINGS as PSI_DISPLAY

from .nodes.Pi1 import NODE_CLASS_MAPPINGS as PI1_MAPPINGS
from .nodes.Pi1 import NODE_DISPLAY_NAME_MAPPINGS as PI1_DISPLAY

from .nodes.Homotopy import NODE_CLASS_MAPPINGS as HOM_MAPPINGS
from .nodes.Homotopy import NODE_DISPLAY_NAME_MAPPINGS as HOM_DISPLAY

from .nodes.Gamma import NODE_CLASS_MAPPINGS as GAMMA_MAPPINGS
from .nodes.Gamma import NODE_DISPLAY_NAME_MAPPINGS as GAMMA_DISPLAY

from .nodes.Certify import NODE_CLASS_MAPPINGS as CERT_MAPPINGS
from .nodes.Certify import NODE_DISPLAY_NAME_MAPPINGS as CERT_DISPLAY

from .automorphisms import (
    ArrowSubstitution,
    DecreasingProduct,
    Factor,
    TransvectionWord,
    apply,
    compose,
    decreasing_normal_form,
    dilatation,
    invert,
    reorder_pair,
    split_dilatation,
    transvection,
)
from .gamma import build_gamma, certify_universal, export_dot, realize_path, unique_source_check
from .groups import GroupPresentation, abelian_invariants, simplify_presentation
from .homotopy import direct_successor_case, homotopy_closure, pi1_presentation, surjection_witness
from .ideals import (
    AdmissibleIdeal,
    compute_psi_I,
    find_seed,
    groebner_structure,
    ideal_from_generators,
    membership,
    minimal_relations,
)
from .order import PathOrder, order_of
from .quiver import Bypass, Path, Quiver, Walk, validate_quiver
from .settings import Settings
from .vectors import PathVector, normal_form
from .workspace import parse, serialize

NODE_CLASS_MAPPINGS = {
    **VAL_MAPPINGS,
    **PATHS_MAPPINGS,
    **BYP_MAPPINGS,
    **ORD_MAPPINGS,
    **NF_MAPPINGS,
    **COMP_MAPPINGS,
    **APPLY_MAPPINGS,
    **GB_MAPPINGS,
    **MR_MAPPINGS,
    **PSI_MAPPINGS,
    **PI1_MAPPINGS,
    **HOM_MAPPINGS,
    **GAMMA_MAPPINGS,
    **CERT_MAPPINGS,
}

NODE_DISPLAY_NAME_MAPPINGS = {
    **VAL_DISPLAY,
    **PATHS_DISPLAY,
    **BYP_DISPLAY,
    **ORD_DISPLAY,
    **NF_DISPLAY,
    **COMP_DISPLAY,
    **APPLY_DISPLAY,
    **GB_DISPLAY,
    **MR_DISPLAY,
    **PSI_DISPLAY,
    **PI1_DISPLAY,
    **HOM_DISPLAY,
    **GAMMA_DISPLAY,
    **CERT_DISPLAY,
}

__all__ = [
    "NODE_CLASS_MAPPINGS",
    "NODE_DISPLAY_NAME_MAPPINGS",
    "ArrowSubstitution",
    "AdmissibleIdeal",
    "Bypass",
    "DecreasingProduct",
    "Factor",
    "GroupPresentation",
    "Path",
    "PathOrder",
    "PathVector",
    "Quiver",
    "Settings",
    "TransvectionWord",
    "Walk",
    "abelian_invariants",
    "apply",
    "build_gamma",
    "certify_universal",
    "compose",
    "compute_psi_I",
    "decreasing_normal_form",
    "dilatation",
    "direct_successor_case",
    "export_dot",
    "find_seed",
    "groebner_structure",
    "homotopy_closure",
    "ideal_from_generators",
    "invert",
    "membership",
    "minimal_relations",
    "normal_form",
    "order_of",
    "parse",
    "pi1_presentation",
    "realize_path",
    "reorder_pair",
    "serialize",
    "simplify_presentation",
    "split_dilatation",
    "surjection_witness",
    "transvection",
    "unique_source_check",
    "validate_quiver",
]
