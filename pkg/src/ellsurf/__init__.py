"""Exact positivity diagnostics for elliptic surfaces.

Given a fiber configuration (and optional isotriviality data), the
package decides pseudoeffectivity of the cotangent bundle, positivity of
the refined irregularity, and nonvanishing of symmetric differentials,
entirely in rational arithmetic. The heavy lifting lives in the
submodules; this namespace re-exports the everyday entry points.
"""

from .errors import EllsurfError, InputError, InternalError
from .feasibility import (
    VerticalSectionProblem,
    fiber_case_table,
    verify_witness,
    vertical_feasibility,
)
from .kodaira import (
    ALL_KINDS,
    FiberConfiguration,
    FiberType,
    euler_number,
    fiber_model,
    numerical_invariants,
    parse_kind,
)
from .lattice import CurveConfig, QDivisor, check_zariski_pair, zariski_decompose
from .orbifold import GroupActionData, hurwitz_genus, qtilde_criterion
from .isotrivial import build_product_quotient, classify_action
from .symdiff import (
    HyperellipticModel,
    guaranteed_vanishing,
    invariant_dim,
    kummer_tensor_power,
    sakai_check,
)
from .verdict import SurfaceDescription, VerdictReport, evaluate

__all__ = [
    "ALL_KINDS",
    "CurveConfig",
    "EllsurfError",
    "FiberConfiguration",
    "FiberType",
    "GroupActionData",
    "HyperellipticModel",
    "InputError",
    "InternalError",
    "QDivisor",
    "SurfaceDescription",
    "VerdictReport",
    "VerticalSectionProblem",
    "build_product_quotient",
    "check_zariski_pair",
    "classify_action",
    "euler_number",
    "evaluate",
    "fiber_case_table",
    "fiber_model",
    "guaranteed_vanishing",
    "hurwitz_genus",
    "invariant_dim",
    "kummer_tensor_power",
    "numerical_invariants",
    "parse_kind",
    "qtilde_criterion",
    "sakai_check",
    "verify_witness",
    "vertical_feasibility",
    "zariski_decompose",
]
