"""Exact symmetric-differential computations on hyperelliptic x elliptic
products: twisted bases, the local obstruction at involution fixed points,
invariant dimensions, and the odd-module tensor powers."""

from .curve import (
    HyperellipticModel,
    TwistedBasisElement,
    curve_basis,
    elliptic_orders,
    local_frame,
)
from .invariant import (
    InvariantBasisElement,
    desk_cap,
    guaranteed_vanishing,
    invariant_basis,
    invariant_dim,
    sakai_check,
)
from .kummer import (
    RESIDUAL_F,
    TRIVIAL,
    KummerPower,
    ideal_twist_dims,
    kummer_tensor_power,
    odd_power_dims,
)
from .local import (
    M_FORM,
    LocalDifferential,
    bad_chart_coefficients,
    blowup_holomorphy,
    chart_coefficients,
    m_divide,
    m_power,
    monomial,
    obstruction_profile,
)

__all__ = [
    "HyperellipticModel",
    "TwistedBasisElement",
    "curve_basis",
    "elliptic_orders",
    "local_frame",
    "InvariantBasisElement",
    "desk_cap",
    "guaranteed_vanishing",
    "invariant_basis",
    "invariant_dim",
    "sakai_check",
    "KummerPower",
    "RESIDUAL_F",
    "TRIVIAL",
    "ideal_twist_dims",
    "kummer_tensor_power",
    "odd_power_dims",
    "LocalDifferential",
    "M_FORM",
    "bad_chart_coefficients",
    "blowup_holomorphy",
    "chart_coefficients",
    "m_divide",
    "m_power",
    "monomial",
    "obstruction_profile",
]
