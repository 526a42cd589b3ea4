"""Diagonal group actions on a product curve x elliptic curve.

Classifies the stabilizers of such an action by how they move the elliptic
factor, predicts the singular fibers of the quotient fibration, and builds
the standard involution quotients over a hyperelliptic curve.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvalidGenus
from .kodaira import FiberConfiguration, FiberType
from .orbifold import (
    INVOLUTION,
    ORDER4,
    ORDER6,
    TRANSLATION,
    BranchPoint,
    GroupActionData,
)


@dataclass(frozen=True)
class StabilizerAction:
    """A cyclic stabilizer together with its action on the elliptic curve.

    Non-translation actions fix the origin, so their order is pinned by the
    automorphism they induce: an involution has order 2, the order-4 action
    order 4, and the zeta actions order 3 or 6.
    """

    order: int
    e_action: str

    def __post_init__(self):
        if self.order < 2:
            raise InputError("stabilizer order must be at least 2")
        if self.e_action == INVOLUTION and self.order != 2:
            raise InputError("an involution stabilizer has order 2")
        if self.e_action == ORDER4 and self.order != 4:
            raise InputError("the order-4 action needs a stabilizer of order 4")
        if self.e_action == ORDER6 and self.order not in (3, 6):
            raise InputError("a zeta action needs a stabilizer of order 3 or 6")
        if self.e_action not in (TRANSLATION, INVOLUTION, ORDER4, ORDER6):
            raise InputError(f"unknown stabilizer action {self.e_action!r}")


@dataclass(frozen=True)
class ClassifiedAction:
    fibers: tuple[FiberType, ...]
    standard: bool
    notes: tuple[str, ...]


def classify_action(a: GroupActionData) -> ClassifiedAction:
    """Predict the quotient's singular fibers from the stabilizer data.

    A translation stabilizer of order m leaves a multiple smooth fiber mI0;
    an involution leaves an I0* fiber. Order-4 and zeta stabilizers make the
    fibration non-standard; the fibers over those points are not in the
    {mI0, I0*} list and are reported through notes instead.
    """
    fibers = []
    notes = []
    standard = True
    for b in a.branch:
        sa = StabilizerAction(b.stab_order, b.action)
        if sa.e_action == TRANSLATION:
            fibers.append(FiberType("I", 0, multiplicity=sa.order))
        elif sa.e_action == INVOLUTION:
            fibers.append(FiberType("I*", 0))
        elif sa.e_action == ORDER4:
            standard = False
            notes.append(
                "order-4 stabilizer: the quotient acquires two singularities "
                "of type A_{1,4} and one of type A_{1,2}"
            )
        else:
            standard = False
            notes.append(
                f"order-{sa.order} zeta stabilizer: quotient fibration "
                "is not standard"
            )
    return ClassifiedAction(tuple(fibers), standard, tuple(notes))


@dataclass(frozen=True)
class ProductQuotient:
    """An involution quotient of a product, with its fibration data."""

    config: FiberConfiguration
    action: GroupActionData


def build_product_quotient(g1: int) -> ProductQuotient:
    """Quotient of (genus-g1 hyperelliptic curve) x (elliptic curve) by the
    diagonal involution.

    The hyperelliptic involution has 2g1 + 2 fixed points, so the quotient
    fibration over the rational base has that many I0* fibers and no
    multiple fibers.
    """
    if g1 < 1:
        raise InvalidGenus("the product factor needs genus at least 1")
    count = 2 * g1 + 2
    action = GroupActionData(
        2, 0, tuple(BranchPoint(2, INVOLUTION) for _ in range(count))
    )
    config = FiberConfiguration(
        0, tuple(FiberType("I*", 0) for _ in range(count)), isotrivial=True
    )
    return ProductQuotient(config, action)
