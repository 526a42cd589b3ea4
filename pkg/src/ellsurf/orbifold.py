"""Orbifold arithmetic for multiple fibers and group actions on curves.

Two strands live here. The first is the orbifold structure a fibration puts
on its base: the defect lambda of the multiple fibers, whether the twisted
base cotangent pullback is pseudoeffective, and the sufficient criterion
for a positive irregularity somewhere in the tower of finite covers. The
second is bookkeeping for a finite group acting on a curve: Hurwitz
consistency of branch data and the weighted count of points fixed by
non-translation stabilizers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HurwitzInconsistent, InputError, InvalidGenus, InvalidMultiplicity
from .kodaira import FiberConfiguration, euler_number

Q = Fraction

YES = "yes"
UNKNOWN = "unknown"

TRANSLATION = "translation"
INVOLUTION = "involution"
ORDER4 = "order4"
ORDER6 = "order6"

ACTIONS = (TRANSLATION, INVOLUTION, ORDER4, ORDER6)


@dataclass(frozen=True)
class OrbifoldData:
    """Base genus plus the multiplicities of the multiple fibers."""

    base_genus: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if self.base_genus < 0:
            raise InvalidGenus("base genus must be nonnegative")
        object.__setattr__(self, "multiplicities", tuple(self.multiplicities))
        for m in self.multiplicities:
            if m < 2:
                raise InvalidMultiplicity("orbifold multiplicities must be at least 2")

    @property
    def lam(self) -> Fraction:
        return sum((Q(m - 1, m) for m in self.multiplicities), Q(0))

    @classmethod
    def from_configuration(cls, c: FiberConfiguration) -> "OrbifoldData":
        return cls(c.base_genus, tuple(f.multiplicity for f in c.multiple_fibers()))


def lambda_and_base_twist(c: FiberConfiguration) -> tuple[Fraction, bool]:
    """Defect lambda and pseudoeffectivity of the twisted base pullback.

    The pullback of the base cotangent sheaf twisted by the multiple-fiber
    divisor has a Zariski decomposition whose nef part is (2g - 2 + lambda)
    times a general fiber, so pseudoeffectivity is the sign test on that
    degree.
    """
    lam = OrbifoldData.from_configuration(c).lam
    return lam, 2 * c.base_genus - 2 + lam >= 0


@dataclass(frozen=True)
class QtildeResult:
    answer: str
    reason: str | None = None


def qtilde_criterion(c: FiberConfiguration) -> QtildeResult:
    """Sufficient criterion for positive irregularity of a finite cover.

    Answers yes when the base has positive genus, when lambda reaches 2 (so
    there are at least three multiple fibers and a cover with positive base
    genus exists), or when the Euler number vanishes. The criterion is
    one-sided: a miss answers unknown, never no.
    """
    if c.base_genus >= 1:
        return QtildeResult(YES, "base genus at least one")
    lam = OrbifoldData.from_configuration(c).lam
    if lam >= 2:
        return QtildeResult(YES, "orbifold defect lambda at least two")
    if sum(euler_number(f) for f in c.fibers) <= 0:
        return QtildeResult(YES, "Euler number zero")
    return QtildeResult(UNKNOWN)


@dataclass(frozen=True)
class BranchPoint:
    """A branch point of the quotient map, with its stabilizer's action
    on the elliptic factor."""

    stab_order: int
    action: str

    def __post_init__(self):
        if self.action not in ACTIONS:
            raise InputError(f"unknown stabilizer action {self.action!r}")
        if self.stab_order < 2:
            raise InputError("stabilizer order at a branch point is at least 2")
        if self.action == INVOLUTION and self.stab_order != 2:
            raise InputError("an involution stabilizer has order 2")


@dataclass(frozen=True)
class GroupActionData:
    """A finite group acting on a curve, described by its quotient data."""

    group_order: int
    base_genus: int
    branch: tuple[BranchPoint, ...]

    def __post_init__(self):
        if self.group_order < 1:
            raise InputError("group order must be positive")
        if self.base_genus < 0:
            raise InvalidGenus("base genus must be nonnegative")
        object.__setattr__(self, "branch", tuple(self.branch))
        for b in self.branch:
            if self.group_order % b.stab_order != 0:
                raise InputError(
                    f"stabilizer order {b.stab_order} does not divide "
                    f"the group order {self.group_order}"
                )

    @property
    def curve_genus(self) -> int:
        return hurwitz_genus(self)

    @property
    def deg_rt(self) -> int:
        return translation_ramification_degree(self)


def hurwitz_genus(a: GroupActionData) -> int:
    """Genus of the covering curve forced by the branch data.

    Solves 2g(C) - 2 = d(2g(B) - 2) + sum over branch points of d(1 - 1/m).
    Each summand is an integer because stabilizer orders divide the group
    order.
    """
    d = a.group_order
    rhs = d * (2 * a.base_genus - 2)
    for b in a.branch:
        rhs += d * (b.stab_order - 1) // b.stab_order
    if rhs % 2 != 0:
        raise HurwitzInconsistent(f"branch data gives odd ramification total {rhs}")
    g = rhs // 2 + 1
    if g < 0:
        raise HurwitzInconsistent(f"branch data forces negative genus {g}")
    return g


def translation_ramification_degree(a: GroupActionData) -> int:
    """Degree of the ramification supported over translation branch points."""
    d = a.group_order
    return sum(
        d * (b.stab_order - 1) // b.stab_order
        for b in a.branch
        if b.action == TRANSLATION
    )


def involution_count(a: GroupActionData) -> int:
    """Weighted count of curve points with a non-translation stabilizer.

    Equals 2g(C) - 2 + 2d minus the translation ramification degree: the
    part of the ramification divisor left once translations are removed. A
    point whose stabilizer has order m counts with weight m - 1, so for
    pure involutions this is the plain number of fixed points.
    """
    g = hurwitz_genus(a)
    return 2 * g - 2 + 2 * a.group_order - translation_ramification_degree(a)


def meets_z_bound(a: GroupActionData) -> bool:
    """Whether the fixed-point count reaches 2g(C) - 1."""
    return involution_count(a) >= 2 * hurwitz_genus(a) - 1
