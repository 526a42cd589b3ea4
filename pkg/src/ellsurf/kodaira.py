"""Singular fiber catalog and numerical invariants of elliptic fibrations.

Every relatively minimal singular fiber kind carries a component lattice,
component multiplicities, and the singular points of its reduction. Euler
numbers come from the classification tables; a test re-derives each one by
inclusion-exclusion over the catalog model. Multiple fibers are restricted
to smooth reduction, which is the only case the downstream theory needs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InvalidGenus,
    InvalidMultiplicity,
    NonIntegralEuler,
    UnknownFiberKind,
)
from .lattice import CurveConfig, QDivisor

Q = Fraction

KAPPA_NEG_INF = float("-inf")

# reduction singular point types
NODE = "node"
CUSP = "cusp"
TANGENCY = "tangency"
TRIPLE = "triple"

# local data per point type: (scheme length of the critical scheme,
# order of its ideal, germ multiplicity per incident branch listing)
_POINT_DATA = {
    NODE: (1, 1),
    CUSP: (2, 1),
    TANGENCY: (3, 1),
    TRIPLE: (4, 2),
}


@dataclass(frozen=True)
class ZNode:
    """A singular point of the reduced fiber."""

    incident: tuple[int, ...]
    local_type: str

    @property
    def scheme_length(self) -> int:
        return _POINT_DATA[self.local_type][0]

    @property
    def ideal_order(self) -> int:
        """Order of the point's critical ideal inside the maximal ideal."""
        return _POINT_DATA[self.local_type][1]

    def germ_multiplicities(self) -> tuple[int, ...]:
        # a point on a single component sits on a branch pair of that
        # component (self-node or cusp), so the germ has multiplicity two
        if len(self.incident) == 1:
            return (2,)
        return tuple(1 for _ in self.incident)


_ROMAN_KINDS = ("II", "III", "IV", "II*", "III*", "IV*")


@dataclass(frozen=True)
class FiberType:
    """A fiber kind with its cycle length and multiplicity.

    family is one of I, I*, II, III, IV, II*, III*, IV*. Smooth fibers are
    family I with n = 0; they are the only kind allowed to carry
    multiplicity above one.
    """

    family: str
    n: int = 0
    multiplicity: int = 1

    def __post_init__(self):
        if self.family not in ("I", "I*") + _ROMAN_KINDS:
            raise UnknownFiberKind(f"unknown fiber family {self.family!r}")
        if self.family in _ROMAN_KINDS and self.n != 0:
            raise UnknownFiberKind(f"fiber kind {self.family} does not take a cycle length")
        if self.n < 0:
            raise UnknownFiberKind("cycle length must be nonnegative")
        if self.family == "I*" and self.multiplicity != 1:
            raise InvalidMultiplicity("starred fibers cannot be multiple")
        if self.multiplicity < 1:
            raise InvalidMultiplicity("multiplicity must be a positive integer")
        if self.multiplicity > 1 and not self.is_smooth:
            raise InvalidMultiplicity(
                "multiple fibers must have smooth reduction (kind I0 only)"
            )

    @property
    def is_smooth(self) -> bool:
        return self.family == "I" and self.n == 0

    @property
    def label(self) -> str:
        if self.family == "I":
            base = f"I{self.n}"
        elif self.family == "I*":
            base = f"I{self.n}*"
        else:
            base = self.family
        if self.multiplicity > 1:
            return f"{self.multiplicity}{base}"
        return base


_KIND_RE = re.compile(r"^I(\d*)(\*?)$")


def parse_kind(kind: str, n: int | None = None, multiplicity: int = 1) -> FiberType:
    """Build a FiberType from a kind string plus optional fields.

    Accepts I0, I5, I0*, II, III*, and so on, as well as the generic forms
    I and I* with the cycle length supplied separately.
    """
    kind = kind.strip()
    if kind in _ROMAN_KINDS:
        if n not in (None, 0):
            raise UnknownFiberKind(f"fiber kind {kind} does not take n")
        return FiberType(kind, 0, multiplicity)
    m = _KIND_RE.match(kind)
    if not m:
        raise UnknownFiberKind(f"unknown fiber kind {kind!r}")
    digits, star = m.groups()
    if digits:
        if n is not None and n != int(digits):
            raise UnknownFiberKind(f"kind {kind!r} conflicts with n={n}")
        n = int(digits)
    elif n is None:
        raise UnknownFiberKind(f"kind {kind!r} needs an explicit n")
    family = "I*" if star else "I"
    return FiberType(family, n, multiplicity)


@dataclass(frozen=True)
class FiberModel:
    """Component lattice, multiplicities, and reduction singularities."""

    fiber_type: FiberType
    config: CurveConfig
    mult_vector: tuple[int, ...]
    znodes: tuple[ZNode, ...]

    @property
    def full_fiber(self) -> QDivisor:
        return QDivisor(self.config, self.mult_vector)

    @property
    def d0(self) -> QDivisor:
        """Difference between the scheme fiber and its reduction."""
        return QDivisor(self.config, [m - 1 for m in self.mult_vector])

    @property
    def z_scheme_length(self) -> int:
        return sum(z.scheme_length for z in self.znodes)


def _config(labels, entries):
    n = len(labels)
    gram = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = Q(entries[i])
    return gram


def _symmetric(gram, i, j, v):
    gram[i][j] = gram[j][i] = Q(v)


def fiber_model(t: FiberType) -> FiberModel:
    """Catalog model for a fiber kind."""
    if t.is_smooth:
        cfg = CurveConfig(["C0"], [[0]])
        return FiberModel(t, cfg, (t.multiplicity,), ())

    if t.family == "I":
        n = t.n
        if n == 1:
            cfg = CurveConfig(["C0"], [[0]])
            return FiberModel(t, cfg, (1,), (ZNode((0,), NODE),))
        labels = [f"C{i}" for i in range(n)]
        gram = _config(labels, [-2] * n)
        if n == 2:
            _symmetric(gram, 0, 1, 2)
            znodes = (ZNode((0, 1), NODE), ZNode((0, 1), NODE))
        else:
            for i in range(n):
                _symmetric(gram, i, (i + 1) % n, 1)
            znodes = tuple(ZNode((i, (i + 1) % n), NODE) for i in range(n))
        return FiberModel(t, CurveConfig(labels, gram), tuple([1] * n), znodes)

    if t.family == "I*":
        n = t.n
        # four reduced leaves, a chain of n+1 doubled components between them
        labels = [f"A{i}" for i in range(1, 5)] + [f"B{i}" for i in range(n + 1)]
        gram = _config(labels, [-2] * (n + 5))
        b0, bn = 4, 4 + n
        _symmetric(gram, 0, b0, 1)
        _symmetric(gram, 1, b0, 1)
        _symmetric(gram, 2, bn, 1)
        _symmetric(gram, 3, bn, 1)
        for i in range(n):
            _symmetric(gram, 4 + i, 5 + i, 1)
        mults = (1, 1, 1, 1) + tuple([2] * (n + 1))
        znodes = [ZNode((0, b0), NODE), ZNode((1, b0), NODE),
                  ZNode((2, bn), NODE), ZNode((3, bn), NODE)]
        znodes += [ZNode((4 + i, 5 + i), NODE) for i in range(n)]
        return FiberModel(t, CurveConfig(labels, gram), mults, tuple(znodes))

    if t.family == "II":
        cfg = CurveConfig(["C0"], [[0]])
        return FiberModel(t, cfg, (1,), (ZNode((0,), CUSP),))

    if t.family == "III":
        cfg = CurveConfig(["C0", "C1"], [[-2, 2], [2, -2]])
        return FiberModel(t, cfg, (1, 1), (ZNode((0, 1), TANGENCY),))

    if t.family == "IV":
        gram = _config(["C0", "C1", "C2"], [-2, -2, -2])
        for i in range(3):
            for j in range(i):
                _symmetric(gram, i, j, 1)
        cfg = CurveConfig(["C0", "C1", "C2"], gram)
        return FiberModel(t, cfg, (1, 1, 1), (ZNode((0, 1, 2), TRIPLE),))

    # stars of the three additive kinds: trees of (-2)-curves
    if t.family == "IV*":
        # center of multiplicity 3, three arms 2 - 1
        labels = ["C"] + [f"M{i}" for i in range(3)] + [f"O{i}" for i in range(3)]
        mults = (3, 2, 2, 2, 1, 1, 1)
        edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
    elif t.family == "III*":
        # chain 1-2-3-4-3-2-1 with a branch of multiplicity 2 at the center
        labels = [f"E{i}" for i in range(1, 8)] + ["B"]
        mults = (1, 2, 3, 4, 3, 2, 1, 2)
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]
    else:  # II*
        # chain 1-2-3-4-5-6-4-2 with a branch of multiplicity 3 at the 6
        labels = [f"E{i}" for i in range(1, 9)] + ["B"]
        mults = (1, 2, 3, 4, 5, 6, 4, 2, 3)
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]
    gram = _config(labels, [-2] * len(labels))
    for i, j in edges:
        _symmetric(gram, i, j, 1)
    znodes = tuple(ZNode((i, j), NODE) for i, j in edges)
    return FiberModel(t, CurveConfig(labels, gram), mults, znodes)


def euler_number(t: FiberType) -> int:
    """Euler number of the fiber, from the classification table."""
    if t.family == "I":
        return t.n
    if t.family == "I*":
        return 6 + t.n
    return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[t.family]


@dataclass(frozen=True)
class FiberConfiguration:
    """A base curve, a list of fibers, and the structural flags."""

    base_genus: int
    fibers: tuple[FiberType, ...]
    isotrivial: bool = False
    cm_flag: bool | None = None
    assumptions: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.base_genus < 0:
            raise InvalidGenus("base genus must be nonnegative")
        object.__setattr__(self, "fibers", tuple(self.fibers))
        object.__setattr__(self, "assumptions", frozenset(self.assumptions))

    def multiple_fibers(self) -> tuple[FiberType, ...]:
        return tuple(f for f in self.fibers if f.multiplicity > 1)


@dataclass(frozen=True)
class NumericalInvariants:
    e: int
    chi: int
    lam: Fraction
    delta: Fraction
    kappa: float  # one of -inf, 0, 1


def lam_of(c: FiberConfiguration) -> Fraction:
    return sum((Q(f.multiplicity - 1, f.multiplicity) for f in c.fibers), Q(0))


def numerical_invariants(c: FiberConfiguration) -> NumericalInvariants:
    """Euler number, holomorphic Euler characteristic, and Kodaira dimension.

    The Kodaira dimension of a relatively minimal elliptic fibration is the
    sign of 2g(B) - 2 + chi + lambda read as 1, 0, or minus infinity.
    """
    e = sum(euler_number(f) for f in c.fibers)
    if e % 12 != 0:
        raise NonIntegralEuler(f"total Euler number {e} is not divisible by 12")
    chi = e // 12
    lam = lam_of(c)
    delta = 2 * c.base_genus - 2 + chi + lam
    if delta > 0:
        kappa = 1.0
    elif delta == 0:
        kappa = 0.0
    else:
        kappa = KAPPA_NEG_INF
    return NumericalInvariants(e, chi, lam, delta, kappa)


@dataclass(frozen=True)
class DDivisorParts:
    """The divisor D split into its fiber-multiple part and the rest.

    lambda_part is the multiple of a general fiber represented by the
    multiple-fiber contributions. d0_models lists, per non-reduced
    non-multiple fiber, the catalog model together with the divisor of
    component excesses. z_total counts the singular points of all fiber
    reductions.
    """

    lambda_part: Fraction
    d0_models: tuple[tuple[FiberModel, QDivisor], ...]
    z_total: int


def d_divisor(c: FiberConfiguration) -> DDivisorParts:
    lambda_part = lam_of(c)
    d0_models = []
    z_total = 0
    for f in c.fibers:
        model = fiber_model(f)
        z_total += len(model.znodes)
        if f.multiplicity == 1 and any(m > 1 for m in model.mult_vector):
            d0_models.append((model, model.d0))
    return DDivisorParts(lambda_part, tuple(d0_models), z_total)


ALL_KINDS = (
    FiberType("I", 1),
    FiberType("I", 2),
    FiberType("I", 3),
    FiberType("II",),
    FiberType("III",),
    FiberType("IV",),
    FiberType("I*", 0),
    FiberType("I*", 1),
    FiberType("I*", 2),
    FiberType("IV*",),
    FiberType("III*",),
    FiberType("II*",),
)
