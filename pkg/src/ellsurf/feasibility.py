"""Numerical feasibility of vertical divisors with forced multiplicities.

The question: does the class k(aF - sum of component-excess divisors) carry
an effective vertical divisor whose multiplicity at every singular point of
a fiber reduction reaches k times the order of the point's critical ideal?
A negative answer certifies that the corresponding twisted pluricanonical
sections vanish; a positive answer is only numerical and says nothing
about actual sections.

Inside one fiber, any admissible divisor is q times the full fiber minus k
times the excess divisor, because the difference pairs to zero against
every component and the pairing kernel is spanned by the multiplicity
vector. Fourier-Motzkin elimination therefore degenerates to one lower
bound on q per component and per singular point; feasibility is a budget
comparison of the per-fiber minima against k times a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .kodaira import (
    FiberConfiguration,
    FiberModel,
    FiberType,
    euler_number,
    fiber_model,
    numerical_invariants,
)

Q = Fraction

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"

ADVISORY = (
    "a feasible system is numerical evidence only and does not certify "
    "that a section exists"
)


@dataclass(frozen=True)
class VerticalSectionProblem:
    """Target class k(aF - excess) with multiplicity-k conditions on the
    critical scheme. The budget a defaults to chi of the configuration;
    the single-fiber tables override it with the fiber's own e/12 share."""

    config: FiberConfiguration
    k: int
    a: Fraction | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InputError("the tested power k must be a positive integer")
        if self.a is not None:
            object.__setattr__(self, "a", Q(self.a))

    def budget(self) -> Fraction:
        if self.a is not None:
            return self.a
        return Q(numerical_invariants(self.config).chi)


@dataclass(frozen=True)
class FiberPart:
    """Component coefficients of the witness on one fiber."""

    label: str
    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class Witness:
    general_fiber: Fraction
    parts: tuple[FiberPart, ...]


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: str
    k: int
    witness: Witness | None
    note: str | None = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def _excess_vector(model: FiberModel) -> tuple[Fraction, ...]:
    # multiple fibers do not enter the target class, so they carry no excess
    if model.fiber_type.multiplicity > 1:
        return tuple(Q(0) for _ in model.mult_vector)
    return tuple(Q(m - 1) for m in model.mult_vector)


def _fiber_minimum(model: FiberModel, k: int) -> Fraction:
    """Least q such that q*(fiber) - k*(excess) clears every constraint."""
    excess = _excess_vector(model)
    mults = model.mult_vector
    best = Q(0)
    for m, d in zip(mults, excess):
        best = max(best, k * d / m)
    for z in model.znodes:
        germs = z.germ_multiplicities()
        weight = sum(g * mults[c] for g, c in zip(germs, z.incident))
        forced = k * z.ideal_order + k * sum(
            g * excess[c] for g, c in zip(germs, z.incident)
        )
        best = max(best, Q(forced, 1) / weight)
    return best


def vertical_feasibility(p: VerticalSectionProblem) -> FeasibilityVerdict:
    budget = p.k * p.budget()
    models = [fiber_model(f) for f in p.config.fibers]
    minima = [_fiber_minimum(m, p.k) for m in models]
    total = sum(minima, Q(0))
    if total > budget:
        return FeasibilityVerdict(INFEASIBLE, p.k, None)
    parts = []
    for model, q in zip(models, minima):
        excess = _excess_vector(model)
        coeffs = tuple(
            q * m - p.k * d for m, d in zip(model.mult_vector, excess)
        )
        parts.append(FiberPart(model.fiber_type.label, coeffs))
    witness = Witness(budget - total, tuple(parts))
    return FeasibilityVerdict(FEASIBLE, p.k, witness, ADVISORY)


def verify_witness(p: VerticalSectionProblem, w: Witness) -> bool:
    """Exact term-by-term re-check of a claimed witness."""
    if w.general_fiber < 0:
        return False
    if len(w.parts) != len(p.config.fibers):
        return False
    fiber_total = Q(0)
    for f, part in zip(p.config.fibers, w.parts):
        model = fiber_model(f)
        if part.label != model.fiber_type.label:
            return False
        coeffs = part.coefficients
        if len(coeffs) != model.config.rank:
            return False
        if any(c < 0 for c in coeffs):
            return False
        excess = _excess_vector(model)
        shifted = [c + p.k * d for c, d in zip(coeffs, excess)]
        mults = model.mult_vector
        # the shifted vector must be q times the multiplicity vector
        q = Q(shifted[0], mults[0])
        if any(s * mults[0] != shifted[0] * m for s, m in zip(shifted, mults)):
            return False
        fiber_total += q
        for z in model.znodes:
            germs = z.germ_multiplicities()
            mult_at_z = sum(g * coeffs[c] for g, c in zip(germs, z.incident))
            if mult_at_z < p.k * z.ideal_order:
                return False
    return w.general_fiber + fiber_total == p.k * p.budget()


@dataclass(frozen=True)
class CaseRow:
    kind: str
    k: int
    verdict: FeasibilityVerdict


CASE_KINDS = (
    FiberType("II"),
    FiberType("III"),
    FiberType("IV"),
    FiberType("I*", 0),
)


def fiber_case_table(kmax: int) -> tuple[CaseRow, ...]:
    """Single-fiber feasibility per additive kind, with budget e/12 each."""
    if kmax < 0:
        raise InputError("kmax must be nonnegative")
    rows = []
    for t in CASE_KINDS:
        share = Q(euler_number(t), 12)
        for k in range(1, kmax + 1):
            problem = VerticalSectionProblem(
                FiberConfiguration(0, (t,)), k, a=share
            )
            rows.append(CaseRow(t.label, k, vertical_feasibility(problem)))
    return tuple(rows)
