"""Tests for vertical-divisor feasibility.

The oracle below re-decides each instance by exact Fourier-Motzkin
elimination over the raw variables (one coefficient per fiber component
plus the general-fiber count), without the per-fiber reduction the
library uses. Expected values in the frozen tests were computed from the
oracle by hand first.
"""

from fractions import Fraction

import pytest

from ellsurf.errors import InputError, NonIntegralEuler
from ellsurf.feasibility import (
    FEASIBLE,
    INFEASIBLE,
    CaseRow,
    FiberPart,
    VerticalSectionProblem,
    Witness,
    fiber_case_table,
    verify_witness,
    vertical_feasibility,
)
from ellsurf.kodaira import ALL_KINDS, FiberConfiguration, FiberType, fiber_model

Q = Fraction


def _reduce_equalities(eqs, ineqs, nvars):
    """Substitute equalities away; None means the system is contradictory.

    Rows are coefficient lists of length nvars + 1 with the constant last,
    read as coeffs . x + const = 0 (or >= 0 for inequality rows).
    """
    pending = [row[:] for row in eqs]
    ineqs = [row[:] for row in ineqs]
    while pending:
        row = pending.pop()
        pivot = next((j for j in range(nvars) if row[j] != 0), None)
        if pivot is None:
            if row[-1] != 0:
                return None
            continue
        for other in pending + ineqs:
            factor = other[pivot] / row[pivot]
            if factor:
                for j in range(nvars + 1):
                    other[j] -= factor * row[j]
    return ineqs


def _normalized(row):
    lead = next((abs(c) for c in row if c != 0), None)
    if lead is None:
        return tuple(row)
    return tuple(c / lead for c in row)


def _fm_feasible(ineqs, nvars):
    rows = [list(r) for r in {_normalized(r) for r in ineqs}]
    for v in range(nvars):
        pos = [r for r in rows if r[v] > 0]
        neg = [r for r in rows if r[v] < 0]
        kept = {_normalized(r) for r in rows if r[v] == 0}
        for p in pos:
            for q in neg:
                combo = [
                    p[j] * (-q[v]) + q[j] * p[v] for j in range(nvars + 1)
                ]
                kept.add(_normalized(combo))
        rows = [list(r) for r in kept]
    return all(r[-1] >= 0 for r in rows)


def oracle_feasible(problem):
    k = problem.k
    models = [fiber_model(f) for f in problem.config.fibers]
    offsets, nvars = [], 1  # variable 0 is the general-fiber count
    for m in models:
        offsets.append(nvars)
        nvars += m.config.rank
    width = nvars + 1
    eqs, ineqs = [], []
    budget = [Q(0)] * width
    budget[0] = Q(1)
    budget[-1] = -k * problem.budget()
    for m, off in zip(models, offsets):
        mults = m.mult_vector
        if m.fiber_type.multiplicity > 1:
            excess = [Q(0)] * len(mults)
        else:
            excess = [Q(mu - 1) for mu in mults]
        gram = m.config.gram
        for r in range(m.config.rank):
            row = [Q(0)] * width
            for i in range(m.config.rank):
                row[off + i] = Q(gram[r][i])
            row[-1] = k * sum(
                Q(gram[r][i]) * excess[i] for i in range(m.config.rank)
            )
            eqs.append(row)
        budget[off] += Q(1, mults[0])
        budget[-1] += k * excess[0] / mults[0]
        for z in m.znodes:
            row = [Q(0)] * width
            for g, c in zip(z.germ_multiplicities(), z.incident):
                row[off + c] += Q(g)
            row[-1] = -Q(k * z.ideal_order)
            ineqs.append(row)
    eqs.append(budget)
    for v in range(nvars):
        row = [Q(0)] * width
        row[v] = Q(1)
        ineqs.append(row)
    reduced = _reduce_equalities(eqs, ineqs, nvars)
    if reduced is None:
        return False
    return _fm_feasible(reduced, nvars)


def single(kind, k, a):
    return VerticalSectionProblem(FiberConfiguration(0, (kind,)), k, a=Q(a))


BUDGET_GRID = [Q(0), Q(1, 6), Q(1, 3), Q(1, 2), Q(3, 4), Q(1), Q(2)]


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda t: t.label)
def test_single_fiber_matches_elimination_oracle(kind):
    for a in BUDGET_GRID:
        for k in (1, 2):
            problem = single(kind, k, a)
            verdict = vertical_feasibility(problem)
            assert verdict.feasible == oracle_feasible(problem)
            if verdict.feasible:
                assert verify_witness(problem, verdict.witness)


@pytest.mark.parametrize(
    "labels",
    [("II", "III"), ("IV", "I1"), ("I0*", "2I0"), ("I3", "IV*")],
    ids=lambda ls: "+".join(ls),
)
def test_fiber_pairs_match_elimination_oracle(labels):
    kinds = {t.label: t for t in ALL_KINDS}
    kinds["2I0"] = FiberType("I", 0, 2)
    config = FiberConfiguration(0, tuple(kinds[l] for l in labels))
    for a in (Q(1, 2), Q(1), Q(4, 3), Q(2)):
        for k in (1, 2):
            problem = VerticalSectionProblem(config, k, a=a)
            verdict = vertical_feasibility(problem)
            assert verdict.feasible == oracle_feasible(problem)
            if verdict.feasible:
                assert verify_witness(problem, verdict.witness)


# least workable fiber multiple per kind, found by hand from the
# component and singular-point constraints
MINIMA = {
    "I1": Q(1, 2),
    "I2": Q(1, 2),
    "I5": Q(1, 2),
    "I0*": Q(2, 3),
    "I1*": Q(3, 4),
    "I4*": Q(3, 4),
    "II": Q(1, 2),
    "III": Q(1, 2),
    "IV": Q(2, 3),
    "IV*": Q(4, 5),
    "III*": Q(6, 7),
    "II*": Q(10, 11),
}


@pytest.mark.parametrize("label", sorted(MINIMA), ids=str)
def test_threshold_budget_is_sharp(label):
    kinds = {t.label: t for t in ALL_KINDS}
    kinds["I5"] = FiberType("I", 5)
    kinds["I4*"] = FiberType("I*", 4)
    q = MINIMA[label]
    for k in (1, 3):
        assert vertical_feasibility(single(kinds[label], k, q)).feasible
        tight = vertical_feasibility(single(kinds[label], k, q - Q(1, 60)))
        assert tight.status == INFEASIBLE


def test_cusp_fiber_exhausts_budget():
    verdict = vertical_feasibility(single(FiberType("II"), 6, Q(1, 6)))
    assert verdict.status == INFEASIBLE
    assert verdict.witness is None
    assert verdict.k == 6


def test_kummer_configuration_is_infeasible():
    config = FiberConfiguration(0, (FiberType("I*", 0),) * 4)
    for k in (1, 2, 3, 6):
        verdict = vertical_feasibility(VerticalSectionProblem(config, k))
        assert verdict.status == INFEASIBLE
    assert not oracle_feasible(VerticalSectionProblem(config, 2))


def test_smooth_configuration_witness_is_fiber_multiple():
    config = FiberConfiguration(1, (FiberType("I", 0, 2),) * 2, isotrivial=True)
    problem = VerticalSectionProblem(config, 4, a=Q(3))
    verdict = vertical_feasibility(problem)
    assert verdict.feasible
    assert verdict.witness.general_fiber == 12
    for part in verdict.witness.parts:
        assert part.coefficients == (Q(0),)
    assert verify_witness(problem, verdict.witness)


def test_witness_rejects_tampering():
    problem = single(FiberType("I*", 0), 3, Q(1))
    witness = vertical_feasibility(problem).witness
    assert witness.parts[0].coefficients == (2, 2, 2, 2, 1)
    assert witness.general_fiber == 1
    assert verify_witness(problem, witness)

    short = Witness(witness.general_fiber, ())
    assert not verify_witness(problem, short)
    negative = Witness(Q(-1), witness.parts)
    assert not verify_witness(problem, negative)
    part = witness.parts[0]
    bumped = Witness(
        witness.general_fiber,
        (FiberPart(part.label, part.coefficients[:-1] + (Q(2),)),),
    )
    assert not verify_witness(problem, bumped)
    starved = Witness(
        witness.general_fiber + 1,
        (FiberPart(part.label, tuple(c - Q(1, 2) for c in part.coefficients)),),
    )
    assert not verify_witness(problem, starved)


def test_infeasibility_scales_with_k():
    for label, kind in (("IV", FiberType("IV")), ("II", FiberType("II"))):
        base = vertical_feasibility(single(kind, 1, Q(1, 3)))
        if base.status == INFEASIBLE:
            for k in (2, 3, 4, 8):
                assert vertical_feasibility(single(kind, k, Q(1, 3))).status == INFEASIBLE


def test_case_table_is_infeasible_throughout():
    rows = fiber_case_table(12)
    assert len(rows) == 48
    assert {r.kind for r in rows} == {"II", "III", "IV", "I0*"}
    assert [r.k for r in rows if r.kind == "II"] == list(range(1, 13))
    for row in rows:
        assert isinstance(row, CaseRow)
        assert row.verdict.status == INFEASIBLE


def test_case_table_empty():
    assert fiber_case_table(0) == ()
    with pytest.raises(InputError):
        fiber_case_table(-1)


def test_default_budget_is_chi():
    config = FiberConfiguration(0, (FiberType("I", 1),) * 12)
    verdict = vertical_feasibility(VerticalSectionProblem(config, 2))
    assert verdict.status == INFEASIBLE  # twelve half-fibers against chi = 1

    lone = FiberConfiguration(0, (FiberType("I", 1),))
    with pytest.raises(NonIntegralEuler):
        vertical_feasibility(VerticalSectionProblem(lone, 1))
    patched = vertical_feasibility(VerticalSectionProblem(lone, 1, a=Q(1, 12)))
    assert patched.status == INFEASIBLE


def test_k_must_be_positive():
    config = FiberConfiguration(0, (FiberType("II"),))
    with pytest.raises(InputError):
        VerticalSectionProblem(config, 0)
