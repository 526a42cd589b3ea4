"""Decision-tree tests for the positivity verdicts."""

from fractions import Fraction

import pytest

from ellsurf.errors import InconsistentMinimalModel, InputError
from ellsurf.isotrivial import build_product_quotient
from ellsurf.kodaira import FiberConfiguration, FiberType
from ellsurf.orbifold import (
    INVOLUTION,
    ORDER4,
    TRANSLATION,
    UNKNOWN,
    YES,
    BranchPoint,
    GroupActionData,
    qtilde_criterion,
)
from ellsurf.verdict import (
    NO,
    OPEN_REMARK,
    ZETA_NEF_CODIM_ONE,
    ZETA_PSEUDOEFFECTIVE,
    SurfaceDescription,
    evaluate,
)

I1 = FiberType("I", 1)
ISTAR = FiberType("I*", 0)
DOUBLE = FiberType("I", 0, 2)

KNOWN_RULES = {
    "qtilde-criterion",
    "kappa-le-0-class-missing",
    "almost-smooth",
    "base-twist-pseudoeffective",
    "non-isotrivial-equivalence",
    "standard-isotrivial-vanishing",
    "zeta-assumptions",
    "isotrivial-nonstandard-open",
    "finite-fundamental-group",
} | {
    f"minimal-model:{c}"
    for c in ("abelian", "bielliptic", "k3", "enriques", "rational", "ruled")
}


def both(report):
    return (report.omega_pseff, report.qtilde_positive, report.nonvanishing)


def test_many_nodal_fibers_all_negative():
    config = FiberConfiguration(0, (I1,) * 36)
    report = evaluate(SurfaceDescription(config))
    assert both(report) == (NO, NO, NO)
    assert report.pi1_finite == YES
    assert "non-isotrivial-equivalence" in report.case_trace
    assert "finite-fundamental-group" in report.case_trace
    assert report.invariants.chi == 3
    assert report.lam == 0
    assert not report.base_twist_pseff


def test_four_double_fibers_flip_the_answer():
    config = FiberConfiguration(0, (I1,) * 36 + (DOUBLE,) * 4)
    report = evaluate(SurfaceDescription(config))
    assert both(report) == (YES, YES, YES)
    assert report.pi1_finite == UNKNOWN
    assert "base-twist-pseudoeffective" in report.case_trace
    assert report.lam == 2
    assert report.base_twist_pseff


def test_standard_isotrivial_quotient_all_negative():
    pq = build_product_quotient(2)
    report = evaluate(SurfaceDescription(pq.config, action=pq.action))
    assert both(report) == (NO, NO, NO)
    assert report.pi1_finite == YES
    assert report.case_trace[0] == "standard-isotrivial-vanishing"


def test_kummer_surface_all_negative():
    config = FiberConfiguration(0, (ISTAR,) * 4, isotrivial=True)
    report = evaluate(SurfaceDescription(config, minimal_model_class="k3"))
    assert both(report) == (NO, NO, NO)
    assert report.pi1_finite == YES
    assert "minimal-model:k3" in report.case_trace
    assert report.invariants.kappa == 0.0


@pytest.mark.parametrize(
    "cls,config,extra,expected",
    [
        ("abelian", FiberConfiguration(1, ()), {}, YES),
        (
            "bielliptic",
            FiberConfiguration(0, (DOUBLE,) * 4, isotrivial=True),
            {},
            YES,
        ),
        (
            "enriques",
            FiberConfiguration(0, (I1,) * 12 + (DOUBLE,) * 2),
            {},
            NO,
        ),
        ("rational", FiberConfiguration(0, (I1,) * 12), {}, NO),
        (
            "ruled",
            FiberConfiguration(0, (), isotrivial=True),
            {"ruling_genus": 1},
            YES,
        ),
    ],
)
def test_low_kodaira_classes(cls, config, extra, expected):
    report = evaluate(
        SurfaceDescription(config, minimal_model_class=cls, **extra)
    )
    assert both(report) == (expected,) * 3
    assert f"minimal-model:{cls}" in report.case_trace
    assert report.pi1_finite == (YES if expected == NO else UNKNOWN)


def test_low_kodaira_without_class_is_undecided():
    config = FiberConfiguration(0, (I1,) * 12)
    report = evaluate(SurfaceDescription(config))
    assert both(report) == (UNKNOWN, UNKNOWN, UNKNOWN)
    assert "kappa-le-0-class-missing" in report.case_trace
    assert report.notes

    over_elliptic = evaluate(SurfaceDescription(FiberConfiguration(1, ())))
    assert over_elliptic.qtilde_positive == YES
    assert "qtilde-criterion" in over_elliptic.case_trace
    assert over_elliptic.omega_pseff == UNKNOWN


def test_almost_smooth_fibration_all_positive():
    config = FiberConfiguration(2, ())
    report = evaluate(SurfaceDescription(config))
    assert both(report) == (YES, YES, YES)
    assert report.case_trace[:2] == ("qtilde-criterion", "almost-smooth")

    five = FiberConfiguration(0, (DOUBLE,) * 5, isotrivial=True)
    report = evaluate(SurfaceDescription(five))
    assert both(report) == (YES, YES, YES)
    assert "almost-smooth" in report.case_trace


NONSTANDARD = FiberConfiguration(
    0, (ISTAR,) * 6, isotrivial=True, cm_flag=True
)


def test_nonstandard_isotrivial_is_open_without_assumptions():
    report = evaluate(SurfaceDescription(NONSTANDARD, standard=False))
    assert both(report) == (UNKNOWN, UNKNOWN, UNKNOWN)
    assert report.pi1_finite == UNKNOWN
    assert "isotrivial-nonstandard-open" in report.case_trace
    assert OPEN_REMARK in report.notes

    # an undetermined action with possible complex multiplication stays open
    undeclared = evaluate(SurfaceDescription(NONSTANDARD))
    assert "isotrivial-nonstandard-open" in undeclared.case_trace


def test_nonstandard_isotrivial_with_zeta_assumptions():
    config = FiberConfiguration(
        0,
        (ISTAR,) * 6,
        isotrivial=True,
        cm_flag=True,
        assumptions=frozenset({ZETA_NEF_CODIM_ONE, ZETA_PSEUDOEFFECTIVE}),
    )
    report = evaluate(SurfaceDescription(config, standard=False))
    assert report.qtilde_positive == YES
    assert report.nonvanishing == YES
    assert report.omega_pseff == UNKNOWN
    assert "zeta-assumptions" in report.case_trace
    assert report.zeta_status_flags == (
        ZETA_NEF_CODIM_ONE,
        ZETA_PSEUDOEFFECTIVE,
    )

    partial = FiberConfiguration(
        0,
        (ISTAR,) * 6,
        isotrivial=True,
        cm_flag=True,
        assumptions=frozenset({ZETA_PSEUDOEFFECTIVE}),
    )
    report = evaluate(SurfaceDescription(partial, standard=False))
    assert report.qtilde_positive == UNKNOWN
    assert "isotrivial-nonstandard-open" in report.case_trace


def test_standard_flag_can_come_from_cm_or_action():
    no_cm = FiberConfiguration(0, (ISTAR,) * 6, isotrivial=True, cm_flag=False)
    report = evaluate(SurfaceDescription(no_cm))
    assert "standard-isotrivial-vanishing" in report.case_trace

    mixed = GroupActionData(
        4,
        0,
        (
            BranchPoint(4, ORDER4),
            BranchPoint(4, ORDER4),
            BranchPoint(2, INVOLUTION),
            BranchPoint(2, TRANSLATION),
        ),
    )
    report = evaluate(SurfaceDescription(NONSTANDARD, action=mixed))
    assert "isotrivial-nonstandard-open" in report.case_trace

    declared = evaluate(
        SurfaceDescription(NONSTANDARD, action=mixed, standard=True)
    )
    assert "standard-isotrivial-vanishing" in declared.case_trace


@pytest.mark.parametrize(
    "cls,config,extra",
    [
        ("k3", FiberConfiguration(0, (I1,) * 36), {}),
        ("abelian", FiberConfiguration(0, (I1,) * 12), {}),
        ("enriques", FiberConfiguration(0, (ISTAR,) * 4), {}),
        ("ruled", FiberConfiguration(0, (), isotrivial=True), {}),
        (
            "ruled",
            FiberConfiguration(0, (), isotrivial=True),
            {"ruling_genus": 0},
        ),
        (
            "rational",
            FiberConfiguration(0, (I1,) * 12),
            {"ruling_genus": 1},
        ),
        ("torus", FiberConfiguration(1, ()), {}),
    ],
)
def test_inconsistent_classes_are_rejected(cls, config, extra):
    desc = SurfaceDescription(config, minimal_model_class=cls, **extra)
    with pytest.raises(InconsistentMinimalModel):
        evaluate(desc)


def test_ruling_genus_requires_a_class():
    with pytest.raises(InputError):
        evaluate(
            SurfaceDescription(FiberConfiguration(1, ()), ruling_genus=1)
        )


SWEEP = [
    SurfaceDescription(FiberConfiguration(0, (I1,) * 36)),
    SurfaceDescription(FiberConfiguration(0, (I1,) * 36 + (DOUBLE,) * 4)),
    SurfaceDescription(FiberConfiguration(1, (I1,) * 12)),
    SurfaceDescription(FiberConfiguration(2, ())),
    SurfaceDescription(FiberConfiguration(1, ()), minimal_model_class="abelian"),
    SurfaceDescription(
        FiberConfiguration(0, (ISTAR,) * 4, isotrivial=True),
        minimal_model_class="k3",
    ),
    SurfaceDescription(FiberConfiguration(0, (I1,) * 12)),
    SurfaceDescription(NONSTANDARD, standard=False),
    SurfaceDescription(NONSTANDARD),
    SurfaceDescription(
        FiberConfiguration(0, (ISTAR,) * 6, isotrivial=True, cm_flag=False)
    ),
]


@pytest.mark.parametrize("desc", SWEEP, ids=range(len(SWEEP)))
def test_report_consistency(desc):
    report = evaluate(desc)
    answers = both(report)
    if UNKNOWN not in answers:
        assert len(set(answers)) == 1
    if qtilde_criterion(desc.config).answer == YES:
        assert report.qtilde_positive == YES
    if any(a != UNKNOWN for a in answers + (report.pi1_finite,)):
        assert report.case_trace
    assert set(report.case_trace) <= KNOWN_RULES
    if report.pi1_finite == YES:
        assert report.omega_pseff == NO
