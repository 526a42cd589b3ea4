"""Positivity verdicts for elliptic surfaces.

Decides three questions from a fiber configuration and optional side data:
whether the cotangent bundle is pseudoeffective, whether the refined
irregularity is positive, and whether some symmetric power of the
cotangent bundle has a nonzero section. Answers are yes, no, or unknown;
every decided answer cites the rule that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentMinimalModel, InputError
from .isotrivial import classify_action
from .kodaira import (
    KAPPA_NEG_INF,
    FiberConfiguration,
    NumericalInvariants,
    numerical_invariants,
)
from .orbifold import (
    UNKNOWN,
    YES,
    GroupActionData,
    lambda_and_base_twist,
    qtilde_criterion,
)

NO = "no"

ZETA_NEF_CODIM_ONE = "zeta_nef_codim_one"
ZETA_PSEUDOEFFECTIVE = "zeta_pseudoeffective"

MINIMAL_MODEL_CLASSES = (
    "abelian",
    "bielliptic",
    "k3",
    "enriques",
    "rational",
    "ruled",
)

# chi and kappa forced by each minimal model class
_CLASS_INVARIANTS = {
    "abelian": (0, 0.0),
    "bielliptic": (0, 0.0),
    "k3": (2, 0.0),
    "enriques": (1, 0.0),
    "rational": (1, KAPPA_NEG_INF),
    "ruled": (0, KAPPA_NEG_INF),
}

_POSITIVE_CLASSES = ("abelian", "bielliptic", "ruled")

OPEN_REMARK = (
    "whether the tautological class minus the matching multiple of the "
    "section divisor is pseudoeffective is open for non-standard "
    "isotrivial fibrations; no rule applies"
)


@dataclass(frozen=True)
class SurfaceDescription:
    """A fiber configuration plus whatever side knowledge is available.

    The minimal model class is required to decide anything when the
    Kodaira dimension is nonpositive. For isotrivial fibrations the
    standard flag (every stabilizer acts by translation or the
    involution) can be given directly or through the group action.
    """

    config: FiberConfiguration
    action: GroupActionData | None = None
    minimal_model_class: str | None = None
    ruling_genus: int | None = None
    standard: bool | None = None


@dataclass(frozen=True)
class VerdictReport:
    invariants: NumericalInvariants
    lam: Fraction
    base_twist_pseff: bool
    omega_pseff: str
    qtilde_positive: str
    nonvanishing: str
    pi1_finite: str
    zeta_status_flags: tuple[str, ...]
    case_trace: tuple[str, ...]
    notes: tuple[str, ...]


def validate_minimal_model_class(
    desc: SurfaceDescription, inv: NumericalInvariants
) -> str:
    cls = desc.minimal_model_class
    if cls not in MINIMAL_MODEL_CLASSES:
        raise InconsistentMinimalModel(
            f"unknown minimal model class {cls!r}", path="minimal_model_class"
        )
    if inv.kappa == 1.0:
        raise InconsistentMinimalModel(
            "a minimal model class only applies when the Kodaira dimension "
            "is nonpositive",
            path="minimal_model_class",
        )
    chi, kappa = _CLASS_INVARIANTS[cls]
    if inv.chi != chi or inv.kappa != kappa:
        raise InconsistentMinimalModel(
            f"class {cls} needs chi {chi}, found chi {inv.chi} with "
            f"kappa {inv.kappa}",
            path="minimal_model_class",
        )
    if cls == "ruled":
        if desc.ruling_genus is None or desc.ruling_genus < 1:
            raise InconsistentMinimalModel(
                "a ruled class needs a ruling genus of at least one; genus "
                "zero is the rational class",
                path="ruling_genus",
            )
    elif desc.ruling_genus is not None:
        raise InconsistentMinimalModel(
            "ruling genus only applies to the ruled class",
            path="ruling_genus",
        )
    return cls


def _effective_standard(desc: SurfaceDescription) -> bool | None:
    if desc.standard is not None:
        return desc.standard
    if desc.action is not None:
        return classify_action(desc.action).standard
    if desc.config.cm_flag is False:
        # without complex multiplication the only automorphisms fixing the
        # origin are plus and minus one, so the action is standard
        return True
    return None


def evaluate(desc: SurfaceDescription) -> VerdictReport:
    inv = numerical_invariants(desc.config)
    lam, base_twist = lambda_and_base_twist(desc.config)
    zeta_flags = tuple(
        sorted(
            f
            for f in (ZETA_NEF_CODIM_ONE, ZETA_PSEUDOEFFECTIVE)
            if f in desc.config.assumptions
        )
    )

    cls = None
    if desc.minimal_model_class is not None:
        cls = validate_minimal_model_class(desc, inv)
    elif desc.ruling_genus is not None:
        raise InputError(
            "ruling genus needs the ruled minimal model class",
            path="ruling_genus",
        )

    omega = qtilde = nonvan = UNKNOWN
    trace: list[str] = []
    notes: list[str] = []

    criterion = qtilde_criterion(desc.config)
    if criterion.answer == YES:
        qtilde = YES
        trace.append("qtilde-criterion")

    if inv.kappa != 1.0:
        if cls is None:
            trace.append("kappa-le-0-class-missing")
            notes.append(
                "kodaira dimension is nonpositive and no minimal model "
                "class was supplied; only the orbifold criterion applies"
            )
        else:
            trace.append(f"minimal-model:{cls}")
            if cls in _POSITIVE_CLASSES:
                omega = qtilde = nonvan = YES
            else:
                omega = qtilde = nonvan = NO
    elif inv.e == 0:
        omega = qtilde = nonvan = YES
        trace.append("almost-smooth")
    elif base_twist:
        omega = qtilde = nonvan = YES
        trace.append("base-twist-pseudoeffective")
    elif not desc.config.isotrivial:
        omega = qtilde = nonvan = NO
        trace.append("non-isotrivial-equivalence")
    else:
        standard = _effective_standard(desc)
        if standard:
            omega = qtilde = nonvan = NO
            trace.append("standard-isotrivial-vanishing")
        elif ZETA_NEF_CODIM_ONE in zeta_flags and ZETA_PSEUDOEFFECTIVE in zeta_flags:
            qtilde = nonvan = YES
            trace.append("zeta-assumptions")
            notes.append(
                "positivity granted by the declared tautological-class "
                "assumptions, not derived from the fiber data"
            )
        else:
            trace.append("isotrivial-nonstandard-open")
            notes.append(OPEN_REMARK)

    pi1 = UNKNOWN
    if omega == NO:
        pi1 = YES
        trace.append("finite-fundamental-group")

    return VerdictReport(
        invariants=inv,
        lam=lam,
        base_twist_pseff=base_twist,
        omega_pseff=omega,
        qtilde_positive=qtilde,
        nonvanishing=nonvan,
        pi1_finite=pi1,
        zeta_status_flags=zeta_flags,
        case_trace=tuple(trace),
        notes=tuple(notes),
    )
