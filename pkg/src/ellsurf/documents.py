"""JSON-shaped documents for surfaces, lattices, and reports.

A surface document is a plain dict with sections base, fibers, flags, and
optionally action and a minimal model class. Parsing validates everything
the constructors check plus the cross-field rules (integral chi, the
Hurwitz count for a declared action) and tags every failure with the path
of the offending field. Rationals travel as "p/q" strings.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

from .errors import InputError
from .kodaira import (
    FiberConfiguration,
    FiberType,
    numerical_invariants,
    parse_kind,
)
from .lattice import CurveConfig, QDivisor, ZariskiPair
from .orbifold import (
    ACTIONS,
    BranchPoint,
    GroupActionData,
    hurwitz_genus,
    lambda_and_base_twist,
)
from .verdict import (
    ZETA_NEF_CODIM_ONE,
    ZETA_PSEUDOEFFECTIVE,
    SurfaceDescription,
    VerdictReport,
)

Q = Fraction


@contextmanager
def _at(path):
    """Tag InputErrors escaping the block with a field path."""
    try:
        yield
    except InputError as e:
        if e.path is None:
            raise type(e)(str(e), path=path) from None
        raise


def _require(value, kind, path):
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise InputError(f"expected {kind.__name__}", path=path)
    return value


def format_rational(x) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value, path="value") -> Fraction:
    if isinstance(value, bool):
        raise InputError("expected a rational number", path=path)
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        try:
            return Q(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(
                f"cannot read {value!r} as a rational p/q", path=path
            ) from None
    raise InputError("expected an integer or a p/q string", path=path)


def format_kappa(kappa: float) -> str:
    if kappa == 1.0:
        return "1"
    if kappa == 0.0:
        return "0"
    return "-infinity"


def _parse_fiber(entry, path) -> tuple[FiberType, int]:
    if not isinstance(entry, dict):
        raise InputError("each fiber must be an object", path=path)
    kind = entry.get("kind")
    if not isinstance(kind, str):
        raise InputError("missing fiber kind", path=f"{path}.kind")
    n = entry.get("n")
    if n is not None:
        _require(n, int, f"{path}.n")
    multiplicity = entry.get("multiplicity", 1)
    _require(multiplicity, int, f"{path}.multiplicity")
    count = entry.get("count", 1)
    _require(count, int, f"{path}.count")
    if count < 1:
        raise InputError("count must be at least 1", path=f"{path}.count")
    with _at(f"{path}.kind"):
        bare = parse_kind(kind, n)
    with _at(f"{path}.multiplicity"):
        t = FiberType(bare.family, bare.n, multiplicity)
    return t, count


_FLAG_FIELDS = (
    "isotrivial",
    "cm",
    "standard",
    "zeta_nef_codim_one",
    "zeta_pseudoeffective",
)


def _parse_action(entry, base_genus) -> GroupActionData:
    if not isinstance(entry, dict):
        raise InputError("action must be an object", path="action")
    order = entry.get("group_order")
    _require(order, int, "action.group_order")
    branch_doc = entry.get("branch", [])
    if not isinstance(branch_doc, list):
        raise InputError("branch must be an array", path="action.branch")
    branch = []
    for i, b in enumerate(branch_doc):
        path = f"action.branch[{i}]"
        if not isinstance(b, dict):
            raise InputError("each branch point must be an object", path=path)
        _require(b.get("order"), int, f"{path}.order")
        act = b.get("action")
        if act not in ACTIONS:
            raise InputError(
                f"action must be one of {', '.join(ACTIONS)}",
                path=f"{path}.action",
            )
        with _at(path):
            branch.append(BranchPoint(b["order"], act))
    with _at("action"):
        data = GroupActionData(order, base_genus, tuple(branch))
        hurwitz_genus(data)
    return data


def parse_surface(doc) -> SurfaceDescription:
    if not isinstance(doc, dict):
        raise InputError("surface document must be an object", path="")
    base = doc.get("base") or {}
    if not isinstance(base, dict):
        raise InputError("base must be an object", path="base")
    genus = base.get("genus", 0)
    _require(genus, int, "base.genus")
    if genus < 0:
        raise InputError("genus must be nonnegative", path="base.genus")

    fibers_doc = doc.get("fibers") or []
    if not isinstance(fibers_doc, list):
        raise InputError("fibers must be an array", path="fibers")
    fibers: list[FiberType] = []
    for i, entry in enumerate(fibers_doc):
        t, count = _parse_fiber(entry, f"fibers[{i}]")
        fibers.extend([t] * count)

    flags = doc.get("flags") or {}
    if not isinstance(flags, dict):
        raise InputError("flags must be an object", path="flags")
    for key in flags:
        if key not in _FLAG_FIELDS:
            raise InputError(f"unknown flag {key!r}", path=f"flags.{key}")
    isotrivial = flags.get("isotrivial", False)
    _require(isotrivial, bool, "flags.isotrivial")
    cm = flags.get("cm")
    if cm is not None:
        _require(cm, bool, "flags.cm")
    standard = flags.get("standard")
    if standard is not None:
        _require(standard, bool, "flags.standard")
    assumptions = set()
    for key, name in (
        ("zeta_nef_codim_one", ZETA_NEF_CODIM_ONE),
        ("zeta_pseudoeffective", ZETA_PSEUDOEFFECTIVE),
    ):
        value = flags.get(key, False)
        _require(value, bool, f"flags.{key}")
        if value:
            assumptions.add(name)

    action = None
    if doc.get("action") is not None:
        if not isotrivial:
            raise InputError(
                "a group action implies an isotrivial fibration",
                path="flags.isotrivial",
            )
        action = _parse_action(doc["action"], genus)

    cls = doc.get("minimal_model_class")
    if cls is not None and not isinstance(cls, str):
        raise InputError("expected a string", path="minimal_model_class")
    ruling_genus = doc.get("ruling_genus")
    if ruling_genus is not None:
        _require(ruling_genus, int, "ruling_genus")

    with _at("fibers"):
        config = FiberConfiguration(
            genus,
            tuple(fibers),
            isotrivial=isotrivial,
            cm_flag=cm,
            assumptions=frozenset(assumptions),
        )
        numerical_invariants(config)

    return SurfaceDescription(
        config=config,
        action=action,
        minimal_model_class=cls,
        ruling_genus=ruling_genus,
        standard=standard,
    )


def emit_surface(desc: SurfaceDescription) -> dict:
    config = desc.config
    fibers = []
    for t in config.fibers:
        entry = {"kind": t.family}
        if t.family in ("I", "I*"):
            entry["n"] = t.n
        if t.multiplicity != 1:
            entry["multiplicity"] = t.multiplicity
        fibers.append(entry)
    doc = {
        "base": {"genus": config.base_genus},
        "fibers": fibers,
        "flags": {
            "isotrivial": config.isotrivial,
            "cm": config.cm_flag,
            "standard": desc.standard,
            "zeta_nef_codim_one": ZETA_NEF_CODIM_ONE in config.assumptions,
            "zeta_pseudoeffective": ZETA_PSEUDOEFFECTIVE
            in config.assumptions,
        },
    }
    if desc.action is not None:
        doc["action"] = {
            "group_order": desc.action.group_order,
            "branch": [
                {"order": b.stab_order, "action": b.action}
                for b in desc.action.branch
            ],
        }
    if desc.minimal_model_class is not None:
        doc["minimal_model_class"] = desc.minimal_model_class
    if desc.ruling_genus is not None:
        doc["ruling_genus"] = desc.ruling_genus
    return doc


def parse_lattice(doc) -> CurveConfig:
    if not isinstance(doc, dict):
        raise InputError("lattice document must be an object", path="")
    gram = doc.get("gram")
    if not isinstance(gram, list) or not gram:
        raise InputError("missing gram matrix", path="gram")
    for i, row in enumerate(gram):
        if not isinstance(row, list) or len(row) != len(gram):
            raise InputError("gram must be square", path=f"gram[{i}]")
        for j, value in enumerate(row):
            _require(value, int, f"gram[{i}][{j}]")
    labels = doc.get("labels")
    if labels is None:
        labels = [f"C{i + 1}" for i in range(len(gram))]
    if not isinstance(labels, list) or not all(
        isinstance(l, str) for l in labels
    ):
        raise InputError("labels must be an array of strings", path="labels")
    with _at("gram"):
        return CurveConfig(tuple(labels), gram)


def parse_divisor(config: CurveConfig, text: str) -> QDivisor:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != config.rank:
        raise InputError(
            f"expected {config.rank} coefficients, got {len(parts)}",
            path="divisor",
        )
    coeffs = [parse_rational(p, f"divisor[{i}]") for i, p in enumerate(parts)]
    with _at("divisor"):
        return QDivisor(config, coeffs)


def invariants_payload(config: FiberConfiguration) -> dict:
    inv = numerical_invariants(config)
    lam, base_twist = lambda_and_base_twist(config)
    return {
        "e": inv.e,
        "chi": inv.chi,
        "lambda": format_rational(lam),
        "delta": format_rational(inv.delta),
        "kappa": format_kappa(inv.kappa),
        "base_twist_pseff": base_twist,
    }


def report_payload(report: VerdictReport) -> dict:
    return {
        "invariants": {
            "e": report.invariants.e,
            "chi": report.invariants.chi,
            "lambda": format_rational(report.lam),
            "delta": format_rational(report.invariants.delta),
            "kappa": format_kappa(report.invariants.kappa),
        },
        "base_twist_pseff": report.base_twist_pseff,
        "omega_pseff": report.omega_pseff,
        "qtilde_positive": report.qtilde_positive,
        "nonvanishing": report.nonvanishing,
        "pi1_finite": report.pi1_finite,
        "zeta_status_flags": list(report.zeta_status_flags),
        "case_trace": list(report.case_trace),
        "notes": list(report.notes),
    }


def zariski_payload(pair: ZariskiPair) -> dict:
    config = pair.positive.config
    return {
        "labels": list(config.labels),
        "positive": [format_rational(c) for c in pair.positive.coeffs],
        "negative": [format_rational(c) for c in pair.negative.coeffs],
        "negative_support": [
            config.labels[i] for i in pair.negative.support
        ],
    }
