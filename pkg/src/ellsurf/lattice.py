"""Intersection lattices of curve configurations and Zariski decomposition.

All arithmetic is exact over the rationals. A configuration is a finite list
of labelled curves with a symmetric Gram matrix of intersection numbers;
divisors are rational coefficient vectors on the configuration. Nothing here
knows about ambient surfaces: "nef" always means nonnegative intersection
with the listed curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InputError,
    InternalError,
    MismatchedConfig,
    NegativeCoefficient,
    NotNegativeDefinite,
)

Q = Fraction

NEGATIVE_DEFINITE = "negative_definite"
NEGATIVE_SEMIDEFINITE = "negative_semidefinite"
OTHER = "other"


def _to_fraction_matrix(rows):
    return tuple(tuple(Q(x) for x in row) for row in rows)


@dataclass(frozen=True)
class CurveConfig:
    """A labelled curve configuration with its rational Gram matrix."""

    labels: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def __init__(self, labels: Sequence[str], gram):
        labels = tuple(labels)
        gram = _to_fraction_matrix(gram)
        if len(set(labels)) != len(labels):
            raise InputError("curve labels must be distinct")
        n = len(labels)
        if len(gram) != n or any(len(row) != n for row in gram):
            raise InputError("Gram matrix shape does not match label count")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise InputError("Gram matrix must be symmetric")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no curve labelled {label!r}") from None


@dataclass(frozen=True)
class QDivisor:
    """Rational divisor supported on a configuration's curves."""

    config: CurveConfig
    coeffs: tuple[Fraction, ...]

    def __init__(self, config: CurveConfig, coeffs):
        coeffs = tuple(Q(c) for c in coeffs)
        if len(coeffs) != config.rank:
            raise MismatchedConfig("coefficient vector length differs from configuration rank")
        object.__setattr__(self, "config", config)
        object.__setattr__(self, "coeffs", coeffs)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    def __add__(self, other: "QDivisor") -> "QDivisor":
        _require_same_config(self, other)
        return QDivisor(self.config, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        _require_same_config(self, other)
        return QDivisor(self.config, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, t) -> "QDivisor":
        t = Q(t)
        return QDivisor(self.config, [t * c for c in self.coeffs])


def _require_same_config(a: QDivisor, b: QDivisor) -> None:
    if a.config is not b.config and a.config != b.config:
        raise MismatchedConfig("divisors live on different configurations")


def intersection_number(d1: QDivisor, d2: QDivisor) -> Fraction:
    """Bilinear pairing of two divisors through the Gram matrix."""
    _require_same_config(d1, d2)
    gram = d1.config.gram
    total = Q(0)
    for i, a in enumerate(d1.coeffs):
        if a == 0:
            continue
        row = gram[i]
        for j, b in enumerate(d2.coeffs):
            if b != 0:
                total += a * b * row[j]
    return total


def pair_with_curve(d: QDivisor, i: int) -> Fraction:
    """Intersection of a divisor with the i-th listed curve."""
    row = d.config.gram[i]
    return sum((c * row[j] for j, c in enumerate(d.coeffs) if c != 0), Q(0))


# Exact dense linear algebra on small matrices.

def _solve(matrix, rhs):
    """Solve a square rational system; returns None if singular."""
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _kernel_basis(matrix):
    """Basis of the null space of a rational matrix, by row reduction."""
    if not matrix:
        return []
    rows = [list(r) for r in matrix]
    n = len(rows[0])
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Q(0)] * n
        vec[fc] = Q(1)
        for idx, pc in enumerate(pivots):
            vec[pc] = -rows[idx][fc]
        basis.append(tuple(vec))
    return basis


def _submatrix(gram, subset):
    return [[gram[i][j] for j in subset] for i in subset]


def _is_positive_semidefinite(matrix):
    """Exact PSD test by pivoted Schur complements."""
    m = [list(row) for row in matrix]
    n = len(m)
    active = list(range(n))
    while active:
        pivot = next((i for i in active if m[i][i] != 0), None)
        if pivot is None:
            # all remaining diagonal entries vanish; PSD forces those rows to vanish
            for i in active:
                for j in active:
                    if m[i][j] != 0:
                        return False
            return True
        if m[pivot][pivot] < 0:
            return False
        active.remove(pivot)
        pv = m[pivot][pivot]
        for i in active:
            if m[i][pivot] == 0:
                continue
            f = m[i][pivot] / pv
            for j in active:
                m[i][j] -= f * m[pivot][j]
            m[i][pivot] = Q(0)
    return True


@dataclass(frozen=True)
class Definiteness:
    kind: str
    kernel: tuple[tuple[Fraction, ...], ...] = ()


def definiteness(config: CurveConfig, subset: Sequence[int] | None = None) -> Definiteness:
    """Classify the Gram form on a subset of curves.

    Returns negative_definite, negative_semidefinite with a kernel basis
    (coordinates relative to the subset), or other. The empty subset is
    negative definite by convention.
    """
    if subset is None:
        subset = range(config.rank)
    subset = list(subset)
    if not subset:
        return Definiteness(NEGATIVE_DEFINITE)
    sub = _submatrix(config.gram, subset)
    neg = [[-x for x in row] for row in sub]
    if not _is_positive_semidefinite(neg):
        return Definiteness(OTHER)
    kernel = _kernel_basis(sub)
    if not kernel:
        return Definiteness(NEGATIVE_DEFINITE)
    return Definiteness(NEGATIVE_SEMIDEFINITE, tuple(kernel))


@dataclass(frozen=True)
class ZariskiPair:
    """Positive and negative parts of a decomposed effective divisor."""

    positive: QDivisor
    negative: QDivisor


def _solve_negative_part(d: QDivisor, support: list[int]) -> QDivisor:
    gram = d.config.gram
    sub = _submatrix(gram, support)
    rhs = [pair_with_curve(d, j) for j in support]
    sol = _solve(sub, rhs)
    if sol is None:
        raise InternalError("negative-definite Gram submatrix was singular")
    coeffs = [Q(0)] * d.config.rank
    for idx, j in enumerate(support):
        coeffs[j] = sol[idx]
    return QDivisor(d.config, coeffs)


def zariski_decompose(d: QDivisor) -> ZariskiPair:
    """Zariski decomposition of an effective divisor on its configuration.

    Iterates the standard support enlargement: start from the curves the
    divisor meets negatively, solve for the negative part against that
    support, and grow the support by every curve the candidate positive part
    still meets negatively. The Gram form restricted to the working support
    must be negative definite at every step, which bounds the iteration by
    the number of curves.
    """
    if not d.is_effective():
        raise InputError("zariski_decompose requires an effective divisor")
    config = d.config
    support = sorted(i for i in range(config.rank) if pair_with_curve(d, i) < 0)
    for _ in range(config.rank + 1):
        if definiteness(config, support).kind != NEGATIVE_DEFINITE:
            raise NotNegativeDefinite(
                "Gram form on support {%s} is not negative definite"
                % ", ".join(config.labels[i] for i in support)
            )
        negative = (
            _solve_negative_part(d, support)
            if support
            else QDivisor(config, [0] * config.rank)
        )
        if any(c < 0 for c in negative.coeffs):
            raise NegativeCoefficient("solved negative part has a negative coefficient")
        positive = d - negative
        violators = [
            i
            for i in range(config.rank)
            if i not in support and pair_with_curve(positive, i) < 0
        ]
        if not violators:
            return ZariskiPair(positive, negative)
        support = sorted(support + violators)
    raise InternalError("support enlargement failed to terminate")


def check_zariski_pair(d: QDivisor, pair: ZariskiPair) -> bool:
    """Verify the four defining conditions of a decomposition, exactly."""
    p, n = pair.positive, pair.negative
    if (p + n).coeffs != d.coeffs:
        return False
    if not n.is_effective():
        return False
    supp = list(n.support)
    if definiteness(d.config, supp).kind != NEGATIVE_DEFINITE:
        return False
    for i in range(d.config.rank):
        if pair_with_curve(p, i) < 0:
            return False
    return all(pair_with_curve(p, j) == 0 for j in supp)


def nef_part_fiber_multiple(p: QDivisor, fiber: QDivisor) -> Fraction | None:
    """The t >= 0 with p numerically a multiple t of the fiber class.

    Matches intersection numbers against every listed curve. When the pairing
    determines no unique t (both classes pair to zero with everything), falls
    back to exact proportionality of coefficient vectors. Returns None if no
    consistent nonnegative t exists.
    """
    _require_same_config(p, fiber)
    gp = [pair_with_curve(p, i) for i in range(p.config.rank)]
    gf = [pair_with_curve(fiber, i) for i in range(p.config.rank)]
    if any(x != 0 for x in gf):
        t = None
        for a, b in zip(gp, gf):
            if b != 0:
                t = a / b
                break
        if any(a != t * b for a, b in zip(gp, gf)):
            return None
        return t if t >= 0 else None
    if any(x != 0 for x in gp):
        return None
    # degenerate pairing on both sides: compare coefficient vectors directly
    if fiber.is_zero():
        return Q(0) if p.is_zero() else None
    t = None
    for a, b in zip(p.coeffs, fiber.coeffs):
        if b != 0:
            t = a / b
            break
    if any(a != t * b for a, b in zip(p.coeffs, fiber.coeffs)):
        return None
    return t if t >= 0 else None
