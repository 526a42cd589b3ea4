"""Invariant twisted symmetric differentials on a hyperelliptic x elliptic
product, cut down by the local conditions at the involution fixed points."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DeskScaleExceeded, InputError, PreconditionFailed
from .curve import (
    HyperellipticModel,
    TwistedBasisElement,
    curve_basis,
    elliptic_orders,
    local_frame,
    _series_mul,
    _series_pow,
)
from .local import LocalDifferential, bad_chart_coefficients

Q = Fraction

DESK_CAP_ENV = "ELLSURF_DESK_CAP"
DEFAULT_DESK_CAP = 10


def desk_cap() -> int:
    return int(os.environ.get(DESK_CAP_ENV, DEFAULT_DESK_CAP))


@dataclass(frozen=True)
class InvariantBasisElement:
    """curve factor x^a y^b (dx/y)^l tensored with the elliptic section of
    local germ z2^k, completed by dz2^(i-l)."""

    curve: TwistedBasisElement
    k: int


def invariant_basis(g: int, i: int, j: int) -> list[InvariantBasisElement]:
    """Monomial basis of the invariant twisted degree-i differentials.

    The involution acts by -1 on y, on dx/y, and on dz2, and by (-1)^k on
    the order-k elliptic section, so a tensor x^a y^b (dx/y)^l z2^k
    dz2^(i-l) is invariant exactly when b + k + i is even.
    """
    orders = (0,) if j == 0 else elliptic_orders(j)
    out = []
    for l in range(i + 1):
        for el in curve_basis(g, l, j):
            for k in orders:
                if (el.b + k + i) % 2 == 0:
                    out.append(InvariantBasisElement(el, k))
    return out


def _localize(el: InvariantBasisElement, i, x_series, v_series, order):
    """Graded parts below order i of the element at one fixed point.

    Terms of vanishing order at least i never contribute obstruction rows,
    so the expansion is truncated there; with the germ z2^k and y = z1 the
    z1-cutoff is i - 1 - k.
    """
    a, b, l = el.curve.a, el.curve.b, el.curve.l
    cutoff = i - 1 - el.k - b
    if cutoff < 0:
        return LocalDifferential(i, {})
    m_max = min(cutoff // 2, order)
    series = _series_mul(_series_pow(x_series, a, m_max), _series_pow(v_series, l, m_max), m_max)
    terms = {}
    for m, c in enumerate(series):
        if c != 0:
            terms[2 * m + b, el.k, l, i - l] = c
    return LocalDifferential(i, terms)


def _rank(rows) -> int:
    rows = [row[:] for row in rows if any(c != 0 for c in row)]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    col = 0
    while col < width and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / lead
                for c in range(col, width):
                    rows[r][c] -= factor * rows[rank][c]
        rank += 1
        col += 1
    return rank


def invariant_dim(model: HyperellipticModel, i: int, j: int) -> int:
    """Dimension of the invariant twisted differentials holomorphic on the
    resolution of every marked fixed point.

    Assembles the invariant tensor basis, expands each element at every
    marked Weierstrass point paired with the origin of the elliptic factor,
    collects the chart coefficients at negative p-exponents, and returns
    the kernel dimension of the resulting exact linear system.
    """
    if i < 0 or j < 0:
        raise InputError("degree and twist must be nonnegative")
    cap = desk_cap()
    if i > cap:
        raise DeskScaleExceeded(
            f"degree {i} above the desk-scale cap {cap}; raise {DESK_CAP_ENV} to override"
        )
    basis = invariant_basis(model.genus, i, j)
    order = max((i - 1) // 2, 0)
    frames = [local_frame(model, r, order) for r in model.roots]

    raw_rows = []
    columns = set()
    for el in basis:
        row = {}
        for idx, (x_series, v_series) in enumerate(frames):
            local = _localize(el, i, x_series, v_series, order)
            for key, coeff in bad_chart_coefficients(local).items():
                row[(idx,) + key] = coeff
                columns.add((idx,) + key)
        raw_rows.append(row)
    columns = sorted(columns)
    index = {c: pos for pos, c in enumerate(columns)}
    rows = []
    for row in raw_rows:
        dense = [Q(0)] * len(columns)
        for key, coeff in row.items():
            dense[index[key]] = coeff
        rows.append(dense)
    return len(basis) - _rank(rows)


def sakai_check(g: int, i: int) -> int:
    """Untwisted invariant dimension on the default model; the degree
    comparison l(2g-2) < i(2g+2) forces this to vanish for every i >= 1."""
    if g < 2:
        raise InputError("sakai_check needs genus at least 2")
    if i < 1:
        raise InputError("sakai_check needs degree at least 1")
    return invariant_dim(HyperellipticModel.default(g), i, 0)


def guaranteed_vanishing(g: int, zcount: int, i: int, j: int) -> bool:
    """Whether the fixed-point count already forces vanishing at (i, j).

    True when (i - 2j)(2g - 1) > i(2g - 2) and i >= 2j: exactly when some
    rational margin epsilon > 0 fits between the local vanishing orders
    forced at the zcount fixed points and the degree available on the
    curve factor.
    """
    if zcount < 2 * g - 1:
        raise PreconditionFailed(
            f"need at least {2 * g - 1} fixed points, got {zcount}"
        )
    return (i - 2 * j) * (2 * g - 1) > i * (2 * g - 2) and i >= 2 * j
