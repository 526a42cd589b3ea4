"""Hyperelliptic model validation, twisted bases, and local frames."""

from fractions import Fraction

import pytest

from ellsurf.errors import InputError, InvalidGenus, PreconditionFailed
from ellsurf.symdiff import (
    HyperellipticModel,
    curve_basis,
    elliptic_orders,
    local_frame,
)
from ellsurf.symdiff.curve import poly_eval

Q = Fraction


def riemann_roch_oracle(g, l, j):
    """h^0 of a line bundle of degree above 2g-2 on a genus-g curve."""
    deg = l * (2 * g - 2) + 2 * j
    assert deg > 2 * g - 2
    return deg - g + 1


def test_default_model_roots_and_degree():
    m = HyperellipticModel.default(2)
    assert m.roots == tuple(Q(r) for r in range(6))
    assert len(m.h) == 7
    assert m.h[-1] == 1


def test_model_rejects_repeated_root():
    with pytest.raises(InputError):
        HyperellipticModel.from_roots([0, 1, 2, 3, 4, 4])


def test_model_rejects_wrong_degree():
    with pytest.raises(InputError):
        HyperellipticModel(2, (Q(0), Q(1)), ())
    with pytest.raises(InvalidGenus):
        HyperellipticModel.from_roots([0, 1, 2, 3])


def test_model_rejects_unmarked_value():
    m = HyperellipticModel.default(2)
    with pytest.raises(InputError):
        HyperellipticModel(2, m.h, (Q(7),))


def test_canonical_basis_genus_two():
    basis = curve_basis(2, 1, 0)
    assert [(e.a, e.b) for e in basis] == [(0, 0), (1, 0)]


def test_bicanonical_dimension():
    assert len(curve_basis(2, 2, 0)) == riemann_roch_oracle(2, 2, 0) == 3


def test_twisted_canonical_dimension():
    assert len(curve_basis(2, 1, 1)) == riemann_roch_oracle(2, 1, 1) == 3


def test_basis_matches_riemann_roch_oracle():
    for g in (2, 3, 4):
        for l in range(5):
            for j in range(4):
                if l * (2 * g - 2) + 2 * j > 2 * g - 2:
                    assert len(curve_basis(g, l, j)) == riemann_roch_oracle(g, l, j)


def test_basis_elements_satisfy_infinity_bound():
    for g in (2, 3):
        for l in range(4):
            for j in range(3):
                for e in curve_basis(g, l, j):
                    assert e.a + e.b * (g + 1) <= l * (g - 1) + j


def test_elliptic_orders():
    assert elliptic_orders(1) == (1,)
    assert elliptic_orders(2) == (0, 2)
    assert elliptic_orders(3) == (0, 1, 3)
    assert elliptic_orders(5) == (0, 1, 2, 3, 5)
    assert len(elliptic_orders(7)) == 7
    with pytest.raises(PreconditionFailed):
        elliptic_orders(0)


def test_local_frame_inverts_h():
    m = HyperellipticModel.default(2)
    order = 4
    for root in m.roots:
        x_series, v_series = local_frame(m, root, order)
        # h(X(t)) = t exactly through the truncation order
        composed = [Q(0)] * (order + 1)
        power = [Q(1)] + [Q(0)] * order
        for k, c in enumerate(m.h):
            if k > 0:
                nxt = [Q(0)] * (order + 1)
                for ii, a in enumerate(power):
                    if a == 0:
                        continue
                    for kk, b in enumerate(x_series[: order + 1 - ii]):
                        nxt[ii + kk] += a * b
                power = nxt
            for idx in range(order + 1):
                composed[idx] += c * power[idx]
        assert composed[0] == 0
        assert composed[1] == 1
        assert all(c == 0 for c in composed[2:])
        # dx/y = 2 X'(t) dz1 in t = z1^2
        for mm in range(order):
            assert v_series[mm] == 2 * (mm + 1) * x_series[mm + 1]


def test_local_frame_leading_coefficient():
    m = HyperellipticModel.default(2)
    _, v_series = local_frame(m, 0, 2)
    # V(0) = 2 / h'(0); h'(0) = product of the negated other roots
    hprime = 1
    for r in (1, 2, 3, 4, 5):
        hprime *= -r
    assert v_series[0] == Q(2, hprime)
    with pytest.raises(InputError):
        local_frame(m, 7, 2)


def test_from_roots_evaluates_to_zero():
    m = HyperellipticModel.from_roots([-1, 0, 2, 3, 5, 9])
    for r in m.roots:
        assert poly_eval(m.h, r) == 0
    assert m.genus == 2
