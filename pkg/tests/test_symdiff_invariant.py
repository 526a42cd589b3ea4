"""Invariant dimensions, the Sakai check, and the vanishing criterion."""

import pytest

from ellsurf.errors import DeskScaleExceeded, InputError, PreconditionFailed
from ellsurf.symdiff import (
    HyperellipticModel,
    guaranteed_vanishing,
    invariant_basis,
    invariant_dim,
    sakai_check,
)


def test_constants_survive():
    assert invariant_dim(HyperellipticModel.default(2), 0, 0) == 1


def test_untwisted_one_forms_vanish():
    # every 1-form on the product is anti-invariant, so the basis is empty
    assert invariant_basis(2, 1, 0) == []
    assert invariant_dim(HyperellipticModel.default(2), 1, 0) == 0


def test_untwisted_degree_two_vanishes():
    model = HyperellipticModel.default(2)
    assert len(invariant_basis(2, 2, 0)) == 6
    assert invariant_dim(model, 2, 0) == 0


def test_twisted_degree_two_positive_control():
    # y (dx/y)^2 tensor the order-1 section is a genuine invariant section
    model = HyperellipticModel.default(2)
    assert invariant_dim(model, 2, 1) == 1


def test_dimension_is_model_independent_at_small_degree():
    generic = HyperellipticModel.from_roots([-5, -1, 0, 2, 3, 11])
    default = HyperellipticModel.default(2)
    for i in range(4):
        for j in range(2):
            assert invariant_dim(generic, i, j) == invariant_dim(default, i, j)


def test_sakai_check_small_range():
    for i in range(1, 5):
        assert sakai_check(2, i) == 0
    assert sakai_check(3, 2) == 0
    with pytest.raises(InputError):
        sakai_check(1, 2)
    with pytest.raises(InputError):
        sakai_check(2, 0)


def test_desk_cap(monkeypatch):
    monkeypatch.setenv("ELLSURF_DESK_CAP", "3")
    with pytest.raises(DeskScaleExceeded):
        invariant_dim(HyperellipticModel.default(2), 4, 0)
    monkeypatch.delenv("ELLSURF_DESK_CAP")
    assert invariant_dim(HyperellipticModel.default(2), 4, 0) == 0


def test_guaranteed_vanishing_values():
    assert guaranteed_vanishing(2, 6, 7, 1)
    assert not guaranteed_vanishing(2, 6, 6, 1)
    assert guaranteed_vanishing(2, 6, 1, 0)
    assert guaranteed_vanishing(2, 6, 4, 0)
    assert not guaranteed_vanishing(2, 6, 0, 0)
    assert not guaranteed_vanishing(3, 8, 9, 2)


def test_guaranteed_vanishing_precondition():
    with pytest.raises(PreconditionFailed):
        guaranteed_vanishing(2, 2, 4, 0)


def test_invariant_dim_rejects_negative():
    with pytest.raises(InputError):
        invariant_dim(HyperellipticModel.default(2), -1, 0)
    with pytest.raises(InputError):
        invariant_dim(HyperellipticModel.default(2), 2, -1)
