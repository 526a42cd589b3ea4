"""Tensor powers of the odd-polynomial module at an A1 point.

At the quotient of a plane by the sign involution, the direct image of
the differentials decomposes against the invariant ring R (even
polynomials in z1, z2); the interesting summand F is the R-module of odd
polynomials. Its tensor powers collapse to powers of the ideal I of the
origin, times either R or one leftover copy of F depending on parity.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError

TRIVIAL = "trivial"
RESIDUAL_F = "F"


@dataclass(frozen=True)
class KummerPower:
    ideal_exponent: int
    residual: str


def kummer_tensor_power(i: int) -> KummerPower:
    """Structure of the i-th tensor power: I^(i/2) for even i, and
    I^((i-1)/2) tensor F for odd i."""
    if i < 1:
        raise InputError("tensor power needs i at least 1")
    if i % 2 == 0:
        return KummerPower(i // 2, TRIVIAL)
    return KummerPower((i - 1) // 2, RESIDUAL_F)


def _odd_monomials(dmax: int) -> set:
    return {
        (a, d - a)
        for d in range(1, dmax + 1, 2)
        for a in range(d + 1)
    }


def _even_monomials(dmax: int) -> set:
    return {
        (a, d - a)
        for d in range(0, dmax + 1, 2)
        for a in range(d + 1)
    }


def _set_product(left: set, right: set, dmax: int) -> set:
    out = set()
    for a1, b1 in left:
        for a2, b2 in right:
            if a1 + a2 + b1 + b2 <= dmax:
                out.add((a1 + a2, b1 + b2))
    return out


def _graded_dims(monomials: set, dmax: int) -> tuple:
    dims = [0] * (dmax + 1)
    for a, b in monomials:
        dims[a + b] += 1
    return tuple(dims)


def odd_power_dims(i: int, dmax: int) -> tuple:
    """Graded dimensions of the span of products of i odd polynomials,
    truncated in degree. Brute force by multiplying monomial sets."""
    if i < 1:
        raise InputError("tensor power needs i at least 1")
    odd = _odd_monomials(dmax)
    span = odd
    for _ in range(i - 1):
        span = _set_product(span, odd, dmax)
    return _graded_dims(span, dmax)


def ideal_twist_dims(ideal_exponent: int, residual: str, dmax: int) -> tuple:
    """Graded dimensions of I^t or I^t tensor F over the even ring,
    realized inside the polynomials; the tensor products are torsion-free
    here, so monomial spans compute them faithfully."""
    if residual not in (TRIVIAL, RESIDUAL_F):
        raise InputError(f"unknown residual tag {residual!r}")
    generators = {(2, 0), (1, 1), (0, 2)}
    span = _even_monomials(dmax) if residual == TRIVIAL else _odd_monomials(dmax)
    for _ in range(ideal_exponent):
        span = _set_product(span, generators, dmax)
    return _graded_dims(span, dmax)
