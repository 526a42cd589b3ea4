"""Local symmetric differentials at an involution fixed point.

Everything happens in the completed local ring at a point where the
involution acts by (z1, z2) -> (-z1, -z2). A symmetric differential of
degree i is a finite sum of terms c z1^a z2^b dz1^u dz2^v with u + v = i.
The quotient's obstruction theory is read off two resolution charts:
chart A with p = z1^2, q = z2/z1, and chart B with the roles swapped.
Invariance makes every exponent integral on both charts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import InputError, NotInvariant

Q = Fraction

CHART_A = "A"
CHART_B = "B"


@dataclass(frozen=True)
class LocalDifferential:
    """Exact local data: keys (a, b, u, v) for c z1^a z2^b dz1^u dz2^v."""

    degree: int
    terms: dict

    def __post_init__(self):
        if self.degree < 0:
            raise InputError("symmetric degree must be nonnegative")
        clean = {}
        for key, coeff in self.terms.items():
            a, b, u, v = key
            if min(a, b, u, v) < 0:
                raise InputError(f"negative exponent in term {key}")
            if u + v != self.degree:
                raise InputError(
                    f"term {key} has differential degree {u + v}, expected {self.degree}"
                )
            coeff = Q(coeff)
            if coeff != 0:
                clean[a, b, u, v] = coeff
        object.__setattr__(self, "terms", clean)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_invariant(self) -> bool:
        return all((a + b + self.degree) % 2 == 0 for a, b, _, _ in self.terms)

    def graded_parts(self) -> dict:
        """Split by vanishing order n = a + b at the origin."""
        parts = {}
        for key, coeff in self.terms.items():
            n = key[0] + key[1]
            parts.setdefault(n, {})[key] = coeff
        return {
            n: LocalDifferential(self.degree, t) for n, t in sorted(parts.items())
        }

    def __add__(self, other: "LocalDifferential") -> "LocalDifferential":
        if self.degree != other.degree:
            raise InputError("cannot add differentials of different degrees")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, Q(0)) + coeff
        return LocalDifferential(self.degree, terms)

    def scale(self, c) -> "LocalDifferential":
        c = Q(c)
        return LocalDifferential(
            self.degree, {k: c * v for k, v in self.terms.items()}
        )

    def __mul__(self, other: "LocalDifferential") -> "LocalDifferential":
        terms = {}
        for (a1, b1, u1, v1), c1 in self.terms.items():
            for (a2, b2, u2, v2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2, u1 + u2, v1 + v2)
                terms[key] = terms.get(key, Q(0)) + c1 * c2
        return LocalDifferential(self.degree + other.degree, terms)


def monomial(a, b, u, v, coeff=1) -> LocalDifferential:
    return LocalDifferential(u + v, {(a, b, u, v): Q(coeff)})


# the fixed form z1 dz2 - z2 dz1; its chart-A pullback collects to p dq
M_FORM = LocalDifferential(1, {(1, 0, 0, 1): Q(1), (0, 1, 1, 0): Q(-1)})


def m_power(t: int) -> LocalDifferential:
    out = LocalDifferential(0, {(0, 0, 0, 0): Q(1)})
    for _ in range(t):
        out = out * M_FORM
    return out


def chart_coefficients(w: LocalDifferential) -> dict:
    """Collect the pullback of w to both resolution charts.

    Returns {(chart, s, t, dq_exp): coefficient} for the monomial
    p^s q^t dp^(i - dq_exp) dq^(dq_exp), after substituting z2 = z1 q,
    dz2 = q dz1 + z1 dq and z1^m dz1^k = 2^(-k) p^((m-k)/2) dp^k on chart
    A, and symmetrically on chart B. Raises NotInvariant on terms of odd
    parity, where the exponents would leave the integers.
    """
    i = w.degree
    out = {}
    for (a, b, u, v), c in w.terms.items():
        n = a + b
        if (n + i) % 2 != 0:
            raise NotInvariant(
                f"term z1^{a} z2^{b} dz1^{u} dz2^{v} changes sign under the involution"
            )
        for vp in range(v + 1):
            s, rem = divmod(n + 2 * vp - i, 2)
            assert rem == 0
            key = (CHART_A, s, b + v - vp, vp)
            out[key] = out.get(key, Q(0)) + c * comb(v, vp) * Q(1, 2 ** (i - vp))
        for up in range(u + 1):
            s = (n + 2 * up - i) // 2
            key = (CHART_B, s, a + u - up, up)
            out[key] = out.get(key, Q(0)) + c * comb(u, up) * Q(1, 2 ** (i - up))
    return out


def bad_chart_coefficients(w: LocalDifferential) -> dict:
    """The collected chart coefficients sitting at negative p-exponents."""
    return {k: c for k, c in chart_coefficients(w).items() if k[1] < 0}


def blowup_holomorphy(w: LocalDifferential) -> bool:
    """Whether the pullback of w is holomorphic on both resolution charts."""
    return all(c == 0 for c in bad_chart_coefficients(w).values())


# lexicographic term order on (a, b, u, v); the leading term of M_FORM
# is then z1 dz2, and a single divisor is its own Groebner basis, so a
# nonzero remainder certifies that no exact quotient exists
def _leading_key(terms):
    return max(terms)


def _divide_once(w: LocalDifferential):
    if w.is_zero:
        return LocalDifferential(max(w.degree - 1, 0), {})
    terms = dict(w.terms)
    quotient = {}
    while terms:
        a, b, u, v = _leading_key(terms)
        if a < 1 or v < 1:
            return None
        c = terms.pop((a, b, u, v))
        qkey = (a - 1, b, u, v - 1)
        quotient[qkey] = quotient.get(qkey, Q(0)) + c
        # subtract c * qkey * (z1 dz2 - z2 dz1); the z1 dz2 part cancels
        lower = (a - 1, b + 1, u + 1, v - 1)
        val = terms.get(lower, Q(0)) + c
        if val == 0:
            terms.pop(lower, None)
        else:
            terms[lower] = val
    return LocalDifferential(w.degree - 1, quotient)


def m_divide(w: LocalDifferential, t: int):
    """Exact quotient of w by the t-th power of z1 dz2 - z2 dz1, or None."""
    if t < 0:
        raise InputError("power must be nonnegative")
    for _ in range(t):
        w = _divide_once(w)
        if w is None:
            return None
    return w


def obstruction_profile(i: int, j: int) -> tuple[int, int]:
    """Least admissible vanishing order and the forced parity.

    An invariant differential of degree i whose pullbacks are holomorphic
    with twist allowance j has graded parts only in orders n >= i - 2j of
    the parity of i; the first slot is that bound rounded up into the
    right parity class.
    """
    if i < 0 or j < 0:
        raise InputError("degree and twist must be nonnegative")
    n_min = max(0, i - 2 * j)
    if (n_min + i) % 2 != 0:
        n_min += 1
    return n_min, i % 2
