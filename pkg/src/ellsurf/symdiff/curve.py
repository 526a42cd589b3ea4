"""Hyperelliptic models, twisted pluricanonical bases, and local frames.

The curve is y^2 = h(x) with h squarefree of degree 2g+2, so infinity is a
pair of smooth points swapped by nothing and fixed by the hyperelliptic
involution x -> x, y -> -y. Twists use the invariant degree-2 divisor cut
out by the two points at infinity, which keeps the involution acting on
twisted section spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError, InvalidGenus, PreconditionFailed

Q = Fraction

# polynomials are coefficient tuples in ascending degree


def poly_mul(f, g):
    out = [Q(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return tuple(out)


def poly_derivative(f):
    return tuple(k * c for k, c in enumerate(f))[1:] or (Q(0),)


def poly_eval(f, x):
    acc = Q(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _poly_trim(f):
    f = list(f)
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f, g):
    f = _poly_trim(f)
    g = _poly_trim(g)
    while len(f) >= len(g) and any(c != 0 for c in f):
        factor = f[-1] / g[-1]
        shift = len(f) - len(g)
        for k in range(len(g)):
            f[shift + k] -= factor * g[k]
        f = _poly_trim(f)
    return f


def poly_gcd_degree(f, g) -> int:
    """Degree of gcd(f, g); 0 means coprime."""
    a, b = _poly_trim(f), _poly_trim(g)
    while any(c != 0 for c in b):
        a, b = b, _poly_mod(a, b)
    return len(_poly_trim(a)) - 1 if any(c != 0 for c in a) else -1


@dataclass(frozen=True)
class HyperellipticModel:
    """y^2 = h(x) with marked rational Weierstrass roots."""

    genus: int
    h: tuple[Fraction, ...]
    roots: tuple[Fraction, ...]

    def __post_init__(self):
        if self.genus < 2:
            raise InvalidGenus("hyperelliptic model needs genus at least 2")
        object.__setattr__(self, "h", tuple(Q(c) for c in self.h))
        object.__setattr__(self, "roots", tuple(Q(r) for r in self.roots))
        h = _poly_trim(self.h)
        if len(h) - 1 != 2 * self.genus + 2:
            raise InputError(
                f"h must have degree {2 * self.genus + 2}, got {len(h) - 1}"
            )
        if poly_gcd_degree(self.h, poly_derivative(self.h)) != 0:
            raise InputError("h must be squarefree")
        if len(set(self.roots)) != len(self.roots):
            raise InputError("marked roots must be distinct")
        for r in self.roots:
            if poly_eval(self.h, r) != 0:
                raise InputError(f"marked value {r} is not a root of h")

    @classmethod
    def from_roots(cls, roots) -> "HyperellipticModel":
        roots = tuple(Q(r) for r in roots)
        if len(roots) % 2 != 0:
            raise InputError("need an even number of roots")
        if len(roots) < 6:
            raise InvalidGenus("need at least 6 roots for genus 2")
        h = (Q(1),)
        for r in roots:
            h = poly_mul(h, (-r, Q(1)))
        return cls(len(roots) // 2 - 1, h, roots)

    @classmethod
    def default(cls, genus: int) -> "HyperellipticModel":
        if genus < 2:
            raise InvalidGenus("hyperelliptic model needs genus at least 2")
        return cls.from_roots(range(2 * genus + 2))


@dataclass(frozen=True)
class TwistedBasisElement:
    """The section x^a y^b (dx/y)^l of the l-canonical bundle twisted by
    j times the divisor at infinity."""

    a: int
    b: int
    l: int
    j: int

    def __post_init__(self):
        if self.b not in (0, 1):
            raise InputError("y-exponent is 0 or 1 after reduction by h")
        if self.a < 0 or self.l < 0 or self.j < 0:
            raise InputError("exponents must be nonnegative")


def curve_basis(g: int, l: int, j: int) -> list[TwistedBasisElement]:
    """Monomial basis of the l-canonical sections with twist j at infinity.

    dx/y has divisor (g-1) times the divisor at infinity, x has a simple
    pole and y a pole of order g+1 at each of the two infinite points, so
    holomorphy there is the single inequality a + b(g+1) <= l(g-1) + j.
    """
    if g < 2:
        raise InvalidGenus("curve_basis needs genus at least 2")
    if l < 0 or j < 0:
        raise InputError("degree and twist must be nonnegative")
    bound = l * (g - 1) + j
    out = []
    for b in (0, 1):
        for a in range(bound - b * (g + 1) + 1):
            out.append(TwistedBasisElement(a, b, l, j))
    return out


def elliptic_orders(j: int) -> tuple[int, ...]:
    """Vanishing orders at the marked point of sections of a degree-j
    bundle on the elliptic factor: the Weierstrass gap leaves out j-1."""
    if j < 1:
        raise PreconditionFailed("elliptic_orders needs twist at least 1")
    return tuple(range(j - 1)) + (j,)


def _series_mul(f, g, order):
    out = [Q(0)] * (order + 1)
    for i, a in enumerate(f[: order + 1]):
        if a == 0:
            continue
        for k, b in enumerate(g[: order + 1 - i]):
            out[i + k] += a * b
    return out


def _series_pow(f, e, order):
    out = [Q(1)] + [Q(0)] * order
    for _ in range(e):
        out = _series_mul(out, f, order)
    return out


def _revert_series(c, order):
    """Compositional inverse of s = c1*d + c2*d^2 + ... with c1 != 0.

    Returns d(t) with c(d(t)) = t through the requested order.
    """
    d = [Q(0), 1 / c[1]]
    for m in range(2, order + 1):
        d.append(Q(0))
        # contribution of c_r * d(t)^r for r >= 2 never involves d_m
        total = Q(0)
        power = list(d)
        for r in range(2, m + 1):
            power = _series_mul(power, d, m)
            if r < len(c) and c[r] != 0:
                total += c[r] * power[m]
        d[m] = -total / c[1]
    return d


def local_frame(model: HyperellipticModel, root, order: int):
    """Series for x and for dx/y at a Weierstrass root, in t = z1^2.

    The local coordinate is z1 = y, anti-invariant under the involution.
    Writing x = root + delta(z1^2) where h(root + delta) = z1^2, the frame
    is x = X(t) and dx/y = V(t) dz1 with V = 2 delta'. Series are returned
    through the requested t-order.
    """
    root = Q(root)
    if poly_eval(model.h, root) != 0:
        raise InputError(f"{root} is not a root of h")
    # h(root + delta) as a series in delta: Taylor shift
    shifted = [Q(0)] * (len(model.h))
    for k, c in enumerate(model.h):
        # (root + delta)^k expanded
        term = [Q(1)]
        for _ in range(k):
            term = poly_mul(term, (root, Q(1)))
        for idx, t in enumerate(term):
            shifted[idx] += c * t
    assert shifted[0] == 0
    delta = _revert_series(shifted, order + 1)
    x_series = [root] + delta[1 : order + 1]
    x_series += [Q(0)] * (order + 1 - len(x_series))
    v_series = [2 * (m + 1) * delta[m + 1] for m in range(order + 1)]
    return x_series, v_series
