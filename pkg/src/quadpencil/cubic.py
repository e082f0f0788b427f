"""Binary cubics and their real-root multiplicity structure.

The pencil determinant det(x1*HP + x2*HQ) of a pair of Hessians is a
binary cubic; the multiplicity pattern of its real projective roots is
what drives the classification.  Roots live on the projective line, so
the analysis runs in the chart x2 = 1 plus the point at infinity (1, 0).
A repeated root of a rational cubic is itself rational, which keeps the
whole computation exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import frac, primitive


class RootKind(enum.Enum):
    IDENTICALLY_ZERO = "identically_zero"
    TRIPLE_REAL = "triple_real"
    DOUBLE_SIMPLE_REAL = "double_simple_real"
    THREE_DISTINCT_REAL = "three_distinct_real"
    ONE_REAL_PLUS_COMPLEX_PAIR = "one_real_plus_complex_pair"


@dataclass(frozen=True)
class BinaryCubic:
    """c0*x1^3 + c1*x1^2*x2 + c2*x1*x2^2 + c3*x2^3 with rational coefficients."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, frac(getattr(self, name)))

    def coefficients(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients())

    def __call__(self, x1, x2) -> Fraction:
        x1, x2 = frac(x1), frac(x2)
        return ((self.c0 * x1 + self.c1 * x2) * x1 + self.c2 * x2 * x2) * x1 + self.c3 * x2 ** 3

    def scaled(self, k) -> "BinaryCubic":
        k = frac(k)
        return BinaryCubic(*(k * c for c in self.coefficients()))

    def compose(self, m) -> "BinaryCubic":
        """Substitute (x1, x2) -> (a x1 + b x2, c x1 + d x2) for m = ((a,b),(c,d))."""
        (a, b), (c, d) = (tuple(map(frac, r)) for r in m)
        # expand c0 u^3 + c1 u^2 v + c2 u v^2 + c3 v^3 with u = a x1 + b x2, v = c x1 + d x2
        u = (a, b)
        v = (c, d)

        def mul(p, q):
            out = [Fraction(0)] * (len(p) + len(q) - 1)
            for i, pi in enumerate(p):
                for j, qj in enumerate(q):
                    out[i + j] += pi * qj
            return out

        u2, v2 = mul(u, u), mul(v, v)
        u3, v3 = mul(u2, u), mul(v2, v)
        u2v, uv2 = mul(u2, v), mul(u, v2)
        acc = [Fraction(0)] * 4
        for coef, term in ((self.c0, u3), (self.c1, u2v), (self.c2, uv2), (self.c3, v3)):
            for k in range(4):
                acc[k] += coef * term[k]
        return BinaryCubic(*acc)

    def deflate(self, direction) -> "BinaryCubic_linear":
        """Divide out the linear form vanishing at a projective root once.

        Returns the quotient's coefficient list (degree one lower), raising
        if the direction is not a root.
        """
        a, b = (frac(x) for x in direction)
        if self(a, b) != 0:
            raise ValueError("not a root of the cubic")
        # linear form with root (a, b) is L = b*x1 - a*x2; synthetic division.
        cs = list(self.coefficients())
        if b != 0:
            # F = L * (q0 x1^2 + q1 x1 x2 + q2 x2^2); match coefficients
            q0 = cs[0] / b
            q1 = (cs[1] + a * q0) / b
            q2 = (cs[2] + a * q1) / b
            return (q0, q1, q2)
        # L = -a*x2 up to scale: F divisible by x2
        if cs[0] != 0:
            raise ValueError("not a root of the cubic")
        return (-cs[1] / a, -cs[2] / a, -cs[3] / a)


@dataclass(frozen=True)
class RootPattern:
    kind: RootKind
    repeated_root_direction: Optional[tuple] = None
    simple_real_roots_count: int = 0

    def __post_init__(self):
        has_rep = self.kind in (RootKind.TRIPLE_REAL, RootKind.DOUBLE_SIMPLE_REAL)
        if has_rep != (self.repeated_root_direction is not None):
            raise ValueError("repeated_root_direction present iff the kind has a repeated root")


def _poly_deg(cs):
    # cs indexed low->high; returns -1 for the zero polynomial
    d = -1
    for i, c in enumerate(cs):
        if c != 0:
            d = i
    return d


def _poly_gcd(a, b):
    """Monic gcd of two univariate rational polynomials (low->high lists)."""
    a = list(a)
    b = list(b)
    while _poly_deg(b) >= 0:
        da, db = _poly_deg(a), _poly_deg(b)
        if da < db:
            a, b = b, a
            continue
        # a -= lead(a)/lead(b) * x^(da-db) * b
        f = a[da] / b[db]
        shift = da - db
        for i in range(db + 1):
            a[i + shift] -= f * b[i]
        a[da] = Fraction(0)
        if _poly_deg(a) < _poly_deg(b):
            a, b = b, a
    d = _poly_deg(a)
    if d < 0:
        return a
    lead = a[d]
    return [c / lead for c in a[: d + 1]]


def root_pattern(cubic: BinaryCubic) -> RootPattern:
    """Exact multiplicity structure of the real projective roots."""
    if cubic.is_zero():
        return RootPattern(RootKind.IDENTICALLY_ZERO)

    c0, c1, c2, c3 = cubic.coefficients()
    # chart x2 = 1: f(t) = c0 t^3 + c1 t^2 + c2 t + c3; infinity (1,0) has
    # multiplicity 3 - deg f.
    f = [c3, c2, c1, c0]
    deg = _poly_deg(f)

    if deg == 0:
        return RootPattern(RootKind.TRIPLE_REAL, (Fraction(1), Fraction(0)))

    if deg == 1:
        return RootPattern(RootKind.DOUBLE_SIMPLE_REAL, (Fraction(1), Fraction(0)), 1)

    if deg == 2:
        a, b, c = f[2], f[1], f[0]
        disc = b * b - 4 * a * c
        if disc > 0:
            return RootPattern(RootKind.THREE_DISTINCT_REAL, None, 3)
        if disc < 0:
            return RootPattern(RootKind.ONE_REAL_PLUS_COMPLEX_PAIR, None, 1)
        t0 = -b / (2 * a)
        return RootPattern(RootKind.DOUBLE_SIMPLE_REAL, primitive((t0, Fraction(1))), 1)

    a, b, c, d = f[3], f[2], f[1], f[0]
    disc = (18 * a * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2
            - 4 * a * c ** 3 - 27 * a ** 2 * d ** 2)
    if disc > 0:
        return RootPattern(RootKind.THREE_DISTINCT_REAL, None, 3)
    if disc < 0:
        return RootPattern(RootKind.ONE_REAL_PLUS_COMPLEX_PAIR, None, 1)
    # repeated root: gcd with the derivative isolates it, and it is rational
    g = _poly_gcd(f, [f[1], 2 * f[2], 3 * f[3]])
    if _poly_deg(g) == 2:
        t0 = -g[1] / 2  # g = (t - t0)^2 monic
        return RootPattern(RootKind.TRIPLE_REAL, primitive((t0, Fraction(1))))
    t0 = -g[0]  # g = t - t0 monic
    return RootPattern(RootKind.DOUBLE_SIMPLE_REAL, primitive((t0, Fraction(1))), 1)


def max_real_root_multiplicity(pattern: RootPattern) -> Optional[int]:
    """Largest multiplicity among real roots; None for the zero cubic."""
    return {
        RootKind.IDENTICALLY_ZERO: None,
        RootKind.TRIPLE_REAL: 3,
        RootKind.DOUBLE_SIMPLE_REAL: 2,
        RootKind.THREE_DISTINCT_REAL: 1,
        RootKind.ONE_REAL_PLUS_COMPLEX_PAIR: 1,
    }[pattern.kind]


def simple_root_of_double_pattern(cubic: BinaryCubic, pattern: RootPattern):
    """For a double+simple cubic, the simple root direction (primitive integers)."""
    if pattern.kind is not RootKind.DOUBLE_SIMPLE_REAL:
        raise ValueError("pattern has no simple companion root")
    a, b = pattern.repeated_root_direction
    # divide out L = b*x1 - a*x2 twice; the remaining linear factor holds the root
    q0, q1, q2 = cubic.deflate((a, b))
    if b != 0:
        l0 = q0 / b
        l1 = (q1 + a * l0) / b
    else:
        l0 = -q1 / a
        l1 = -q2 / a
    # linear factor l0*x1 + l1*x2 vanishes at (-l1, l0)
    return primitive((-l1, l0))
