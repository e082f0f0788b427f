"""Exact linear algebra over the rationals.

Only the small dense matrices this package needs (3x3 up to 6x6).
Vectors are tuples of Fraction, matrices are tuples of row tuples, so
every value is immutable and hashable and can be shared across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

Vec = tuple
Mat = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic; "
                        "rationalize explicitly with Fraction(x).limit_denominator()")
    return Fraction(x)


def vec(entries) -> Vec:
    return tuple(frac(x) for x in entries)


def mat(rows) -> Mat:
    m = tuple(vec(r) for r in rows)
    n = len(m[0])
    if any(len(r) != n for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(nr: int, nc: int) -> Mat:
    return tuple(tuple(ZERO for _ in range(nc)) for _ in range(nr))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, m: Mat) -> Mat:
    c = frac(c)
    return tuple(tuple(c * x for x in r) for r in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(ra, cb)) for cb in bt) for ra in a)


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(r, v)) for r in m)


def dot(u: Vec, v: Vec) -> Fraction:
    return sum(x * y for x, y in zip(u, v))


def cross(u: Vec, v: Vec) -> Vec:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def is_zero_mat(m: Mat) -> bool:
    return all(x == 0 for r in m for x in r)


def det(m: Mat) -> Fraction:
    """Determinant of a square rational matrix by fraction Gaussian elimination."""
    n = len(m)
    a = [list(r) for r in m]
    sign = 1
    d = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        d *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] * inv
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return sign * d


def adjugate3(m: Mat) -> Mat:
    """Transpose cofactor matrix of a 3x3."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return ((e * i - f * h, c * h - b * i, b * f - c * e),
            (f * g - d * i, a * i - c * g, c * d - a * f),
            (d * h - e * g, b * g - a * h, a * e - b * d))


def mixed_adjugate3(a: Mat, b: Mat) -> Mat:
    """Polarization of the adjugate: adj(x*A + y*B) = x^2 adj A + xy C(A,B) + y^2 adj B."""
    return mat_sub(mat_sub(adjugate3(mat_add(a, b)), adjugate3(a)), adjugate3(b))


def rref(m: Mat):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    a = [list(r) for r in m]
    nr, nc = len(a), len(a[0])
    pivots = []
    row = 0
    for col in range(nc):
        piv = next((r for r in range(row, nr) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(nr):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == nr:
            break
    return tuple(tuple(r) for r in a), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel(m: Mat):
    """Basis of the right kernel, as a list of rational vectors."""
    rows, pivots = rref(m)
    nc = len(m[0])
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * nc
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, rhs: Vec):
    """One exact solution of m x = rhs, or None if inconsistent."""
    aug = tuple(r + (b,) for r, b in zip(m, rhs))
    rows, pivots = rref(aug)
    nc = len(m[0])
    if nc in pivots:
        return None
    x = [ZERO] * nc
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][nc]
    return tuple(x)


def _congruence_step(a, t, e):
    # a <- E^T a E, t <- t E for an elementary column op E
    n = len(a)
    ae = [[sum(a[i][k] * e[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    new_a = [[sum(e[k][i] * ae[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    new_t = [[sum(t[i][k] * e[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return new_a, new_t


def diagonalize_congruence(m: Mat):
    """Rational T with T^T m T diagonal; returns (diag entries, T).

    m must be symmetric.  The classic symmetric-pivot reduction: swap in a
    nonzero diagonal entry if one exists, otherwise create one from a
    nonzero off-diagonal pair (char != 2, so a_ii = 2 a_ij after the add).
    """
    n = len(m)
    a = [list(row) for row in m]
    t = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                e = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
                e[i][i] = e[j][j] = ZERO
                e[i][j] = e[j][i] = ONE
                a, t = _congruence_step(a, t, e)
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is None:
                    continue
                e = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
                e[j][i] = ONE  # col_i += col_j
                a, t = _congruence_step(a, t, e)
        if a[i][i] == 0:
            continue
        e = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
        for j in range(i + 1, n):
            if a[i][j] != 0:
                e[i][j] = -a[i][j] / a[i][i]
        a, t = _congruence_step(a, t, e)
    return tuple(a[i][i] for i in range(n)), tuple(tuple(r) for r in t)


def inertia(m: Mat):
    """(n_pos, n_neg, n_zero) of a symmetric rational matrix."""
    d, _ = diagonalize_congruence(m)
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return pos, neg, len(d) - pos - neg


def is_definite(m: Mat) -> bool:
    p, n, z = inertia(m)
    return z == 0 and (p == 0 or n == 0)


def fraction_sqrt(x: Fraction):
    """Exact square root of a nonnegative rational, or None if not a square."""
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def primitive(v: Vec) -> Vec:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry > 0."""
    den = math.lcm(*(x.denominator for x in v))
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)
