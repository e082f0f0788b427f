"""Pairs of real quadratic forms in three variables, with exact coefficients.

A form is stored as the symmetric matrix A of Q(xi) = xi^T A xi; its
Hessian is 2A.  All pencil conditions downstream are evaluated on
Hessians so that one convention holds everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import Mat, Vec, frac, mat, mat_mul, mat_scale, mat_add, transpose


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric 3x3 rational coefficient matrix; Q(xi) = xi^T coeff xi."""

    coeff: Mat

    def __post_init__(self):
        if len(self.coeff) != 3 or any(len(r) != 3 for r in self.coeff):
            raise ValueError("coefficient matrix must be 3x3")
        if any(self.coeff[i][j] != self.coeff[j][i] for i in range(3) for j in range(3)):
            raise ValueError("coefficient matrix must be exactly symmetric")

    @staticmethod
    def from_rows(rows) -> "QuadraticForm":
        return QuadraticForm(mat(rows))

    @staticmethod
    def from_monomials(coeffs: dict) -> "QuadraticForm":
        """Build from {(i, j): c} with 1-based i <= j; cross terms split evenly."""
        m = [[Fraction(0)] * 3 for _ in range(3)]
        for (i, j), c in coeffs.items():
            c = frac(c)
            if i == j:
                m[i - 1][i - 1] += c
            else:
                m[i - 1][j - 1] += c / 2
                m[j - 1][i - 1] += c / 2
        return QuadraticForm(tuple(tuple(r) for r in m))

    @property
    def hessian(self) -> Mat:
        return mat_scale(2, self.coeff)

    def __call__(self, xi: Vec) -> Fraction:
        xi = tuple(frac(x) for x in xi)
        return linalg.dot(xi, linalg.mat_vec(self.coeff, xi))

    def gradient(self, xi: Vec) -> Vec:
        return linalg.mat_vec(self.hessian, tuple(frac(x) for x in xi))

    def is_zero(self) -> bool:
        return linalg.is_zero_mat(self.coeff)

    def monomials(self) -> dict:
        """Inverse of from_monomials: {(i, j): c} over 1-based i <= j, zero terms omitted."""
        out = {}
        for i in range(3):
            if self.coeff[i][i] != 0:
                out[(i + 1, i + 1)] = self.coeff[i][i]
        for i in range(3):
            for j in range(i + 1, 3):
                c = 2 * self.coeff[i][j]
                if c != 0:
                    out[(i + 1, j + 1)] = c
        return out


def qform(rows) -> QuadraticForm:
    return QuadraticForm.from_rows(rows)


@dataclass(frozen=True)
class QuadPair:
    p: QuadraticForm
    q: QuadraticForm


@dataclass(frozen=True)
class Equivalence:
    """Change of variables M1 in GL(3) and recombination M2 in GL(2), both rational."""

    m1: Mat
    m2: Mat

    def __post_init__(self):
        object.__setattr__(self, "m1", mat(self.m1))
        object.__setattr__(self, "m2", mat(self.m2))
        if len(self.m1) != 3 or len(self.m2) != 2:
            raise ValueError("m1 must be 3x3 and m2 must be 2x2")
        if linalg.det(self.m1) == 0 or linalg.det(self.m2) == 0:
            raise ValueError("equivalence matrices must be invertible")

    @staticmethod
    def identity() -> "Equivalence":
        return Equivalence(linalg.identity(3), linalg.identity(2))


def apply_equivalence(pair: QuadPair, e: Equivalence) -> QuadPair:
    """(P', Q')^T = M2 (P(M1 xi), Q(M1 xi))^T, exactly."""
    m1t = transpose(e.m1)
    a = mat_mul(m1t, mat_mul(pair.p.coeff, e.m1))
    b = mat_mul(m1t, mat_mul(pair.q.coeff, e.m1))
    (w, x), (y, z) = e.m2
    new_p = mat_add(mat_scale(w, a), mat_scale(x, b))
    new_q = mat_add(mat_scale(y, a), mat_scale(z, b))
    return QuadPair(QuadraticForm(new_p), QuadraticForm(new_q))


def verify_equivalence(pair_a: QuadPair, pair_b: QuadPair, e: Equivalence) -> bool:
    """True iff e transforms pair_a exactly into pair_b."""
    t = apply_equivalence(pair_a, e)
    return t.p.coeff == pair_b.p.coeff and t.q.coeff == pair_b.q.coeff
