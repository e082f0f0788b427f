"""Condition checks on a pair of quadratic forms: pencil determinant,
irreducibility, the determinant condition on gradients, the curvature
integrability condition, and pencil signatures.

Everything here is exact; inputs and witnesses are rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .cubic import BinaryCubic, RootPattern, root_pattern, max_real_root_multiplicity
from .forms import QuadPair
from .linalg import Mat, Vec, adjugate3, det, frac, kernel, mat_add, mat_scale


class ZeroDirection(ValueError):
    """Raised when a pencil direction (a, b) = (0, 0) is supplied."""


def pencil_cubic(pair: QuadPair) -> BinaryCubic:
    """det(x1*HP + x2*HQ) for the Hessians of the pair, as an exact binary cubic.

    Uses det(A + tB) = det A + t tr(adj(A) B) + t^2 tr(adj(B) A) + t^3 det B.
    """
    hp, hq = pair.p.hessian, pair.q.hessian

    def tr_adj_times(a, b):
        adj = adjugate3(a)
        return sum(adj[i][k] * b[k][i] for i in range(3) for k in range(3))

    return BinaryCubic(det(hp), tr_adj_times(hp, hq), tr_adj_times(hq, hp), det(hq))


def _sym_six(m: Mat) -> Vec:
    # symmetric 3x3 flattened to its six independent entries
    return (m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2])


def is_irreducible(pair: QuadPair):
    """(True, None) if the pair is irreducible, else (False, witness).

    Reducible means the Hessians are linearly dependent, or they share a
    kernel vector (a variable both forms omit after a linear change).  The
    witness is ("dependent", (a, b)) with a*HP + b*HQ = 0, or
    ("common_kernel", v).
    """
    hp, hq = pair.p.hessian, pair.q.hessian
    dep = kernel(tuple(zip(_sym_six(hp), _sym_six(hq))))
    if dep:
        return False, ("dependent", linalg.primitive(dep[0]))
    stacked = hp + hq  # 6x3
    common = kernel(stacked)
    if common:
        return False, ("common_kernel", linalg.primitive(common[0]))
    return True, None


@dataclass(frozen=True)
class DConditionResult:
    """Whether det[grad P, grad Q, w] vanishes identically for some w != 0."""

    holds: bool
    witness_w: Optional[Vec] = None


def _gradient_cross_forms(pair: QuadPair):
    # The three quadratic forms G_k(xi) with det[grad P, grad Q, w] = sum_k w_k G_k(xi).
    hp, hq = pair.p.hessian, pair.q.hessian

    def lin_times_lin(u, v):
        return tuple(tuple((u[i] * v[j] + u[j] * v[i]) / 2 for j in range(3)) for i in range(3))

    rows_p = hp
    rows_q = hq
    g1 = linalg.mat_sub(lin_times_lin(rows_p[1], rows_q[2]), lin_times_lin(rows_p[2], rows_q[1]))
    g2 = linalg.mat_sub(lin_times_lin(rows_p[2], rows_q[0]), lin_times_lin(rows_p[0], rows_q[2]))
    g3 = linalg.mat_sub(lin_times_lin(rows_p[0], rows_q[1]), lin_times_lin(rows_p[1], rows_q[0]))
    return g1, g2, g3


def check_D(pair: QuadPair) -> DConditionResult:
    """Expand det[grad P(xi), grad Q(xi), w] as a quadratic in xi, linear in w.

    The condition fails exactly when the 6x3 coefficient matrix has a
    nontrivial kernel; a kernel basis vector is the witness.
    """
    g1, g2, g3 = _gradient_cross_forms(pair)
    system = tuple(zip(_sym_six(g1), _sym_six(g2), _sym_six(g3)))  # 6x3
    null = kernel(system)
    if null:
        return DConditionResult(False, linalg.primitive(null[0]))
    return DConditionResult(True, None)


@dataclass(frozen=True)
class CMDecision:
    """Integrability of |det(x1 P + x2 Q)|^-gamma on the circle for all gamma < 2/3.

    Holds iff the pencil cubic is nonzero with only simple real roots;
    critical_gamma is 1/(max real-root multiplicity), 0 for the zero cubic.
    """

    holds: bool
    max_real_root_multiplicity: Optional[int]
    critical_gamma: Fraction


def check_CM(pair: QuadPair) -> CMDecision:
    pattern = root_pattern(pencil_cubic(pair))
    mult = max_real_root_multiplicity(pattern)
    if mult is None:
        return CMDecision(False, None, Fraction(0))
    return CMDecision(mult <= 1, mult, Fraction(1, mult))


def signature_at(pair: QuadPair, direction) -> tuple:
    """Inertia (n_pos, n_neg, n_zero) of a*HP + b*HQ by exact congruence."""
    a, b = (frac(x) for x in direction)
    if a == 0 and b == 0:
        raise ZeroDirection("pencil direction (0, 0)")
    m = mat_add(mat_scale(a, pair.p.hessian), mat_scale(b, pair.q.hessian))
    return linalg.inertia(m)
