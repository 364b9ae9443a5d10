"""From set maps to matrices: the braid operator, its Baxterized
spectral-parameter family, and the exact identities they satisfy.

The braid operator of a solution is
    rcheck = sum_{x,y} e_{x,sigma_x(y)} (x) e_{y,tau_y(x)},
its Baxterization  Rcheck(l) = l*rcheck + 1,  and  R(l) = P Rcheck(l)
with P the flip.  All identities below are checked as exact polynomial
statements, never by sampling.
"""

from __future__ import annotations

from .rings import RING_L, RING_L2, RING_Q, UniPoly
from .solutions import SetSolution, apply_r
from .tensor import ShapedMatrix, commutator, embed_pair, perm_p

__all__ = [
    "IdentityError",
    "linearize",
    "baxterize",
    "bax_R",
    "r_nonbraid",
    "check_ybe_spectral",
    "check_unitarity",
    "check_crossing",
    "check_hecke_a",
    "trace_identity",
]


class IdentityError(AssertionError):
    pass


def linearize(s: SetSolution) -> ShapedMatrix:
    """The involutive braid operator rcheck on two legs of dimension n."""
    n = s.n
    m = ShapedMatrix((n, n), RING_Q)
    for x in range(n):
        for y in range(n):
            u, v = apply_r(s, x, y)
            # e_{x, sigma_x(y)} (x) e_{y, tau_y(x)} contributes at ((x,y),(u,v))
            m._acc(x * n + y, u * n + v, RING_Q.one())
    if m @ m != ShapedMatrix.identity((n, n), RING_Q):
        raise IdentityError("braid operator is not involutive")
    return m


def baxterize(rcheck: ShapedMatrix) -> ShapedMatrix:
    """Rcheck(l) = l*rcheck + identity, over Q[l]."""
    n = rcheck.legs[0]
    lam = UniPoly.x()
    out = rcheck.to_ring(RING_L).scale(lam)
    return out + ShapedMatrix.identity((n, n), RING_L)


def bax_R(rcheck: ShapedMatrix) -> ShapedMatrix:
    """R(l) = P Rcheck(l)."""
    n = rcheck.legs[0]
    return perm_p(n, RING_L) @ baxterize(rcheck)


def r_nonbraid(rcheck: ShapedMatrix) -> ShapedMatrix:
    """The non-braid form r = P rcheck."""
    n = rcheck.legs[0]
    return perm_p(n, RING_Q) @ rcheck


def _sub_bi(m, c1, c2, c0=0):
    return m.map_entries(lambda p: p.to_bi(c1, c2, c0), RING_L2)


def check_ybe_spectral(rcheck_l: ShapedMatrix) -> None:
    """Rcheck12(l1-l2) Rcheck23(l1) Rcheck12(l2)
       == Rcheck23(l2) Rcheck12(l1) Rcheck23(l1-l2), exactly in Q[l1,l2]."""
    a_diff = embed_pair(_sub_bi(rcheck_l, 1, -1), 0, 1, 3)
    a1 = embed_pair(_sub_bi(rcheck_l, 1, 0), 0, 1, 3)
    a2 = embed_pair(_sub_bi(rcheck_l, 0, 1), 0, 1, 3)
    b_diff = embed_pair(_sub_bi(rcheck_l, 1, -1), 1, 2, 3)
    b1 = embed_pair(_sub_bi(rcheck_l, 1, 0), 1, 2, 3)
    b2 = embed_pair(_sub_bi(rcheck_l, 0, 1), 1, 2, 3)
    lhs = a_diff @ b1 @ a2
    rhs = b2 @ a1 @ b_diff
    if lhs != rhs:
        raise IdentityError("spectral braid identity fails")


def check_unitarity(R: ShapedMatrix) -> None:
    """R12(l) R21(-l) == (1 - l^2) * identity."""
    n = R.legs[0]
    p = perm_p(n, RING_L)
    r21_neg = (p @ R @ p).map_entries(lambda q: q.compose_affine(-1, 0), RING_L)
    lhs = R @ r21_neg
    scal = UniPoly.from_list([1, 0, -1])
    rhs = ShapedMatrix.identity((n, n), RING_L).scale(scal)
    if lhs != rhs:
        raise IdentityError("unitarity fails")


def check_crossing(R: ShapedMatrix) -> None:
    """R12^{t1}(l) R12^{t2}(-l-n) == l(-l-n) * identity, and the double
    transpose equals R21."""
    n = R.legs[0]
    t1 = R.partial_transpose(0)
    t2 = R.partial_transpose(1).map_entries(
        lambda q: q.compose_affine(-1, -n), RING_L
    )
    lam = UniPoly.x()
    scal = lam * (UniPoly.from_list([-n, -1]))
    lhs = t1 @ t2
    rhs = ShapedMatrix.identity((n, n), RING_L).scale(scal)
    if lhs != rhs:
        raise IdentityError("crossing-unitarity fails")
    p = perm_p(n, RING_L)
    if R.partial_transpose(0).partial_transpose(1) != p @ R @ p:
        raise IdentityError("double transpose does not give R21")


def check_hecke_a(rcheck: ShapedMatrix) -> None:
    """rcheck^2 == 1 and the constant braid relation on three legs."""
    n = rcheck.legs[0]
    ident = ShapedMatrix.identity((n, n), RING_Q)
    if rcheck @ rcheck != ident:
        raise IdentityError("braid operator not involutive")
    a = embed_pair(rcheck, 0, 1, 3)
    b = embed_pair(rcheck, 1, 2, 3)
    if a @ b @ a != b @ a @ b:
        raise IdentityError("constant braid relation fails")


def trace_identity(rcheck: ShapedMatrix) -> None:
    """The partial trace over the second leg of rcheck is the identity."""
    n = rcheck.legs[0]
    tr = rcheck.partial_trace(1)
    if tr != ShapedMatrix.identity((n,), RING_Q):
        raise IdentityError("partial trace of the braid operator is not 1")
