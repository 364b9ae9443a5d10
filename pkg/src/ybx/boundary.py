"""Boundary (reflection) operators: the extra generator of the two-type
braid algebra, its Baxterization, and the quadratic exchange relations
of dressed boundary operators.

Throughout, Q and kappa = Q - 1/Q parametrize the quadratic relation of
the extra generator; all chain fixtures use Q = 1 (kappa = 0).
"""

from __future__ import annotations

from fractions import Fraction

from .rings import RING_L, RING_L2, RING_Q, UniPoly, rat
from .solutions import SetSolution, check_set_reflection
from .tensor import ShapedMatrix, embed_pair, embed_single, perm_p
from .linearize import IdentityError, linearize

__all__ = [
    "BoundaryError",
    "b_from_reflection",
    "check_btype",
    "baxterize_K",
    "cnumber_K",
    "check_spectral_reflection",
    "build_hat_R",
    "rstar_phat",
    "check_re2",
    "cnumber_solves_re2",
    "check_exchange_top_orders",
]


class BoundaryError(AssertionError):
    pass


def b_from_reflection(s: SetSolution, k) -> ShapedMatrix:
    """b = sum_x e_{x, k(x)} from a set reflection k; checked against the
    constant reflection (boundary braid) relations with Q = 1."""
    check_set_reflection(s, k)
    n = s.n
    b = ShapedMatrix((n,), RING_Q, {x: {k[x]: Fraction(1)} for x in range(n)})
    check_btype(linearize(s), b, 1)
    return b


def _b1(b: ShapedMatrix) -> ShapedMatrix:
    """b (x) 1 on two legs."""
    n = b.legs[0]
    out = ShapedMatrix((n, n), b.ring)
    for r, row in b.rows.items():
        for c, v in row.items():
            for t in range(n):
                out.rows.setdefault(r * n + t, {})[c * n + t] = v
    return out


def check_btype(rc: ShapedMatrix, b: ShapedMatrix, Q) -> None:
    """The extra-generator relations on two legs:
      b1 rc b1 rc == rc b1 rc b1,   b^2 == (Q - 1/Q) b + 1."""
    Q = rat(Q)
    n = rc.legs[0]
    b1 = _b1(b)
    if b1 @ rc @ b1 @ rc != rc @ b1 @ rc @ b1:
        raise BoundaryError("mixed boundary braid relation fails")
    kappa = Q - 1 / Q
    ident = ShapedMatrix.identity((n,), RING_Q)
    if b @ b != b.scale(kappa) + ident:
        raise BoundaryError("boundary quadratic relation fails")


def baxterize_K(b: ShapedMatrix, Q, chat) -> ShapedMatrix:
    """K(l) = l * (b - kappa/2) + chat/2, a one-leg matrix over Q[l]."""
    Q, chat = rat(Q), rat(chat)
    kappa = Q - 1 / Q
    n = b.legs[0]
    lam = UniPoly.x()
    ident = ShapedMatrix.identity((n,), RING_L)
    shifted = b.to_ring(RING_L) - ident.scale(kappa / 2)
    return shifted.scale(lam) + ident.scale(chat / 2)


def cnumber_K(b: ShapedMatrix, c, Q=1) -> ShapedMatrix:
    """The chain-normalized form K(l) = l * c * (b - kappa/2) + 1."""
    c, Q = rat(c), rat(Q)
    kappa = Q - 1 / Q
    n = b.legs[0]
    ident = ShapedMatrix.identity((n,), RING_L)
    bhat = b.to_ring(RING_L).scale(c) - ident.scale(c * kappa / 2)
    return bhat.scale(UniPoly.x()) + ident


def _bi(m, c1, c2, c0=0):
    return m.map_entries(lambda p: p.to_bi(c1, c2, c0), RING_L2)


def check_spectral_reflection(rcheck_l: ShapedMatrix, K: ShapedMatrix) -> None:
    """Braid-form reflection equation with a one-leg K(l):
    Rc(l1-l2) K1(l1) Rc(l1+l2) K1(l2) == K1(l2) Rc(l1+l2) K1(l1) Rc(l1-l2)."""
    diff = _bi(rcheck_l, 1, -1)
    tot = _bi(rcheck_l, 1, 1)
    k1 = _bi(_b1_poly(K), 1, 0)
    k2 = _bi(_b1_poly(K), 0, 1)
    lhs = diff @ k1 @ tot @ k2
    rhs = k2 @ tot @ k1 @ diff
    if lhs != rhs:
        raise BoundaryError("spectral reflection equation fails")


def _b1_poly(K: ShapedMatrix) -> ShapedMatrix:
    n = K.legs[0]
    out = ShapedMatrix((n, n), K.ring)
    for r, row in K.rows.items():
        for c, v in row.items():
            for t in range(n):
                out.rows.setdefault(r * n + t, {})[c * n + t] = v
    return out


def build_hat_R(R: ShapedMatrix, variant, n=None):
    """The companion matrix entering the quadratic exchange relation.

    reflection: hat-R(l) := R21(l), a polynomial stand-in for
                R12^{-1}(-l); the dropped scalar (1 - l^2) is returned.
    twisted:    hat-R(l) := R12^{t1}(-l - n/2), no scalar.
    """
    d = R.legs[0]
    if variant == "reflection":
        p = perm_p(d, RING_L)
        scalar = UniPoly.from_list([1, 0, -1])
        return p @ R @ p, scalar
    if variant == "twisted":
        if n is None:
            n = d
        shifted = R.map_entries(
            lambda q: q.compose_affine(-1, -Fraction(n, 2)), RING_L
        )
        return shifted.partial_transpose(0), None
    raise ValueError(f"unknown variant {variant!r}")


def rstar_phat(rc: ShapedMatrix, variant, n=None):
    """Constant pair (rstar, phat) with l*rstar + phat the braid-side
    companion of hat-R.

    reflection: (rcheck, identity)
    twisted:    (r^{t1} P, (n/2 * r^{t1} - P^{t1}) P)  with r = P rcheck.
    """
    d = rc.legs[0]
    p = perm_p(d, RING_Q)
    if variant == "reflection":
        return rc, ShapedMatrix.identity((d, d), RING_Q)
    if variant == "twisted":
        if n is None:
            n = d
        r = p @ rc
        rt1 = r.partial_transpose(0)
        pt1 = p.partial_transpose(0)
        return rt1 @ p, (rt1.scale(Fraction(n, 2)) - pt1) @ p
    raise ValueError(f"unknown variant {variant!r}")


def check_re2(R: ShapedMatrix, hatR: ShapedMatrix, K1, K2) -> None:
    """Quadratic exchange relation for dressed boundary operators:

    R12(l1-l2) K1(l1) hatR12(l1+l2) K2(l2)
        == K2(l2) hatR21(l1+l2) K1(l1) R21(l1-l2)

    R and hatR are two-leg matrices over Q[l]; K1, K2 are matrices over
    Q[l1,l2] on the full leg set (two copy legs first) depending on l1
    resp. l2 only.  Everything is embedded on K1's legs.
    """
    legs = K1.legs
    total = len(legs)
    d = legs[0]
    p = perm_p(d, RING_L)

    def emb(two_leg):
        return embed_pair(two_leg, 0, 1, total)

    r_diff = emb(_bi(R, 1, -1))
    r21_diff = emb(_bi(p @ R @ p, 1, -1))
    hat_tot = emb(_bi(hatR, 1, 1))
    hat21_tot = emb(_bi(p @ hatR @ p, 1, 1))
    lhs = r_diff @ K1 @ hat_tot @ K2
    rhs = K2 @ hat21_tot @ K1 @ r21_diff
    if lhs != rhs:
        raise BoundaryError("quadratic exchange relation fails")


def cnumber_solves_re2(rc: ShapedMatrix, K: ShapedMatrix, variant) -> bool:
    """Whether the one-leg K(l) is a c-number solution of the quadratic
    relation of the given variant.  For crossing-symmetric R the two
    variants coincide; otherwise a reflection-type K generally fails the
    twisted relation."""
    from .linearize import bax_R

    n = rc.legs[0]
    R = bax_R(rc)
    hat_R, _ = build_hat_R(R, variant, n)
    k1 = embed_single(_bi(K, 1, 0), 0, 2)
    k2 = embed_single(_bi(K, 0, 1), 1, 2)
    try:
        check_re2(R, hat_R, k1, k2)
    except BoundaryError:
        return False
    return True


def check_exchange_top_orders(rc2, rstar, phat, k_coeffs, max_m=None) -> None:
    """Order-by-order consequences of the braid-side exchange relation,
    extracted at the two highest powers of the first spectral parameter:

      rc K^(0) rstar K^(m) == K^(m) rstar K^(0) rc
      rc K^(1) rstar K^(m) + K^(0) rstar K^(m) + rc K^(0) phat K^(m)
        == K^(m) rstar K^(1) rc + K^(m) rstar K^(0) + K^(m) phat K^(0) rc

    k_coeffs[m] are the coefficient matrices of the dressed boundary
    operator on copy-leg 0, embedded on the full leg set; rc2 is the
    constant braid operator placed on the two copy legs.
    """
    if max_m is None:
        max_m = len(k_coeffs) - 1
    legs = k_coeffs[0].legs
    total = len(legs)
    rs = embed_pair(rstar, 0, 1, total)
    ph = embed_pair(phat, 0, 1, total)
    rc = embed_pair(rc2, 0, 1, total)
    k0, k1c = k_coeffs[0], k_coeffs[1]
    for m in range(max_m + 1):
        km = k_coeffs[m]
        if rc @ k0 @ rs @ km != km @ rs @ k0 @ rc:
            raise BoundaryError(f"top-order exchange relation fails at m={m}")
        lhs = rc @ k1c @ rs @ km + k0 @ rs @ km + rc @ k0 @ ph @ km
        rhs = km @ rs @ k1c @ rc + km @ rs @ k0 + km @ ph @ k0 @ rc
        if lhs != rhs:
            raise BoundaryError(f"second-order exchange relation fails at m={m}")
