"""Boundary matrices, spectral reflection relations, companion operators."""

from fractions import Fraction

import pytest

from ybx.boundary import (
    BoundaryError,
    b_from_reflection,
    baxterize_K,
    build_hat_R,
    check_btype,
    check_re2,
    check_spectral_reflection,
    cnumber_K,
    cnumber_solves_re2,
    rstar_phat,
)
from ybx.brace import brace_from_ring, solution_from_brace, zp2_ring_spec
from ybx.linearize import bax_R, baxterize, linearize
from ybx.rings import RING_L, RING_L2, UniPoly
from ybx.solutions import (
    find_reflections,
    flip_solution,
    reversal_solution,
    shift_solution,
)
from ybx.tensor import ShapedMatrix, embed_single, perm_p


@pytest.fixture
def zp2():
    return solution_from_brace(brace_from_ring(zp2_ring_spec(2)))


def test_identity_is_b_type_everywhere(zp2):
    for s in (flip_solution(2), shift_solution(3), zp2):
        rc = linearize(s)
        check_btype(rc, ShapedMatrix.identity((s.n,)), 1)


def test_b_from_involutive_reflections(zp2):
    rc = linearize(zp2)
    refl = find_reflections(zp2)
    invol = [k for k in refl if all(k[k[x]] == x for x in range(4))]
    assert len(invol) == 4
    for k in invol:
        b = b_from_reflection(zp2, k)
        check_btype(rc, b, 1)
        K = baxterize_K(b, 1, 2)
        check_spectral_reflection(baxterize(rc), K)


def test_all_small_involutive_reflections_spectral():
    for s in (flip_solution(2), flip_solution(3), shift_solution(2),
              shift_solution(3), reversal_solution(3)):
        rc = linearize(s)
        for k in find_reflections(s):
            if any(k[k[x]] != x for x in range(s.n)):
                continue
            b = b_from_reflection(s, k)
            K = baxterize_K(b, 1, 2)
            check_spectral_reflection(baxterize(rc), K)


def test_baxterize_K_shape():
    b = ShapedMatrix.identity((2,))
    K = baxterize_K(b, 1, 2)
    # Q=1 means kappa=0: K = l b + I
    assert K == b.to_ring(RING_L).scale(UniPoly.x()) \
        + ShapedMatrix.identity((2,), RING_L)


def test_cnumber_K_constant_term_is_identity(zp2):
    b = b_from_reflection(zp2, [0, 3, 2, 1])
    K = cnumber_K(b, Fraction(1, 2))
    const = K.map_entries(lambda p: p.coeff(0), b.ring)
    assert const == ShapedMatrix.identity((4,))


def test_hat_R_reflection_variant_is_scaled_inverse(zp2):
    for s in (shift_solution(3), zp2):
        rc = linearize(s)
        R = bax_R(rc)
        hatR, scalar = build_hat_R(R, "reflection", s.n)
        # hat R(l) R(-l) == scalar(l) I
        neg = R.map_entries(lambda p: p.compose_affine(-1, 0), RING_L)
        prod = hatR @ neg
        want = ShapedMatrix.identity(R.legs, RING_L).scale(scalar)
        assert prod == want


def test_rstar_phat_reflection(zp2):
    rc = linearize(zp2)
    rstar, phat = rstar_phat(rc, "reflection")
    assert rstar == rc
    assert phat == ShapedMatrix.identity(rc.legs)


def test_rstar_phat_match_hat_R_structure(zp2):
    # R*(l) = l rstar + phat reproduces sign * hatR(l) P for both variants
    for s in (shift_solution(3), zp2):
        n = s.n
        rc = linearize(s)
        R = bax_R(rc)
        p = perm_p(n, RING_L)
        for variant, sign in (("reflection", 1), ("twisted", -1)):
            hatR, _ = build_hat_R(R, variant, n)
            rstar, phat = rstar_phat(rc, variant, n)
            lhs = rstar.to_ring(RING_L).scale(UniPoly.x()) + phat.to_ring(RING_L)
            rhs = (hatR @ p).scale(Fraction(sign))
            assert lhs == rhs


def test_cnumber_scalar_K_solves_both_variants_iff_crossing_symmetric(zp2):
    K2 = cnumber_K(ShapedMatrix.identity((2,)), Fraction(1))
    K3 = cnumber_K(ShapedMatrix.identity((3,)), Fraction(1))
    K4 = cnumber_K(ShapedMatrix.identity((4,)), Fraction(1))
    assert cnumber_solves_re2(linearize(flip_solution(2)), K2, "twisted")
    assert cnumber_solves_re2(linearize(zp2), K4, "twisted")
    assert cnumber_solves_re2(linearize(shift_solution(3)), K3, "reflection")
    assert not cnumber_solves_re2(linearize(shift_solution(3)), K3, "twisted")


def test_check_re2_detects_bad_K(zp2):
    rc = linearize(zp2)
    R = bax_R(rc)
    hatR, _ = build_hat_R(R, "reflection", 4)
    # a non-reflection b gives a K violating the quadratic relation
    bad = ShapedMatrix.zeros((4,))
    for x, y in ((0, 1), (1, 0), (2, 2), (3, 3)):
        bad._acc(x, y, Fraction(1))
    K = bad.to_ring(RING_L).scale(UniPoly.x()) + ShapedMatrix.identity((4,), RING_L)
    k1 = embed_single(K.map_entries(lambda p: p.to_bi(1, 0), RING_L2), 0, 2)
    k2 = embed_single(K.map_entries(lambda p: p.to_bi(0, 1), RING_L2), 1, 2)
    with pytest.raises(BoundaryError):
        check_re2(R, hatR, k1, k2)
