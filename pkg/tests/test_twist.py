"""Twist construction, twisted coproducts, and related structure."""

import pytest

from ybx.brace import brace_from_ring, solution_from_brace, zp2_ring_spec
from ybx.linearize import linearize
from ybx.rings import RING_Q
from ybx.solutions import (
    flip_solution,
    lyubashenko_maps,
    reversal_solution,
    shift_solution,
)
from ybx.tensor import ShapedMatrix, commutator, e_matrix, kron, perm_p
from ybx.twist import (
    build_twist,
    cell_pairing,
    check_gl_symmetry,
    coassociativity_probe,
    eigen_multiplicity_check,
    f_n_builder,
    gl_family,
    lyubashenko_V,
    nsite_coproduct,
    plain_coproduct,
    twisted_coproduct,
    verify_twist,
)

FIXTURES = [
    ("flip2", lambda: flip_solution(2)),
    ("flip4", lambda: flip_solution(4)),
    ("shift2", lambda: shift_solution(2)),
    ("shift3", lambda: shift_solution(3)),
    ("shift4", lambda: shift_solution(4)),
    ("rev3", lambda: reversal_solution(3)),
    ("rev4", lambda: reversal_solution(4)),
    ("zp2-2", lambda: solution_from_brace(brace_from_ring(zp2_ring_spec(2)))),
]


@pytest.fixture(params=FIXTURES, ids=[n for n, _ in FIXTURES])
def sol(request):
    return request.param[1]()


def test_cell_pairing_counts(sol):
    n = sol.n
    pairing = cell_pairing(sol)
    assert len(pairing.fixed) == n
    assert len(pairing.cycles) == (n * n - n) // 2


def test_twist_conjugates_flip_to_rcheck(sol):
    f = build_twist(sol)
    verify_twist(sol, f)


def test_eigen_multiplicities(sol):
    eigen_multiplicity_check(sol)


def test_twist_of_flip_is_identity():
    s = flip_solution(3)
    assert build_twist(s) == ShapedMatrix.identity((3, 3))


def test_gl_symmetry(sol):
    rc = linearize(sol)
    variant = 1 if lyubashenko_maps(sol) is not None else "general-2site"
    check_gl_symmetry(rc, gl_family(sol, variant=variant))


def test_one_map_V_conjugation():
    for s in (shift_solution(3), reversal_solution(3)):
        v = lyubashenko_V(s)
        sig, tau = lyubashenko_maps(s)
        # V e_{x,y} V^{-1} = e_{sig^{-1}(x), sig^{-1}(y)} type reproduction
        # handled inside lyubashenko_V; here check r = V^{-1} (x) V form
        rc = linearize(s)
        p = perm_p(s.n, RING_Q)
        r = p @ rc
        assert r == kron(v.invert(), v)


def test_one_map_rcheck_from_V():
    for s in (shift_solution(2), shift_solution(4), reversal_solution(4)):
        v = lyubashenko_V(s)
        rc = linearize(s)
        n = s.n
        p = perm_p(n, RING_Q)
        i = ShapedMatrix.identity((n,))
        assert rc == kron(v, i) @ p @ kron(v.invert(), i)


def test_plain_coproduct():
    a = e_matrix(2, 0, 1)
    i = ShapedMatrix.identity((2,))
    assert plain_coproduct(a, 2) == kron(a, i) + kron(i, a)


@pytest.mark.parametrize("variant", [1, 2])
def test_twisted_coproducts_commute_with_rcheck(variant):
    for s in (shift_solution(2), shift_solution(3), reversal_solution(3)):
        rc = linearize(s)
        for x in range(s.n):
            for y in range(s.n):
                d = twisted_coproduct(s, x, y, variant)
                assert commutator(rc, d).is_zero


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("variant", [1, 2])
def test_nsite_coproduct_equals_F_conjugation(N, variant):
    for s in (shift_solution(2), shift_solution(3), reversal_solution(3)):
        v = lyubashenko_V(s)
        f = f_n_builder(v, N, variant)
        finv = f.invert()
        for x in range(s.n):
            for y in range(s.n):
                plain = plain_coproduct(e_matrix(s.n, x, y), N)
                assert nsite_coproduct(s, x, y, variant, N) == f @ plain @ finv


@pytest.mark.parametrize("variant", [1, 2])
def test_coassociativity_probe(variant):
    # coassociativity needs sig^2 == sig, so it holds only at sig == id
    for s, expect in ((shift_solution(2), False), (shift_solution(3), False),
                      (reversal_solution(3), False), (flip_solution(3), True)):
        equal, witness = coassociativity_probe(s, variant=variant)
        assert equal == expect, witness
