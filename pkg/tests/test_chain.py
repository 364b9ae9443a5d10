"""Open-chain monodromies, transfer matrices, and their commutants."""

from fractions import Fraction

import pytest

from ybx.boundary import b_from_reflection, cnumber_K
from ybx.brace import brace_from_ring, solution_from_brace, zp2_ring_spec
from ybx.chain import (
    ChainError,
    boundary_subalgebra_checks,
    build_open,
    build_T,
    build_That,
    build_transfer,
    check_commutativity,
    check_dressed_exchange,
    check_monodromy_shift_relations,
    compute_T1_two_ways,
    hamiltonian_check,
    hecke_expressibility,
    symmetry_suite,
    transfer_coefficients,
    verify_That_reflection,
)
from ybx.linearize import linearize
from ybx.rings import RING_L, UniPoly
from ybx.solutions import flip_solution, reversal_solution, shift_solution
from ybx.tensor import ShapedMatrix, commutator


def identity_K(n):
    return cnumber_K(ShapedMatrix.identity((n,)), Fraction(1))


@pytest.fixture
def zp2():
    return solution_from_brace(brace_from_ring(zp2_ring_spec(2)))


def test_monodromy_degree():
    rc = linearize(shift_solution(2))
    t = build_T(rc, 3)
    assert max(p.degree() for _, _, p in t.entries()) == 3


@pytest.mark.parametrize("sites", [1, 2, 3])
def test_That_reflection_scaled_inverse(sites):
    rc = linearize(shift_solution(2))
    verify_That_reflection(rc, sites)


def test_trivial_chain_transfer_matches_closed_form():
    # flip solution, one site, K = I: t(l) = tr_0((l + P)(l + P)) = (2 l^2 + 2 l + 2) I
    s = flip_solution(2)
    K = cnumber_K(ShapedMatrix.identity((2,)), Fraction(0))
    chain = build_open(s, 1, K, "reflection")
    t = build_transfer(chain)
    want = ShapedMatrix.identity((2,), RING_L).scale(UniPoly.from_list([2, 2, 2]))
    assert t == want


CASES = [
    ("flip2", lambda: flip_solution(2), 2),
    ("shift2", lambda: shift_solution(2), 2),
    ("shift2-N3", lambda: shift_solution(2), 3),
    ("shift3", lambda: shift_solution(3), 2),
    ("rev3", lambda: reversal_solution(3), 2),
    ("zp2-N1", None, 1),
]


def make_chain(name, make, sites):
    if make is None:
        s = solution_from_brace(brace_from_ring(zp2_ring_spec(2)))
    else:
        s = make()
    return build_open(s, sites, identity_K(s.n), "reflection")


@pytest.fixture(params=CASES, ids=[c[0] for c in CASES])
def chain(request):
    return make_chain(*request.param)


def test_transfer_commutativity(chain):
    check_commutativity(chain)


def test_hamiltonian_identity(chain):
    hamiltonian_check(chain)


def test_hecke_expressibility(chain):
    hecke_expressibility(chain)


def test_dressed_exchange(chain):
    check_dressed_exchange(chain)


def test_subalgebra_checks(chain):
    b = ShapedMatrix.identity((chain.solution.n,))
    out = boundary_subalgebra_checks(chain, b)
    assert all(out.values()), out


def test_symmetry_suite(chain):
    b = ShapedMatrix.identity((chain.solution.n,))
    for name, status, detail in symmetry_suite(chain, b):
        assert status in ("pass", "not-applicable"), (name, detail)


def test_commutativity_with_nontrivial_boundary(zp2):
    b = b_from_reflection(zp2, [0, 3, 2, 1])
    chain = build_open(zp2, 1, cnumber_K(b, Fraction(1)), "reflection")
    check_commutativity(chain)
    hamiltonian_check(chain)


def test_T1_two_ways():
    for s, sites in ((flip_solution(2), 2), (shift_solution(2), 2),
                     (shift_solution(3), 2)):
        compute_T1_two_ways(s, sites, Fraction(1, 2))


@pytest.mark.parametrize("sites", [3, 4])
def test_monodromy_shift_relations(sites):
    check_monodromy_shift_relations(linearize(shift_solution(2)), sites)


def test_transfer_coefficient_count():
    chain = make_chain("shift2", lambda: shift_solution(2), 2)
    coeffs = transfer_coefficients(chain)
    # degree 2N+1 polynomial: 2N+2 coefficients
    assert len(coeffs) == 6


def test_twisted_commutes_when_crossing_symmetric():
    s = flip_solution(2)
    chain = build_open(s, 2, identity_K(2), "twisted")
    check_commutativity(chain)


def test_size_cap():
    with pytest.raises(ChainError):
        build_open(shift_solution(4), 6, identity_K(4), "reflection")
