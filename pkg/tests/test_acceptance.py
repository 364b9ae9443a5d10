"""Acceptance gate: twelve exact, property-based criteria.

Each test prints one pass/fail line; pytest marks failures as usual.
"""

import time
from fractions import Fraction

import pytest

from ybx.boundary import (
    b_from_reflection,
    baxterize_K,
    check_btype,
    check_spectral_reflection,
    cnumber_K,
)
from ybx.brace import (
    brace_from_ring,
    solution_from_brace,
    validate_brace,
    validate_nilpotent_ring,
    zero_ring_spec,
    zp2_ring_spec,
)
from ybx.chain import (
    boundary_subalgebra_checks,
    build_open,
    check_commutativity,
    compute_T1_two_ways,
    hamiltonian_check,
    hecke_expressibility,
    symmetry_suite,
    t1_blocks_are_coproducts,
)
from ybx.linearize import (
    bax_R,
    baxterize,
    check_crossing,
    check_hecke_a,
    check_unitarity,
    check_ybe_spectral,
    linearize,
    trace_identity,
)
from ybx.qdeform import build_g, check_hecke_q, check_uq_symmetry, uq_fundamental_coproducts
from ybx.rings import RING_Q
from ybx.solutions import (
    find_reflections,
    flip_solution,
    is_set_reflection,
    lyubashenko_maps,
    reflection_criterion,
    reversal_solution,
    shift_solution,
    validate_solution,
)
from ybx.tensor import ShapedMatrix, commutator, kron, perm_p
from ybx.twist import (
    build_twist,
    check_gl_symmetry,
    eigen_multiplicity_check,
    f_n_builder,
    gl_family,
    lyubashenko_V,
    nsite_coproduct,
    plain_coproduct,
    verify_twist,
)
from ybx.tensor import e_matrix


def zp2_solution(p=2):
    return solution_from_brace(brace_from_ring(zp2_ring_spec(p)))


def all_small_fixtures():
    return [
        ("flip2", flip_solution(2)),
        ("flip3", flip_solution(3)),
        ("shift2", shift_solution(2)),
        ("shift3", shift_solution(3)),
        ("shift4", shift_solution(4)),
        ("rev3", reversal_solution(3)),
        ("rev4", reversal_solution(4)),
        ("z4", zp2_solution(2)),
    ]


def chain_fixtures():
    out = []
    for name, s, sites in (("flip2", flip_solution(2), 2),
                           ("shift2", shift_solution(2), 2),
                           ("shift3", shift_solution(3), 2),
                           ("rev3", reversal_solution(3), 2),
                           ("z4", zp2_solution(2), 1)):
        K = cnumber_K(ShapedMatrix.identity((s.n,)), Fraction(1))
        out.append((name, build_open(s, sites, K, "reflection")))
    return out


def report(num, label):
    print(f"acceptance {num:02d} {label}: PASS")


def test_criterion_01_brace_pipeline():
    t0 = time.monotonic()
    for spec in (zero_ring_spec(2), zp2_ring_spec(2), zp2_ring_spec(3)):
        start = time.monotonic()
        validate_nilpotent_ring(spec)
        b = brace_from_ring(spec)
        validate_brace(b)
        validate_solution(solution_from_brace(b))
        assert time.monotonic() - start < 1.0
    report(1, "brace pipeline")


def test_criterion_02_matrix_identities():
    t0 = time.monotonic()
    for name, s in all_small_fixtures():
        rc = linearize(s)
        R = bax_R(rc)
        check_ybe_spectral(baxterize(rc))
        check_unitarity(R)
        check_crossing(R)
        check_hecke_a(rc)
        trace_identity(rc)
    assert time.monotonic() - t0 < 5.0
    report(2, "spectral matrix identities")


def test_criterion_03_drinfeld_twist():
    for name, s in all_small_fixtures():
        f = build_twist(s)
        verify_twist(s, f)
        eigen_multiplicity_check(s)
        rc = linearize(s)
        variant = 1 if lyubashenko_maps(s) is not None else "general-2site"
        family = gl_family(s, variant=variant)
        assert len(family) == s.n * s.n
        check_gl_symmetry(rc, family)
    report(3, "Drinfeld twist")


def test_criterion_04_one_map_structure():
    for n in (2, 3, 4):
        for s in (shift_solution(n), reversal_solution(n)):
            v = lyubashenko_V(s)
            rc = linearize(s)
            p = perm_p(n, RING_Q)
            assert p @ rc == kron(v.invert(), v)
            for x in range(n):
                for y in range(n):
                    for variant in (1, 2):
                        d = nsite_coproduct(s, x, y, variant, 2)
                        assert commutator(rc, d).is_zero
            for N in (2, 3):
                for variant in (1, 2):
                    f = f_n_builder(v, N, variant)
                    finv = f.invert()
                    for x in range(n):
                        for y in range(n):
                            plain = plain_coproduct(e_matrix(n, x, y), N)
                            assert nsite_coproduct(s, x, y, variant, N) \
                                == f @ plain @ finv
    report(4, "one-map structure")


def test_criterion_05_q_deformation():
    t0 = time.monotonic()
    for n in (2, 3):
        g = build_g(n)
        check_hecke_q(g)
        check_uq_symmetry(g, uq_fundamental_coproducts(n))
    assert time.monotonic() - t0 < 10.0
    report(5, "q-deformed braid matrices")


def test_criterion_06_boundary():
    for name, s in all_small_fixtures():
        n = s.n
        rc = linearize(s)
        check_btype(rc, ShapedMatrix.identity((n,)), 1)
        for k in find_reflections(s):
            if any(k[k[x]] != x for x in range(n)):
                continue
            b = b_from_reflection(s, k)
            check_btype(rc, b, 1)
            K = baxterize_K(b, 1, 2)
            check_spectral_reflection(baxterize(rc), K)
        if n <= 3:
            for code in range(n ** n):
                k = [(code // n ** i) % n for i in range(n)]
                assert reflection_criterion(s, k) == is_set_reflection(s, k)
    report(6, "boundary matrices and reflections")


def test_criterion_07_transfer_commutativity():
    t0 = time.monotonic()
    cases = [(flip_solution(2), 2), (shift_solution(2), 3),
             (shift_solution(3), 2), (zp2_solution(2), 2)]
    for s, sites in cases:
        n = s.n
        K = cnumber_K(ShapedMatrix.identity((n,)), Fraction(1))
        check_commutativity(build_open(s, sites, K, "reflection"))
        # one nontrivial involutive boundary per solution, when any exists
        for k in find_reflections(s):
            if k == list(range(n)) or any(k[k[x]] != x for x in range(n)):
                continue
            b = b_from_reflection(s, k)
            check_commutativity(
                build_open(s, sites, cnumber_K(b, Fraction(1)), "reflection"))
            break
    assert time.monotonic() - t0 < 120.0
    report(7, "open transfer matrix commutativity")


def test_criterion_08_hamiltonian():
    for name, chain in chain_fixtures():
        hamiltonian_check(chain)
    report(8, "local Hamiltonian coefficient")


def test_criterion_09_word_span():
    for s, sites in ((shift_solution(2), 2), (shift_solution(3), 2)):
        K = cnumber_K(ShapedMatrix.identity((s.n,)), Fraction(1))
        hecke_expressibility(build_open(s, sites, K, "reflection"))
    report(9, "transfer coefficients in the word span")


def test_criterion_10_boundary_subalgebra():
    for name, chain in chain_fixtures():
        b = ShapedMatrix.identity((chain.solution.n,))
        out = boundary_subalgebra_checks(chain, b)
        assert out["local"] and out["order"] and out["trace"], (name, out)
        if lyubashenko_maps(chain.solution) is not None:
            assert out["one-map"] and out["gl-closure"], (name, out)
            t1_blocks_are_coproducts(chain.solution, chain.sites)
    report(10, "boundary subalgebra structure")


def test_criterion_11_symmetry_suite():
    passed = {}
    for name, chain in chain_fixtures():
        b = ShapedMatrix.identity((chain.solution.n,))
        for check, status, detail in symmetry_suite(chain, b):
            assert status in ("pass", "not-applicable"), (name, check, detail)
            if status == "pass":
                passed[check] = name
    expected = {"morphism", "special-element", "fixed-point", "subset-sum",
                "one-map-power", "diagonal"}
    assert expected <= set(passed), passed
    report(11, "symmetry suite")


def test_criterion_12_subleading_expansion():
    for s, sites in ((flip_solution(2), 2), (shift_solution(2), 2),
                     (shift_solution(3), 2), (reversal_solution(3), 2),
                     (zp2_solution(2), 1)):
        compute_T1_two_ways(s, sites, Fraction(1, 2))
    report(12, "subleading coefficient expansion")
