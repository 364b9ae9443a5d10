"""Sparse shaped matrices: algebra, leg operations, serialization."""

import random
from fractions import Fraction

import pytest

from ybx.rings import RING_L, RING_Q, UniPoly
from ybx.tensor import (
    ShapedMatrix,
    SingularMatrixError,
    commutator,
    e_matrix,
    embed_pair,
    embed_single,
    export_coo_json,
    export_dense_csv,
    import_coo_json,
    import_dense_csv,
    kron,
    perm_p,
    poly_coeff,
)


def random_matrix(n, rng, density=0.5):
    m = ShapedMatrix((n,), RING_Q)
    for r in range(n):
        for c in range(n):
            if rng.random() < density:
                m._acc(r, c, Fraction(rng.randint(-5, 5)))
    return m


def test_identity_and_zero():
    i = ShapedMatrix.identity((3,))
    z = ShapedMatrix.zeros((3,))
    assert (i @ i) == i
    assert (i + z) == i
    assert z.is_zero


def test_matmul_against_dense():
    rng = random.Random(0)
    a, b = random_matrix(4, rng), random_matrix(4, rng)
    da, db = a.dense(), b.dense()
    prod = (a @ b).dense()
    for r in range(4):
        for c in range(4):
            assert prod[r][c] == sum(da[r][k] * db[k][c] for k in range(4))


def test_kron_mixed_product():
    rng = random.Random(1)
    a, b, c, d = (random_matrix(3, rng) for _ in range(4))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_trace_and_partial_trace():
    rng = random.Random(2)
    a, b = random_matrix(3, rng), random_matrix(3, rng)
    k = kron(a, b)
    assert k.trace() == a.trace() * b.trace()
    assert k.partial_trace(0) == b.scale(a.trace())
    assert k.partial_trace(1) == a.scale(b.trace())


def test_partial_transpose_involution():
    rng = random.Random(3)
    k = kron(random_matrix(2, rng), random_matrix(2, rng))
    assert k.partial_transpose(0).partial_transpose(0) == k
    assert k.partial_transpose(0).partial_transpose(1) == k.transpose()


def test_permutation_conjugates_kron():
    rng = random.Random(4)
    a, b = random_matrix(3, rng), random_matrix(3, rng)
    p = perm_p(3, RING_Q)
    assert p @ kron(a, b) @ p == kron(b, a)


def test_embed_pair_commuting_disjoint_legs():
    rng = random.Random(5)
    a, b = random_matrix(2, rng), random_matrix(2, rng)
    x = embed_pair(kron(a, b), 0, 1, 4)
    y = embed_pair(kron(b, a), 2, 3, 4)
    assert commutator(x, y).is_zero


def test_embed_single_matches_kron():
    rng = random.Random(6)
    a = random_matrix(3, rng)
    i = ShapedMatrix.identity((3,))
    assert embed_single(a, 1, 3) == kron(i, kron(a, i))


def test_block_extraction():
    rng = random.Random(7)
    a, b = random_matrix(2, rng), random_matrix(2, rng)
    k = kron(a, b)
    for x in range(2):
        for y in range(2):
            assert k.block(0, x, y) == b.scale(a.entry(x, y))


def test_invert_roundtrip():
    rng = random.Random(8)
    while True:
        m = random_matrix(4, rng, density=0.8)
        try:
            inv = m.invert()
            break
        except SingularMatrixError:
            continue
    assert m @ inv == ShapedMatrix.identity((4,))
    assert m.rank() == 4


def test_invert_singular_raises():
    m = e_matrix(3, 0, 1)
    with pytest.raises(SingularMatrixError):
        m.invert()
    assert m.rank() == 1


def test_poly_coeff():
    p = UniPoly.from_list([1, 2])
    m = ShapedMatrix.identity((2,), RING_L).scale(p)
    assert poly_coeff(m, 1) == ShapedMatrix.identity((2,)).scale(Fraction(2))
    assert poly_coeff(m, 3).is_zero


def test_coo_json_roundtrip(tmp_path):
    rng = random.Random(9)
    m = kron(random_matrix(2, rng), random_matrix(2, rng))
    path = tmp_path / "m.json"
    export_coo_json(m, str(path))
    assert import_coo_json(str(path)) == m


def test_coo_json_roundtrip_polynomial(tmp_path):
    m = ShapedMatrix.identity((2,), RING_L).scale(UniPoly.from_list([0, 1, 3]))
    path = tmp_path / "m.json"
    export_coo_json(m, str(path))
    assert import_coo_json(str(path)) == m


def test_dense_csv_roundtrip(tmp_path):
    rng = random.Random(10)
    m = kron(random_matrix(2, rng), random_matrix(3, rng))
    path = tmp_path / "m.csv"
    export_dense_csv(m, str(path))
    assert import_dense_csv(str(path)) == m


def test_perm_p_coo_has_n_squared_entries():
    doc = export_coo_json(perm_p(2, RING_Q))
    assert doc["schema"] == "ybx/1"
    assert len(doc["entries"]) == 4
