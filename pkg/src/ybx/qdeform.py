"""The q-deformed braid operator and its quantum-group symmetries.

All scalars live in Q[s, 1/s] with s*s = q, so half powers of q are
exact.  The deformed braid operator on two legs of dimension n is

  g = q*1 + sum_{x != y} ( e_{x,y} (x) e_{y,x}
                           - q^{-sgn(x-y)} e_{x,x} (x) e_{y,y} )

which satisfies the braid relation and (g - q)(g + 1/q) = 0, and reduces
to the flip at q = 1.
"""

from __future__ import annotations

from .rings import RING_S, LaurentS
from .tensor import ShapedMatrix, commutator, e_matrix, embed_pair, kron

__all__ = [
    "QDeformError",
    "build_g",
    "check_hecke_q",
    "validate_sgn_condition",
    "validate_sgn_condition_pointwise",
    "build_G",
    "special_g_form",
    "uq_fundamental_coproducts",
    "check_uq_symmetry",
    "specialize_q1",
    "serre_fundamental",
]


class QDeformError(AssertionError):
    pass


def _sgn(d):
    return (d > 0) - (d < 0)


def build_g(n: int) -> ShapedMatrix:
    q = LaurentS.q_power(1)
    out = ShapedMatrix.identity((n, n), RING_S).scale(q)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            out = out + kron(e_matrix(n, x, y, RING_S), e_matrix(n, y, x, RING_S))
            coef = LaurentS.q_power(-_sgn(x - y))
            out = out - kron(
                e_matrix(n, x, x, RING_S), e_matrix(n, y, y, RING_S)
            ).scale(coef)
    return out


def check_hecke_q(g: ShapedMatrix) -> None:
    """(g - q)(g + 1/q) == 0 and the constant braid relation."""
    n = g.legs[0]
    ident = ShapedMatrix.identity((n, n), RING_S)
    q = LaurentS.q_power(1)
    qinv = LaurentS.q_power(-1)
    if (g - ident.scale(q)) @ (g + ident.scale(qinv)) != ShapedMatrix((n, n), RING_S):
        raise QDeformError("quadratic (Hecke) relation fails")
    a = embed_pair(g, 0, 1, 3)
    b = embed_pair(g, 1, 2, 3)
    if a @ b @ a != b @ a @ b:
        raise QDeformError("braid relation fails")


def validate_sgn_condition(sig, tau) -> bool:
    """Order compatibility as stated: sgn(x - y) == sgn(tau(x) - tau(y))
    for all x != y.  On a finite totally ordered set this forces tau to
    be the identity."""
    n = len(tau)
    return all(
        _sgn(x - y) == _sgn(tau[x] - tau[y]) for x in range(n) for y in range(n)
    )


def validate_sgn_condition_pointwise(sig, tau) -> bool:
    """The variant actually used pointwise in the deformation argument:
    sgn(tau(x) - y) == sgn(sig(x) - y) for all x, y."""
    n = len(tau)
    return all(
        _sgn(tau[x] - y) == _sgn(sig[x] - y) for x in range(n) for y in range(n)
    )


def build_G(g: ShapedMatrix, v: ShapedMatrix) -> ShapedMatrix:
    """G = (V (x) 1) g (V^{-1} (x) 1); requires [g, V (x) V] = 0, and then
    G also equals (1 (x) V^{-1}) g (1 (x) V)."""
    n = g.legs[0]
    vs = v.to_ring(RING_S)
    vsinv = v.invert().to_ring(RING_S)
    ident = ShapedMatrix.identity((n,), RING_S)
    if kron(vs, vs) @ g != g @ kron(vs, vs):
        raise QDeformError("V (x) V does not commute with g")
    big = kron(vs, ident) @ g @ kron(vsinv, ident)
    other = kron(ident, vsinv) @ g @ kron(ident, vs)
    if big != other:
        raise QDeformError("the two conjugated forms disagree")
    check_hecke_q(big)
    return big


def special_g_form(n: int, tau) -> ShapedMatrix:
    """Explicit expansion of the conjugated operator for a one-map
    solution with component map tau:
    q*1 + sum_{x != y} ( e_{x,y} (x) e_{tau(y),tau(x)}
                         - q^{-sgn(x-y)} e_{x,x} (x) e_{tau(y),tau(y)} )."""
    q = LaurentS.q_power(1)
    out = ShapedMatrix.identity((n, n), RING_S).scale(q)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            out = out + kron(
                e_matrix(n, x, y, RING_S), e_matrix(n, tau[y], tau[x], RING_S)
            )
            coef = LaurentS.q_power(-_sgn(x - y))
            out = out - kron(
                e_matrix(n, x, x, RING_S), e_matrix(n, tau[y], tau[y], RING_S)
            ).scale(coef)
    return out


# -- quantum-group generators in the fundamental representation ----------


def _diag(n, exps):
    """diag(s^exps[0], ..., s^exps[n-1]) over Q[s,1/s]."""
    return ShapedMatrix(
        (n,), RING_S, {x: {x: LaurentS.s_power(exps[x])} for x in range(n)}
    )


def uq_fundamental_coproducts(n: int, variant=0, sig=None, tau=None):
    """Two-site coproducts of the Chevalley-type generators, fundamental
    representation.  variant 0 is the undeformed assignment

        D(x_j) = q^{-h_j/2} (x) x_j + x_j (x) q^{h_j/2}
        D(q^{e_jj}) = q^{e_jj} (x) q^{e_jj}

    with h_j = e_{jj} - e_{j+1,j+1}.  Variants 1 and 2 relabel one tensor
    factor through the one-map permutations sig/tau of a solution."""
    if variant == 0:
        sig = tau = tuple(range(n))
    if sig is None or tau is None:
        raise ValueError("variants 1 and 2 need the permutation pair")
    fam = {}

    def hp(j, sign):
        exps = [0] * n
        exps[j] += sign
        exps[j + 1] -= sign
        return _diag(n, exps)

    def hp_relabel(j, sign, perm):
        exps = [0] * n
        exps[perm[j]] += sign
        exps[perm[j + 1]] -= sign
        return _diag(n, exps)

    for j in range(n - 1):
        for name, unit in (("e", (j, j + 1)), ("f", (j + 1, j))):
            x = e_matrix(n, unit[0], unit[1], RING_S)
            if variant == 0:
                fam[f"{name}{j}"] = kron(hp(j, -1), x) + kron(x, hp(j, +1))
            elif variant == 1:
                xs = e_matrix(n, sig[unit[0]], sig[unit[1]], RING_S)
                fam[f"{name}{j}"] = kron(xs, hp(j, +1)) + kron(
                    hp_relabel(j, -1, sig), x
                )
            elif variant == 2:
                xt = e_matrix(n, tau[unit[0]], tau[unit[1]], RING_S)
                fam[f"{name}{j}"] = kron(x, hp_relabel(j, +1, tau)) + kron(
                    hp(j, -1), xt
                )
            else:
                raise ValueError(f"unknown variant {variant!r}")
    for j in range(n):
        d = _diag(n, [2 if t == j else 0 for t in range(n)])
        if variant == 0:
            fam[f"k{j}"] = kron(d, d)
        elif variant == 1:
            ds = _diag(n, [2 if t == sig[j] else 0 for t in range(n)])
            fam[f"k{j}"] = kron(ds, d)
        else:
            dt = _diag(n, [2 if t == tau[j] else 0 for t in range(n)])
            fam[f"k{j}"] = kron(d, dt)
    return fam


def check_uq_symmetry(braid: ShapedMatrix, family) -> None:
    for name, op in family.items():
        if not commutator(braid, op).is_zero:
            raise QDeformError(f"braid operator does not commute with {name}")


def specialize_q1(m: ShapedMatrix) -> ShapedMatrix:
    """Evaluate a Q[s,1/s] matrix at s = 1 (q = 1), landing in Q."""
    from .rings import RING_Q

    return m.map_entries(lambda v: v.eval_s(1), RING_Q)


def serre_fundamental(n: int) -> None:
    """Degree-3 Serre-type relation for adjacent raising generators in
    the fundamental representation (optional, single site):
    x_i^2 x_j - (q + 1/q) x_i x_j x_i + x_j x_i^2 == 0."""
    qq = LaurentS.q_power(1) + LaurentS.q_power(-1)
    for i in range(n - 1):
        for j in range(n - 1):
            if abs(i - j) != 1:
                continue
            for a, b in (((i, i + 1), (j, j + 1)), ((i + 1, i), (j + 1, j))):
                xi = e_matrix(n, a[0], a[1], RING_S)
                xj = e_matrix(n, b[0], b[1], RING_S)
                acc = xi @ xi @ xj - (xi @ xj @ xi).scale(qq) + xj @ xi @ xi
                if not acc.is_zero:
                    raise QDeformError(f"Serre relation fails at ({i},{j})")
