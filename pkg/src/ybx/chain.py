"""Open (double-row) spin chains built from a Baxterized braid operator
and a boundary matrix.

Leg 0 is the auxiliary space; legs 1..N are the chain sites.  The
monodromy, its reflected partner, the dressed boundary operator and the
transfer matrix are all polynomial matrices over Q[l]; every identity is
checked exactly, coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .rings import RING_L, RING_L2, RING_Q, UniPoly, rat
from .solutions import SetSolution
from .tensor import (
    ShapedMatrix,
    commutator,
    embed_pair,
    embed_single,
    kron,
    perm_p,
    poly_coeff,
)
from .linearize import IdentityError, bax_R, linearize
from .boundary import build_hat_R, check_exchange_top_orders, check_re2, rstar_phat

__all__ = [
    "ChainError",
    "OpenChain",
    "build_T",
    "build_That",
    "verify_That_reflection",
    "build_open",
    "build_transfer",
    "transfer_coefficients",
    "check_commutativity",
    "hamiltonian_check",
    "hecke_expressibility",
    "compute_T1_two_ways",
    "t1_blocks_are_coproducts",
    "dressed_K_pair",
    "check_dressed_exchange",
    "boundary_subalgebra_checks",
    "symmetry_suite",
    "check_monodromy_shift_relations",
]

MAX_TOTAL_DIM = 4096


class ChainError(AssertionError):
    pass


def _cap(n, sites):
    if n ** (sites + 1) > MAX_TOTAL_DIM:
        raise ChainError(f"chain size {n}^{sites + 1} exceeds the desk-scale cap")


def build_T(rc: ShapedMatrix, sites: int) -> ShapedMatrix:
    """Closed monodromy T(l) = R_{0N}(l) ... R_{01}(l) on legs 0..N."""
    n = rc.legs[0]
    _cap(n, sites)
    R = bax_R(rc)
    total = sites + 1
    out = ShapedMatrix.identity((n,) * total, RING_L)
    for site in range(sites, 0, -1):
        out = out @ embed_pair(R, 0, site, total)
    return out


def build_That(rc: ShapedMatrix, sites: int, variant="reflection"):
    """The reflected partner of the monodromy.

    reflection: hat-T(l) = R_{10}(l) ... R_{N0}(l), which equals
                (1 - l^2)^N T^{-1}(-l); the scalar is returned.
    twisted:    hat-T(l) = T^{t0}(-l - n/2), no scalar.
    """
    n = rc.legs[0]
    _cap(n, sites)
    total = sites + 1
    if variant == "reflection":
        R = bax_R(rc)
        out = ShapedMatrix.identity((n,) * total, RING_L)
        for site in range(1, sites + 1):
            out = out @ embed_pair(R, site, 0, total)
        scalar = UniPoly.from_list([1, 0, -1]) ** sites
        return out, scalar
    if variant == "twisted":
        t = build_T(rc, sites)
        shifted = t.map_entries(
            lambda p: p.compose_affine(-1, -Fraction(n, 2)), RING_L
        )
        return shifted.partial_transpose(0), None
    raise ValueError(f"unknown variant {variant!r}")


def verify_That_reflection(rc: ShapedMatrix, sites: int) -> None:
    """hat-T(l) T(-l) == (1 - l^2)^N identity, the polynomial form of
    hat-T = (1 - l^2)^N T^{-1}(-l)."""
    n = rc.legs[0]
    t_neg = build_T(rc, sites).map_entries(
        lambda p: p.compose_affine(-1, 0), RING_L
    )
    that, scalar = build_That(rc, sites, "reflection")
    ident = ShapedMatrix.identity((n,) * (sites + 1), RING_L)
    if that @ t_neg != ident.scale(scalar):
        raise ChainError("reflected monodromy is not the scaled inverse")


@dataclass
class OpenChain:
    solution: SetSolution
    sites: int
    variant: str
    K: ShapedMatrix  # one-leg matrix over Q[l]
    bhat: ShapedMatrix  # one-leg rational matrix, the l-coefficient of K
    rc: ShapedMatrix = field(init=False)
    script_T: ShapedMatrix = field(init=False)  # dressed boundary operator
    transfer: ShapedMatrix = field(init=False)
    scalar: object = field(init=False)

    def __post_init__(self):
        self.rc = linearize(self.solution)
        n = self.solution.n
        sites, total = self.sites, self.sites + 1
        t = build_T(self.rc, sites)
        that, scalar = build_That(self.rc, sites, self.variant)
        k0 = embed_single_poly(self.K, 0, total)
        self.script_T = t @ k0 @ that
        self.scalar = scalar
        self.transfer = self.script_T.partial_trace(0)
        deg = max(
            (v.degree() for _, _, v in self.script_T.entries()), default=-1
        )
        if deg > 2 * sites + 1:
            raise ChainError(f"dressed operator degree {deg} too large")


def embed_single_poly(K: ShapedMatrix, i, total) -> ShapedMatrix:
    return embed_single(K, i, total)


def build_open(s: SetSolution, sites: int, K: ShapedMatrix, variant="reflection"):
    """Dressed boundary operator script-T(l) = T(l) K_0(l) hat-T(l)."""
    lam_coeff = K.map_entries(lambda p: p.coeff(1), RING_Q)
    chain = OpenChain(s, sites, variant, K, lam_coeff)
    return chain


def build_transfer(chain: OpenChain) -> ShapedMatrix:
    """Transfer matrix t(l) = tr_0(script-T), on the chain legs."""
    return chain.transfer


def transfer_coefficients(chain: OpenChain):
    """Coefficients t^(k), k = 0..2N+1, with t(l) expanded as
    l^(2N+1) * sum_k t^(k) l^(-k)."""
    top = 2 * chain.sites + 1
    return [poly_coeff(chain.transfer, top - k) for k in range(top + 1)]


def check_commutativity(chain: OpenChain) -> None:
    """[t(l1), t(l2)] == 0, checked as vanishing commutators of all
    coefficient pairs (an equivalent finite statement)."""
    coeffs = [c for c in transfer_coefficients(chain) if not c.is_zero]
    for i in range(len(coeffs)):
        for j in range(i + 1, len(coeffs)):
            if not commutator(coeffs[i], coeffs[j]).is_zero:
                raise ChainError(f"transfer coefficients {i},{j} do not commute")


def hamiltonian_check(chain: OpenChain) -> ShapedMatrix:
    """The local form of the subleading transfer coefficient:

        t^(2N) == n * (2 sum_n rc_{n,n+1} + bhat_1) + 2 * tr_0(rc_{N0})

    with tr_0(rc_{N0}) the identity.  The factor n (the local dimension)
    multiplies exactly the terms that do not touch the auxiliary leg,
    where the auxiliary trace acts on an identity factor; dropping it is
    a common shorthand but the equality checked here is the exact one.
    Returns the coefficient matrix."""
    sites = chain.sites
    n = chain.solution.n
    got = transfer_coefficients(chain)[2 * sites]
    local = ShapedMatrix((n,) * sites, RING_Q)
    for site in range(1, sites):
        local = local + embed_pair(chain.rc, site - 1, site, sites).scale(2)
    local = local + embed_single(chain.bhat, 0, sites)
    want = local.scale(n) + ShapedMatrix.identity((n,) * sites, RING_Q).scale(2)
    if got != want:
        raise ChainError("open Hamiltonian does not match the local form")
    return got


def hecke_expressibility(chain: OpenChain, max_len=None):
    """Each t^(k), k >= 1, must lie in the rational span of words in
    {1, rc_{n,n+1}, bhat_1}.  Word length is capped at 2N+2 and escalated
    once to 2N+4 before failing.  Returns the list of word lengths used."""
    sites = chain.sites
    n = chain.solution.n
    gens = [
        embed_pair(chain.rc, site - 1, site, sites) for site in range(1, sites)
    ]
    if not chain.bhat.is_zero:
        gens.append(embed_single(chain.bhat, 0, sites))
    coeffs = transfer_coefficients(chain)
    caps = [2 * sites + 2, 2 * sites + 4] if max_len is None else [max_len]
    used = []
    for k in range(1, len(coeffs)):
        if coeffs[k].is_zero:
            used.append(0)
            continue
        ok = None
        for cap in caps:
            words = _word_span(gens, (n,) * sites, cap)
            if _in_span(words, coeffs[k]):
                ok = cap
                break
        if ok is None:
            raise ChainError(f"t^({k}) not expressible with word cap {caps[-1]}")
        used.append(ok)
    return used


def _word_span(gens, legs, cap):
    ident = ShapedMatrix.identity(legs, RING_Q)
    seen = {ident}
    frontier = [ident]
    for _ in range(cap):
        new = []
        for w in frontier:
            for g in gens:
                m = w @ g
                if m not in seen:
                    seen.add(m)
                    new.append(m)
        if not new:
            break
        frontier = new
    return sorted(seen, key=lambda m: sorted(m.rows))


def _in_span(words, target) -> bool:
    """Exact rational membership of target in span(words)."""
    cols = []
    dim = target.dim
    for w in words:
        cols.append([w.entry(r, c) for r in range(dim) for c in range(dim)])
    rhs = [target.entry(r, c) for r in range(dim) for c in range(dim)]
    # solve cols^T x = rhs by elimination over the (len(rhs) x len(words)) system
    nrows = len(rhs)
    ncols = len(cols)
    a = [[cols[j][i] for j in range(ncols)] + [rhs[i]] for i in range(nrows)]
    rank_row = 0
    for col in range(ncols):
        piv = next((r for r in range(rank_row, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank_row], a[piv] = a[piv], a[rank_row]
        p = a[rank_row][col]
        a[rank_row] = [v / p for v in a[rank_row]]
        for r in range(nrows):
            if r != rank_row and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[rank_row])]
        rank_row += 1
    for r in range(rank_row, nrows):
        if a[r][ncols]:
            return False
    # also catch inconsistent zero-coefficient rows above
    for r in range(nrows):
        if a[r][ncols] and not any(a[r][:ncols]):
            return False
    return True


def compute_T1_two_ways(s: SetSolution, sites: int, c) -> None:
    """For b = 1 and K(l) = l*c + 1, the subleading coefficient of the
    dressed boundary operator equals

      2c * sum_n rc_{n,n+1} ... rc_{N-1,N} rc_{N0} rc_{N-1,N} ... rc_{n,n+1}
         + identity.
    """
    c = rat(c)
    n = s.n
    rc = linearize(s)
    total = sites + 1
    ident1 = ShapedMatrix.identity((n,), RING_L)
    K = ident1.scale(UniPoly.from_list([1, c]))
    chain = build_open(s, sites, K, "reflection")
    direct = poly_coeff(chain.script_T, 2 * sites)
    want = ShapedMatrix.identity((n,) * total, RING_Q)
    for start in range(1, sites + 1):
        word = ShapedMatrix.identity((n,) * total, RING_Q)
        for site in range(start, sites):
            word = word @ embed_pair(rc, site, site + 1, total)
        word = word @ embed_pair(rc, sites, 0, total)
        for site in range(sites - 1, start - 1, -1):
            word = word @ embed_pair(rc, site, site + 1, total)
        want = want + word.scale(2 * c)
    if direct != want:
        raise ChainError("the two routes to the subleading coefficient differ")


def t1_blocks_are_coproducts(s: SetSolution, sites: int) -> None:
    """For a one-map solution with b = 1 and K(l) = l/2 + 1, the
    subleading dressed-coefficient blocks are twisted coproducts:

      script-T^(1)_{x,y} == Delta_1^(N)(e_{sig(y), sig(x)}) + delta_{x,y} I
    """
    from .solutions import lyubashenko_maps
    from .twist import nsite_coproduct

    maps = lyubashenko_maps(s)
    if maps is None:
        raise ChainError("requires a one-map solution")
    sig, _ = maps
    n = s.n
    K = ShapedMatrix.identity((n,), RING_L).scale(
        UniPoly.from_list([1, rat("1/2")]))
    chain = build_open(s, sites, K, "reflection")
    blocks = _aux_blocks(poly_coeff(chain.script_T, 2 * sites))
    ident = ShapedMatrix.identity((n,) * sites, RING_Q)
    for (x, y), blk in blocks.items():
        want = nsite_coproduct(s, sig[y], sig[x], 1, sites)
        if x == y:
            want = want + ident
        if blk != want:
            raise ChainError(f"block ({x},{y}) is not the expected coproduct")


def script_T_coefficients(chain: OpenChain):
    top = 2 * chain.sites + 1
    return [poly_coeff(chain.script_T, top - k) for k in range(top + 1)]


def _aux_blocks(m: ShapedMatrix):
    """Blocks m_{x,y} over the auxiliary leg 0, as chain-leg matrices."""
    n = m.legs[0]
    return {(x, y): m.block(0, x, y) for x in range(n) for y in range(n)}


def dressed_K_pair(chain: OpenChain):
    """The dressed boundary operator placed on two copy legs, over
    Q[l1,l2]: the first copy depends on l1, the second on l2, identity
    on the other copy.  Legs are (copy0, copy1, chain 1..N)."""
    n = chain.solution.n
    total = chain.sites + 2
    chain_dim = n ** chain.sites
    k1 = ShapedMatrix((n,) * total, RING_L2)
    k2 = ShapedMatrix((n,) * total, RING_L2)
    for (x, y), blk in _aux_blocks(chain.script_T).items():
        for r, row in blk.rows.items():
            for c, v in row.items():
                for t in range(n):
                    k1._acc((x * n + t) * chain_dim + r,
                            (y * n + t) * chain_dim + c, v.to_bi(1, 0))
                    k2._acc((t * n + x) * chain_dim + r,
                            (t * n + y) * chain_dim + c, v.to_bi(0, 1))
    return k1, k2


def check_dressed_exchange(chain: OpenChain) -> None:
    """The dressed operator satisfies the same quadratic exchange
    relation as the bare boundary matrix."""
    n = chain.solution.n
    R = bax_R(chain.rc)
    hat_R, _ = build_hat_R(R, chain.variant, n)
    k1, k2 = dressed_K_pair(chain)
    check_re2(R, hat_R, k1, k2)


def boundary_subalgebra_checks(chain: OpenChain, b: ShapedMatrix) -> dict:
    """Exchange-algebra consequences for the dressed boundary operator:

    local:    [script-T^(i)_{x,y}, rc_{n,n+1}] == 0 == [.., b_1], i = 0,1
    order:    the two top-order coefficient exchange relations
    one-map:  the closed commutator form for V-conjugated coefficients,
              plus gl-type closure of the subleading blocks up to one
              overall rational factor
    trace:    [script-T^(1)_{x,y}, t^(m)] == 0

    Returns a dict of booleans (sections that do not apply are omitted).
    """
    from .solutions import lyubashenko_maps
    from .twist import lyubashenko_V

    out = {}
    s = chain.solution
    n, sites, total = s.n, chain.sites, chain.sites + 1
    coeffs = script_T_coefficients(chain)
    tcoeffs = transfer_coefficients(chain)

    # local commutants of the first two coefficient blocks
    gens = [embed_pair(chain.rc, site - 1, site, sites) for site in range(1, sites)]
    gens.append(embed_single(b, 0, sites))
    ok = True
    for i in (0, 1):
        for blk in _aux_blocks(coeffs[i]).values():
            for g in gens:
                if not commutator(blk, g).is_zero:
                    ok = False
    out["local"] = ok

    # order-by-order exchange relations on two copy legs
    rstar, phat = rstar_phat(chain.rc, "reflection")
    big_legs = total + 1  # copy legs 0,1 then chain legs
    k_coeffs = [_raise_to_copy_legs(cf, n, big_legs) for cf in coeffs]
    try:
        check_exchange_top_orders(chain.rc, rstar, phat, k_coeffs)
        out["order"] = True
    except AssertionError:
        out["order"] = False

    # one-map closed form
    maps = lyubashenko_maps(s)
    if maps is not None:
        v = lyubashenko_V(s)
        vbig = embed_single(v, 0, big_legs) @ embed_single(v, 1, big_legs)
        vbig_inv = embed_single(v.invert(), 0, big_legs) @ embed_single(
            v.invert(), 1, big_legs
        )
        kt = [vbig_inv @ kc @ vbig for kc in k_coeffs]
        p12 = embed_pair(perm_p(n, RING_Q), 0, 1, big_legs)
        kt2 = [p12 @ m @ p12 for m in kt]
        ok = True
        for m in range(len(kt)):
            lhs = commutator(kt2[1], kt[m])
            rhs = p12 @ (
                kt2[m] @ (kt[0] + kt2[0]) - (kt[0] + kt2[0]) @ kt[m]
            )
            if lhs != rhs:
                ok = False
        out["one-map"] = ok
        out["gl-closure"] = _gl_closure(_aux_blocks(coeffs[1]), n)

    ok = True
    for blk in _aux_blocks(coeffs[1]).values():
        for t in tcoeffs:
            if not commutator(blk, t).is_zero:
                ok = False
    out["trace"] = ok
    return out


def _raise_to_copy_legs(cf: ShapedMatrix, n, big_legs):
    """Reinterpret a matrix on legs (aux, chain...) as living on
    (copy0, copy1, chain...), identity on copy leg 1."""
    ident = ShapedMatrix.identity((n,), RING_Q)
    # move aux to leg 0 and insert an identity leg right after it
    blocks = _aux_blocks(cf)
    out = ShapedMatrix((n,) * big_legs, RING_Q)
    chain_dim = n ** (big_legs - 2)
    for (x, y), blk in blocks.items():
        for r, row in blk.rows.items():
            for c, v in row.items():
                for t in range(n):
                    out._acc(
                        (x * n + t) * chain_dim + r,
                        (y * n + t) * chain_dim + c,
                        v,
                    )
    return out


def _gl_closure(blocks, n) -> bool:
    """[C_xy, C_zw] == gamma * (delta_yz C_xw - delta_xw C_zy) for a
    single rational gamma, after removing the additive identity part."""
    legs = next(iter(blocks.values())).legs
    ident = ShapedMatrix.identity(legs, RING_Q)
    # subtract the scalar multiple of the identity riding on the diagonal
    # blocks so the closure is tested on the traceless-style normal form
    cleaned = {}
    for (x, y), m in blocks.items():
        if x == y:
            lam = m.entry(0, 0)
            cleaned[(x, y)] = m - ident.scale(lam) if _diag_const(m, lam) else m
        else:
            cleaned[(x, y)] = m
    gamma = None
    for (x, y) in cleaned:
        for (z, w) in cleaned:
            comm = commutator(cleaned[(x, y)], cleaned[(z, w)])
            want = ShapedMatrix(legs, RING_Q)
            if y == z:
                want = want + cleaned[(x, w)]
            if x == w:
                want = want - cleaned[(z, y)]
            if want.is_zero:
                if not comm.is_zero:
                    return False
                continue
            g = _ratio(comm, want)
            if g is None:
                return False
            if gamma is None:
                gamma = g
            elif g != gamma and not comm.is_zero:
                return False
    return True


def _diag_const(m, lam) -> bool:
    return all(m.entry(i, i) == lam for i in range(m.dim))


def _ratio(a, b):
    """a == g * b for a single rational g, else None."""
    g = None
    for r, c, v in b.entries():
        w = a.entry(r, c)
        if g is None:
            g = w / v
        elif w != g * v:
            return None
    if g is None:
        return Fraction(0) if a.is_zero else None
    # confirm no extra support in a
    for r, c, v in a.entries():
        if g * b.entry(r, c) != v:
            return None
    return g


def check_monodromy_shift_relations(rc: ShapedMatrix, sites: int) -> None:
    """Ordered products over the chain legs:
        F^(i) = sum over decreasing index words of length N-1-i
        Fhat^(i) = the mirrored sums
    satisfy  F^(i) rc_{n,n+1} == rc_{n-1,n} F^(i)   (2 <= n <= N-1)
    and      Fhat^(i) rc_{n,n+1} == rc_{n+1,n+2} Fhat^(i)  (1 <= n <= N-2)
    for i = 0, 1."""
    n = rc.legs[0]
    if sites < 3:
        raise ChainError("the shift relations need at least three sites")

    def word(idxs, reverse):
        out = ShapedMatrix.identity((n,) * sites, RING_Q)
        seq = sorted(idxs, reverse=not reverse)
        for site in seq:
            out = out @ embed_pair(rc, site - 1, site, sites)
        return out

    def gsum(k, reverse):
        out = ShapedMatrix((n,) * sites, RING_Q)
        from itertools import combinations

        for idxs in combinations(range(1, sites), k):
            out = out + word(idxs, reverse)
        return out

    for i in (0, 1):
        k = sites - 1 - i
        f = gsum(k, reverse=False)
        fhat = gsum(k, reverse=True)
        for site in range(2, sites):
            lhs = f @ embed_pair(rc, site - 1, site, sites)
            rhs = embed_pair(rc, site - 2, site - 1, sites) @ f
            if lhs != rhs:
                raise ChainError(f"forward shift relation fails at n={site}, i={i}")
        for site in range(1, sites - 1):
            lhs = fhat @ embed_pair(rc, site - 1, site, sites)
            rhs = embed_pair(rc, site, site + 1, sites) @ fhat
            if lhs != rhs:
                raise ChainError(f"mirrored shift relation fails at n={site}, i={i}")


# -- symmetry suite -------------------------------------------------------


def symmetry_suite(chain: OpenChain, b: ShapedMatrix) -> list:
    """Operators on the chain legs expected to commute with the transfer
    matrix, each guarded by its hypothesis.  Returns a list of
    (name, status, detail) with status pass/fail/not-applicable."""
    from .solutions import (
        is_sigma_equivariant_set,
        is_solution_morphism,
        lyubashenko_maps,
        orbits,
        special_elements,
    )

    s = chain.solution
    n, sites = s.n, chain.sites
    results = []
    tcoeffs = [c for c in transfer_coefficients(chain) if not c.is_zero]

    def commutes(op):
        return all(commutator(op, t).is_zero for t in tcoeffs)

    def k_of(bm):
        # b is a 0/1 point map matrix in all fixtures handled here
        k = [None] * n
        for r, c, v in bm.entries():
            if v == 1:
                k[r] = c
        return k if all(t is not None for t in k) else None

    k = k_of(b)
    ident = ShapedMatrix.identity((n,), RING_Q)
    b_is_scalar = _ratio(b, ident) is not None

    # solution automorphisms compatible with the boundary
    autos = []
    if k is not None:
        for f in product(range(n), repeat=n):
            if len(set(f)) != n or not is_solution_morphism(s, s, f):
                continue
            if all(f[k[x]] == k[f[x]] for x in range(n)):
                autos.append(f)
    nontrivial = [f for f in autos if f != tuple(range(n))]
    if nontrivial:
        ok = all(
            commutes(_point_power(f, n, sites)) for f in nontrivial
        )
        results.append(("morphism", "pass" if ok else "fail", len(nontrivial)))
    else:
        results.append(("morphism", "not-applicable", 0))

    # special (both-slot trivial) elements: primitive coproducts
    spec = special_elements(s)
    pairs = [
        (xi, xj)
        for xi in spec
        for xj in spec
        if commutator(b, e_matrix_q(n, xi, xj)).is_zero
    ]
    if pairs:
        ok = True
        for xi, xj in pairs:
            op = ShapedMatrix((n,) * sites, RING_Q)
            for site in range(sites):
                op = op + embed_single(e_matrix_q(n, xi, xj), site, sites)
            if not commutes(op):
                ok = False
        results.append(("special-element", "pass" if ok else "fail", len(pairs)))
    else:
        results.append(("special-element", "not-applicable", 0))

    # diagonal-fixed pure tensor powers, scalar boundary only
    from .solutions import apply_r

    fixed_pairs = [
        (xi, xj)
        for xi in range(n)
        for xj in range(n)
        if apply_r(s, xi, xi) == (xi, xi) and apply_r(s, xj, xj) == (xj, xj)
        and apply_r(s, xi, xj) == (xi, xj) and apply_r(s, xj, xi) == (xj, xi)
    ]
    if b_is_scalar and fixed_pairs:
        ok = all(
            commutes(_tensor_power(e_matrix_q(n, xi, xj), sites))
            for xi, xj in fixed_pairs
        )
        results.append(("fixed-point", "pass" if ok else "fail", len(fixed_pairs)))
    else:
        results.append(("fixed-point", "not-applicable", len(fixed_pairs)))

    # sigma-stable subset sums, scalar boundary only
    parts = orbits(s)
    stable = [Y for Y in parts if is_sigma_equivariant_set(s, Y)]
    if b_is_scalar and stable:
        ok = True
        for Y in stable:
            for Z in stable:
                m = ShapedMatrix((n,), RING_Q)
                for i in Y:
                    for j in Z:
                        m._acc(i, j, Fraction(1))
                if not commutes(_tensor_power(m, sites)):
                    ok = False
        results.append(("subset-sum", "pass" if ok else "fail", len(stable)))
    else:
        results.append(("subset-sum", "not-applicable", len(stable)))

    # one-map power operators M_y = sum_x e_{x, sig^y(x)}
    maps = lyubashenko_maps(s)
    if maps is not None and k is not None:
        sig, _ = maps
        ok = True
        applicable = 0
        for y in range(1, n):
            sp = _perm_pow(sig, y)
            if any(sp[k[x]] != k[sp[x]] for x in range(n)):
                continue
            applicable += 1
            m = ShapedMatrix((n,), RING_Q, {x: {sp[x]: Fraction(1)} for x in range(n)})
            if not commutes(_tensor_power(m, sites)):
                ok = False
        if applicable:
            results.append(("one-map-power", "pass" if ok else "fail", applicable))
        else:
            results.append(("one-map-power", "not-applicable", 0))
    else:
        results.append(("one-map-power", "not-applicable", 0))

    # diagonal operators diag(xi^x) with rational xi
    diag_ok, diag_app = _diagonal_symmetries(chain, k)
    results.append(
        ("diagonal", "pass" if diag_ok else "fail", diag_app)
        if diag_app
        else ("diagonal", "not-applicable", 0)
    )
    return results


def e_matrix_q(n, x, y):
    from .tensor import e_matrix

    return e_matrix(n, x, y, RING_Q)


def _point_power(f, n, sites):
    m = ShapedMatrix((n,), RING_Q, {x: {f[x]: Fraction(1)} for x in range(n)})
    return _tensor_power(m, sites)


def _tensor_power(m, sites):
    out = m
    for _ in range(sites - 1):
        out = kron(out, m)
    return out


def _perm_pow(perm, k):
    out = tuple(range(len(perm)))
    for _ in range(k):
        out = tuple(perm[v] for v in out)
    return out


def _diagonal_symmetries(chain: OpenChain, k):
    """diag(xi^x) tensor powers for candidate rational xi, guarded by
    xi^x == xi^{k(x)} and xi^{x+y} == xi^{sigma(y)+tau(x)} on exponents."""
    s = chain.solution
    n, sites = s.n, chain.sites
    candidates = [Fraction(-1), Fraction(2)]
    applicable = 0
    ok = True
    tcoeffs = [c for c in transfer_coefficients(chain) if not c.is_zero]
    for xi in candidates:
        if k is not None and any(xi**x != xi ** k[x] for x in range(n)):
            continue
        good = all(
            xi ** (x + y) == xi ** (s.sigma[x][y] + s.tau[y][x])
            for x in range(n)
            for y in range(n)
        )
        if not good:
            continue
        applicable += 1
        m = ShapedMatrix((n,), RING_Q, {x: {x: xi**x} for x in range(n)})
        op = _tensor_power(m, sites)
        if not all(commutator(op, t).is_zero for t in tcoeffs):
            ok = False
    return ok, applicable
