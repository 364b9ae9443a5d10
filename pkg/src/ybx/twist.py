"""Similarity transforms between the flip and a braid operator, and the
deformed coproducts they induce.

Both the flip P and an involutive braid operator rcheck square to the
identity, so each has eigenvalues +1/-1 with matching multiplicities.
Pairing their eigenvectors cell by cell yields an invertible F with
rcheck = F P F^{-1}.  Rational weights 1/2 stand in for the usual
1/sqrt(2) normalizations; the product of the two outer-product weights
is what matters, and it stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import RING_Q
from .solutions import SetSolution, apply_r, lyubashenko_maps
from .tensor import (
    ShapedMatrix,
    commutator,
    e_matrix,
    embed_single,
    kron,
    matrix_power,
    perm_p,
)
from .linearize import IdentityError, linearize

__all__ = [
    "CellPairing",
    "cell_pairing",
    "build_twist",
    "verify_twist",
    "eigen_multiplicity_check",
    "lyubashenko_V",
    "twisted_coproduct",
    "plain_coproduct",
    "nsite_coproduct",
    "check_gl_symmetry",
    "gl_family",
    "f_n_builder",
    "coassociativity_probe",
]


@dataclass(frozen=True)
class CellPairing:
    """Cells of X x X under the braid map: fixed cells and 2-cycles,
    each cycle keyed by its lexicographically least representative."""

    fixed: tuple
    cycles: tuple  # ((rep, image), ...) with rep < image lexicographically


def cell_pairing(s: SetSolution) -> CellPairing:
    fixed, cycles, seen = [], [], set()
    for x in range(s.n):
        for y in range(s.n):
            if (x, y) in seen:
                continue
            u, v = apply_r(s, x, y)
            if (u, v) == (x, y):
                fixed.append((x, y))
            else:
                seen.add((u, v))
                cycles.append(((x, y), (u, v)))
            seen.add((x, y))
    if len(fixed) != s.n:
        raise IdentityError(
            f"expected {s.n} fixed cells, found {len(fixed)}"
        )
    return CellPairing(tuple(sorted(fixed)), tuple(sorted(cycles)))


def _unit(n, cell):
    """Basis column vector of the two-leg space, as an (n,n)-legged
    one-column matrix stored in column 0."""
    v = ShapedMatrix((n, n), RING_Q)
    v.rows[cell[0] * n + cell[1]] = {0: Fraction(1)}
    return v


def build_twist(s: SetSolution) -> ShapedMatrix:
    """F = sum over paired eigenvectors of (rcheck eigenvector) times
    (flip eigenvector)^T, with rational weights."""
    n = s.n
    pairing = cell_pairing(s)
    flip_fixed = [(x, x) for x in range(n)]
    flip_cycles = [((x, y), (y, x)) for x in range(n) for y in range(x + 1, n)]
    if len(flip_cycles) != len(pairing.cycles):
        raise IdentityError("cycle counts do not match")
    f = ShapedMatrix((n, n), RING_Q)
    half = Fraction(1, 2)
    for (rc), (pc) in zip(pairing.fixed, flip_fixed):
        u = _unit(n, rc)
        w = _unit(n, pc)
        f = f + (u @ w.transpose())
    for (rrep, rimg), (prep, pimg) in zip(pairing.cycles, flip_cycles):
        up, um = _unit(n, rrep) + _unit(n, rimg), _unit(n, rrep) - _unit(n, rimg)
        wp, wm = _unit(n, prep) + _unit(n, pimg), _unit(n, prep) - _unit(n, pimg)
        f = f + (up @ wp.transpose()).scale(half) + (um @ wm.transpose()).scale(half)
    return f


def verify_twist(s: SetSolution, f: ShapedMatrix) -> None:
    """rcheck == F P F^{-1} and r == F^(op) F^{-1} with F^(op) = P F P."""
    n = s.n
    rc = linearize(s)
    p = perm_p(n, RING_Q)
    finv = f.invert()
    if f @ p @ finv != rc:
        raise IdentityError("twist does not conjugate the flip to rcheck")
    fop = p @ f @ p
    if fop @ finv != p @ rc:
        raise IdentityError("non-braid form is not F^(op) F^{-1}")


def eigen_multiplicity_check(s: SetSolution) -> None:
    """rank(rcheck - 1) == (n^2 - n)/2 and rank(rcheck + 1) == (n^2 + n)/2."""
    n = s.n
    rc = linearize(s)
    ident = ShapedMatrix.identity((n, n), RING_Q)
    minus = (rc - ident).rank()
    plus = (rc + ident).rank()
    if minus != (n * n - n) // 2 or plus != (n * n + n) // 2:
        raise IdentityError(
            f"eigenvalue multiplicities off: rank(-)={minus} rank(+)={plus}"
        )


# -- one-map (Lyubashenko) machinery --------------------------------------


def lyubashenko_V(s: SetSolution) -> ShapedMatrix:
    """V = sum_x e_{x, tau(x)} for a one-map solution; then
    rcheck = (V (x) 1) P (V^{-1} (x) 1) and r = V^{-1} (x) V."""
    maps = lyubashenko_maps(s)
    if maps is None:
        raise IdentityError("not a one-map solution")
    _, tau = maps
    n = s.n
    v = ShapedMatrix((n,), RING_Q, {x: {tau[x]: Fraction(1)} for x in range(n)})
    vinv = v.invert()
    p = perm_p(n, RING_Q)
    ident1 = ShapedMatrix.identity((n,), RING_Q)
    rc = linearize(s)
    if kron(v, ident1) @ p @ kron(vinv, ident1) != rc:
        raise IdentityError("V does not reproduce the braid operator")
    if kron(vinv, v) != p @ rc:
        raise IdentityError("V^{-1} (x) V does not reproduce the non-braid form")
    return v


def plain_coproduct(a: ShapedMatrix, N: int = 2) -> ShapedMatrix:
    """Primitive N-site coproduct: sum over sites of 1...a...1."""
    total = ShapedMatrix((a.legs[0],) * N, RING_Q)
    for site in range(N):
        total = total + embed_single(a, site, N)
    return total


def twisted_coproduct(s: SetSolution, x, y, variant, N: int = 2) -> ShapedMatrix:
    """Deformed coproduct of the matrix unit e_{x,y}.

    variant 1 (one-map): sum_k 1...e_{sig^(N-k)(x), sig^(N-k)(y)}...1
    variant 2 (one-map): the same with tau powers and a reversed grading
    variant "general-2site": F Delta F^{-1} with the cell-pairing twist.
    """
    n = s.n
    if variant == "general-2site":
        if N != 2:
            raise ValueError("the general twist form is two-site")
        f = build_twist(s)
        finv = f.invert()
        return f @ plain_coproduct(e_matrix(n, x, y), 2) @ finv
    maps = lyubashenko_maps(s)
    if maps is None:
        raise IdentityError("variants 1 and 2 need a one-map solution")
    sig, tau = maps
    out = ShapedMatrix((n,) * N, RING_Q)
    for site in range(1, N + 1):  # site index 1..N, leftmost is 1
        if variant == 1:
            g = _perm_power(sig, N - site)
        elif variant == 2:
            g = _perm_power(tau, site - 1)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        out = out + embed_single(e_matrix(n, g[x], g[y]), site - 1, N)
    return out


def _perm_power(perm, k):
    n = len(perm)
    out = list(range(n))
    for _ in range(k):
        out = [perm[v] for v in out]
    return tuple(out)


def nsite_coproduct(s: SetSolution, x, y, variant, N):
    return twisted_coproduct(s, x, y, variant, N)


def gl_family(s: SetSolution, variant, N: int = 2):
    """All n^2 deformed coproducts, keyed by (x, y)."""
    return {
        (x, y): twisted_coproduct(s, x, y, variant, N)
        for x in range(s.n)
        for y in range(s.n)
    }


def check_gl_symmetry(rc: ShapedMatrix, family) -> None:
    """Each family member commutes with the braid operator (two-site
    families only), and the family closes on the matrix-unit relations
    [D(e_xy), D(e_zw)] = delta_yz D(e_xw) - delta_xw D(e_zy)."""
    n = rc.legs[0]
    for (x, y), d in family.items():
        if len(d.legs) == 2 and not commutator(rc, d).is_zero:
            raise IdentityError(f"braid operator does not commute with D(e_{x}{y})")
    for (x, y), a in family.items():
        for (z, w), b in family.items():
            want = ShapedMatrix(a.legs, RING_Q)
            if y == z:
                want = want + family[(x, w)]
            if x == w:
                want = want - family[(z, y)]
            if commutator(a, b) != want:
                raise IdentityError(
                    f"matrix-unit relations fail at ({x},{y}),({z},{w})"
                )


def f_n_builder(v: ShapedMatrix, N: int, variant) -> ShapedMatrix:
    """Site-graded twists built from powers of V:
    variant 1: V^{N-1} (x) ... (x) V (x) 1
    variant 2: 1 (x) V^{-1} (x) ... (x) V^{-(N-1)}."""
    if variant == 1:
        out = matrix_power(v, N - 1)
        for k in range(N - 2, -1, -1):
            out = kron(out, matrix_power(v, k))
        return out
    if variant == 2:
        out = matrix_power(v, 0)
        for k in range(1, N):
            out = kron(out, matrix_power(v.invert(), k))
        return out
    raise ValueError(f"unknown variant {variant!r}")


def coassociativity_probe(s: SetSolution, variant=1):
    """Compare the two three-site iterates of the deformed two-site
    coproduct.  Returns (equal, witness) where witness names a matrix
    unit at which they differ, if any."""
    maps = lyubashenko_maps(s)
    if maps is None:
        raise IdentityError("probe needs a one-map solution")
    n = s.n
    v = lyubashenko_V(s)
    vinv = v.invert()
    if variant == 2:
        v, vinv = vinv, v
    ident = ShapedMatrix.identity((n,), RING_Q)

    def conj(a):
        return v @ a @ vinv

    def three(t0, t1, t2):
        return kron(kron(t0, t1), t2)

    for x in range(n):
        for y in range(n):
            e = e_matrix(n, x, y)
            common = three(ident, conj(e), ident)
            if variant == 1:
                # conjugated factor sits on the left of the two-site form
                left = three(conj(conj(e)), ident, ident) + common + three(ident, ident, e)
                right = three(conj(e), ident, ident) + common + three(ident, ident, e)
            else:
                left = three(e, ident, ident) + common + three(ident, ident, conj(e))
                right = three(e, ident, ident) + common + three(ident, ident, conj(conj(e)))
            if left != right:
                return False, (x, y)
    return True, None
