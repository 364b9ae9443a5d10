"""Set-theoretic solutions of the braid equation on a finite set.

Conventions: elements are 0..n-1.  The two-parameter maps are stored as
tables with sigma[x][y] = sigma_x(y) and tau[y][x] = tau_y(x), so the
braid map is  (x, y) |-> (sigma[x][y], tau[y][x]).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

__all__ = [
    "SolutionError",
    "SetSolution",
    "validate_solution",
    "apply_r",
    "swap_solution",
    "is_set_reflection",
    "reflection_criterion",
    "check_set_reflection",
    "is_involutive_map",
    "is_tau_equivariant",
    "is_sigma_equivariant_map",
    "orbits",
    "is_sigma_equivariant_set",
    "special_elements",
    "diagonal_fixed_elements",
    "find_reflections",
    "tau_central_reflection",
    "is_solution_morphism",
    "lyubashenko_maps",
    "shift_solution",
    "reversal_solution",
    "flip_solution",
    "solution_to_json",
    "solution_from_json",
]


class SolutionError(ValueError):
    """A solution-level check failed; the message carries a witness."""


@dataclass(frozen=True)
class SetSolution:
    n: int
    sigma: tuple  # sigma[x][y] = sigma_x(y)
    tau: tuple  # tau[y][x] = tau_y(x)

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(tuple(r) for r in self.sigma))
        object.__setattr__(self, "tau", tuple(tuple(r) for r in self.tau))


def apply_r(s: SetSolution, x, y):
    return s.sigma[x][y], s.tau[y][x]


def validate_solution(s: SetSolution) -> None:
    """Non-degeneracy, involutivity, and the braid relation, by brute force."""
    n = s.n
    for x in range(n):
        if len(set(s.sigma[x])) != n:
            raise SolutionError(f"sigma_{x} is not a permutation")
        if len(set(s.tau[x])) != n:
            raise SolutionError(f"tau_{x} is not a permutation")
    for x in range(n):
        for y in range(n):
            u, v = apply_r(s, x, y)
            if apply_r(s, u, v) != (x, y):
                raise SolutionError(f"not involutive at ({x},{y})")
    for x, y, z in product(range(n), repeat=3):
        # r12 r23 r12 == r23 r12 r23 on (x, y, z)
        a, b = apply_r(s, x, y)
        c, d = apply_r(s, b, z)
        e, f = apply_r(s, a, c)
        lhs = (e, f, d)
        g, h = apply_r(s, y, z)
        i, j = apply_r(s, x, g)
        k, m = apply_r(s, j, h)
        rhs = (i, k, m)
        if lhs != rhs:
            raise SolutionError(f"braid relation fails at ({x},{y},{z})")


def swap_solution(s: SetSolution) -> SetSolution:
    """The companion solution with the roles of the two maps exchanged."""
    n = s.n
    sigma = tuple(tuple(s.tau[x][y] for y in range(n)) for x in range(n))
    tau = tuple(tuple(s.sigma[y][x] for x in range(n)) for y in range(n))
    out = SetSolution(n, sigma, tau)
    validate_solution(out)
    return out


# -- reflections ---------------------------------------------------------


def is_set_reflection(s: SetSolution, k) -> bool:
    """Brute-force reflection check: r k1 r k1 == k1 r k1 r on pairs,
    where k1 acts on the first coordinate."""
    for x in range(s.n):
        for y in range(s.n):
            a, b = apply_r(s, k[x], y)
            lhs = apply_r(s, k[a], b)
            c, d = apply_r(s, x, y)
            e, f = apply_r(s, k[c], d)
            rhs = (k[e], f)
            if lhs != rhs:
                return False
    return True


def reflection_criterion(s: SetSolution, k) -> bool:
    """Closed-form criterion for an involutive map k:
    tau_{tau_y(x)}(k(sigma_x(y))) == tau_{tau_y(k(x))}(k(sigma_{k(x)}(y)))."""
    for x in range(s.n):
        for y in range(s.n):
            lhs = s.tau[s.tau[y][x]][k[s.sigma[x][y]]]
            rhs = s.tau[s.tau[y][k[x]]][k[s.sigma[k[x]][y]]]
            if lhs != rhs:
                return False
    return True


def is_involutive_map(k) -> bool:
    return all(k[k[x]] == x for x in range(len(k)))


def check_set_reflection(s: SetSolution, k) -> None:
    """Raise on failure.  For involutive k the closed-form criterion is
    evaluated alongside the brute-force verdict and must agree."""
    brute = is_set_reflection(s, k)
    if is_involutive_map(k):
        crit = reflection_criterion(s, k)
        if crit != brute:
            raise SolutionError(
                f"criterion/brute-force disagreement for k={tuple(k)}: "
                f"criterion={crit} brute={brute}"
            )
    if not brute:
        for x in range(s.n):
            for y in range(s.n):
                a, b = apply_r(s, k[x], y)
                lhs = apply_r(s, k[a], b)
                c, d = apply_r(s, x, y)
                e, f = apply_r(s, k[c], d)
                if lhs != (k[e], f):
                    raise SolutionError(f"reflection fails at ({x},{y}) for k={tuple(k)}")


def is_tau_equivariant(s: SetSolution, k) -> bool:
    """tau_x(k(y)) == k(tau_x(y)) for all x, y."""
    return all(
        s.tau[x][k[y]] == k[s.tau[x][y]] for x in range(s.n) for y in range(s.n)
    )


def is_sigma_equivariant_map(s: SetSolution, k) -> bool:
    """sigma_x(k(y)) == k(sigma_x(y)) for all x, y."""
    return all(
        s.sigma[x][k[y]] == k[s.sigma[x][y]] for x in range(s.n) for y in range(s.n)
    )


def find_reflections(s: SetSolution, involutive_only=False):
    """Enumerate all maps k: X -> X passing the brute-force reflection
    check.  Exhaustive, so intended for n <= 4."""
    if s.n**s.n > 100_000:
        raise SolutionError("exhaustive reflection search capped at small n")
    out = []
    for k in product(range(s.n), repeat=s.n):
        if involutive_only and not is_involutive_map(k):
            continue
        if is_set_reflection(s, k):
            out.append(k)
    return out


def tau_central_reflection(s: SetSolution, c: int):
    """k(x) = tau_c(x).  The defining property used here (checked by
    brute force) is that k commutes with every tau_x, which makes the
    reflection check pass; a SolutionError carries the witness otherwise."""
    k = tuple(s.tau[c][x] for x in range(s.n))
    if not is_tau_equivariant(s, k):
        raise SolutionError(f"tau_{c} does not commute with the tau-action")
    check_set_reflection(s, k)
    return k


# -- structure maps ------------------------------------------------------


def orbits(s: SetSolution):
    """Partition of X into minimal subsets closed under all sigma_x, tau_x."""
    seen = [False] * s.n
    parts = []
    for z in range(s.n):
        if seen[z]:
            continue
        stack, part = [z], set()
        while stack:
            y = stack.pop()
            if y in part:
                continue
            part.add(y)
            for x in range(s.n):
                for img in (s.sigma[x][y], s.tau[x][y]):
                    if img not in part:
                        stack.append(img)
        for y in part:
            seen[y] = True
        parts.append(tuple(sorted(part)))
    return sorted(parts)


def is_sigma_equivariant_set(s: SetSolution, subset) -> bool:
    """sigma_x(Y) = Y for every x (as a set)."""
    ss = set(subset)
    return all({s.sigma[x][y] for y in ss} == ss for x in range(s.n))


def special_elements(s: SetSolution):
    """Elements acting trivially in both slots: sigma_x = id and
    tau_y(x) = x for all y."""
    out = []
    for x in range(s.n):
        if all(s.sigma[x][y] == y for y in range(s.n)) and all(
            s.tau[y][x] == x for y in range(s.n)
        ):
            out.append(x)
    return out


def diagonal_fixed_elements(s: SetSolution):
    """Elements x with r(x, x) = (x, x)."""
    return [x for x in range(s.n) if apply_r(s, x, x) == (x, x)]


def is_solution_morphism(s: SetSolution, t: SetSolution, f) -> bool:
    """f with f(sigma_x(y)) = sigma_{f(x)}(f(y)) and the same for tau."""
    if s.n != t.n or len(set(f)) != s.n:
        return False
    for x in range(s.n):
        for y in range(s.n):
            if f[s.sigma[x][y]] != t.sigma[f[x]][f[y]]:
                return False
            if f[s.tau[x][y]] != t.tau[f[x]][f[y]]:
                return False
    return True


def lyubashenko_maps(s: SetSolution):
    """If the solution is of one-map (Lyubashenko) type, return the pair
    (sigma, tau) of single permutations; otherwise None."""
    sig = s.sigma[0]
    tau0 = tuple(s.tau[0])
    if any(s.sigma[x] != sig for x in range(s.n)):
        return None
    if any(tuple(s.tau[x]) != tau0 for x in range(s.n)):
        return None
    if any(sig[tau0[y]] != y or tau0[sig[y]] != y for y in range(s.n)):
        return None
    return tuple(sig), tau0


def _lyubashenko(n, sig):
    tau = tuple(sig.index(x) for x in range(n))
    sol = SetSolution(
        n,
        tuple(sig for _ in range(n)),
        tuple(tau for _ in range(n)),
    )
    validate_solution(sol)
    return sol


def shift_solution(n: int) -> SetSolution:
    """One-map solution with sigma the cyclic shift y -> y + 1 mod n."""
    return _lyubashenko(n, tuple((y + 1) % n for y in range(n)))


def reversal_solution(n: int) -> SetSolution:
    """One-map solution with sigma the order reversal y -> n - 1 - y."""
    return _lyubashenko(n, tuple(n - 1 - y for y in range(n)))


def flip_solution(n: int) -> SetSolution:
    """The identity-maps solution; its linearization is the flip."""
    return _lyubashenko(n, tuple(range(n)))


# -- serialization -------------------------------------------------------


def solution_to_json(s: SetSolution, path=None):
    obj = {
        "schema": "ybx/1",
        "n": s.n,
        "sigma": [list(r) for r in s.sigma],
        "tau": [list(r) for r in s.tau],
    }
    if path:
        with open(path, "w") as fh:
            json.dump(obj, fh, indent=1)
    return obj


def solution_from_json(obj_or_path) -> SetSolution:
    if isinstance(obj_or_path, str):
        with open(obj_or_path) as fh:
            obj = json.load(fh)
    else:
        obj = obj_or_path
    s = SetSolution(obj["n"], obj["sigma"], obj["tau"])
    validate_solution(s)
    return s
