"""Finite braces and the solutions they generate.

A brace here is a finite set with two group structures sharing the
identity 0: an abelian additive group and a "circle" group, tied by the
compatibility law  a o (b + c) + a = a o b + a o c.

Braces are constructed from nilpotent ring data via a o b = ab + a + b,
and every brace yields a non-degenerate involutive solution through
    sigma_x(y) = x o y - x,
    tau_y(x)   = t o x - t,   t = circle inverse of sigma_x(y).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = [
    "AlgebraError",
    "NilpotentRingSpec",
    "FiniteBrace",
    "validate_nilpotent_ring",
    "brace_from_ring",
    "validate_brace",
    "circle_inverse",
    "solution_from_brace",
    "zero_ring_spec",
    "zp2_ring_spec",
    "brace_to_json",
    "brace_from_json",
    "ring_spec_to_json",
    "ring_spec_from_json",
]


class AlgebraError(ValueError):
    """An axiom failed; the message carries a concrete witness."""


@dataclass(frozen=True)
class NilpotentRingSpec:
    """Finite ring data: element labels 0..order-1 with 0 the additive
    identity, addition and multiplication as full Cayley tables."""

    order: int
    add: tuple
    mul: tuple

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))


@dataclass(frozen=True)
class FiniteBrace:
    order: int
    add: tuple
    circle: tuple

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "circle", tuple(tuple(r) for r in self.circle))

    def neg(self, a):
        return _neg_table(self.add)[a]

    def sub(self, a, b):
        return self.add[a][self.neg(b)]


def _check_table(order, table, what):
    if len(table) != order or any(len(r) != order for r in table):
        raise AlgebraError(f"{what} table must be {order}x{order}")
    for r in table:
        for v in r:
            if not (0 <= v < order):
                raise AlgebraError(f"{what} table entry {v} out of range")


def _check_abelian_group(order, add, what="additive"):
    _check_table(order, add, what)
    for a in range(order):
        if add[a][0] != a or add[0][a] != a:
            raise AlgebraError(f"0 is not the {what} identity at {a}")
    for a in range(order):
        for b in range(order):
            if add[a][b] != add[b][a]:
                raise AlgebraError(f"{what} not commutative at ({a},{b})")
        if len(set(add[a])) != order:
            raise AlgebraError(f"{what} row {a} is not a permutation")
    for a in range(order):
        for b in range(order):
            for c in range(order):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise AlgebraError(f"{what} not associative at ({a},{b},{c})")
    neg = _neg_table(add)
    for a in range(order):
        if neg[a] is None:
            raise AlgebraError(f"no {what} inverse for {a}")


def _neg_table(add):
    order = len(add)
    neg = [None] * order
    for a in range(order):
        for b in range(order):
            if add[a][b] == 0:
                neg[a] = b
                break
    return neg


def validate_nilpotent_ring(spec: NilpotentRingSpec) -> int:
    """Check the ring axioms and return the nilpotency degree: the least
    m such that every product of m factors is 0."""
    n, add, mul = spec.order, spec.add, spec.mul
    _check_abelian_group(n, add)
    _check_table(n, mul, "multiplication")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise AlgebraError(f"multiplication not associative at ({a},{b},{c})")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise AlgebraError(f"left distributivity fails at ({a},{b},{c})")
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    raise AlgebraError(f"right distributivity fails at ({a},{b},{c})")
    # products of m factors; associativity makes bracketing irrelevant
    prods = set(range(n))
    for m in range(2, n + 2):
        prods = {mul[p][x] for p in prods for x in range(n)}
        if prods == {0}:
            return m
    raise AlgebraError("ring is not nilpotent")


def brace_from_ring(spec: NilpotentRingSpec) -> FiniteBrace:
    """a o b = ab + a + b on a nilpotent ring gives a (two-sided) brace."""
    validate_nilpotent_ring(spec)
    n, add, mul = spec.order, spec.add, spec.mul
    circle = tuple(
        tuple(add[mul[a][b]][add[a][b]] for b in range(n)) for a in range(n)
    )
    b = FiniteBrace(n, add, circle)
    validate_brace(b)
    return b


def validate_brace(b: FiniteBrace) -> None:
    n, add, circle = b.order, b.add, b.circle
    _check_abelian_group(n, add)
    _check_table(n, circle, "circle")
    for a in range(n):
        if circle[a][0] != a or circle[0][a] != a:
            raise AlgebraError(f"0 is not the circle identity at {a}")
        if len(set(circle[a])) != n or len({circle[x][a] for x in range(n)}) != n:
            raise AlgebraError(f"circle row/column {a} not a permutation")
    for a in range(n):
        for x in range(n):
            for c in range(n):
                if circle[circle[a][x]][c] != circle[a][circle[x][c]]:
                    raise AlgebraError(f"circle not associative at ({a},{x},{c})")
    neg = _neg_table(add)
    for a in range(n):
        for x in range(n):
            for c in range(n):
                lhs = add[circle[a][add[x][c]]][a]
                rhs = add[circle[a][x]][circle[a][c]]
                if lhs != rhs:
                    raise AlgebraError(
                        f"brace compatibility fails at ({a},{x},{c}): {lhs} != {rhs}"
                    )
    del neg


def circle_inverse(b: FiniteBrace, a: int) -> int:
    for x in range(b.order):
        if b.circle[a][x] == 0:
            if b.circle[x][a] != 0:
                raise AlgebraError(f"one-sided circle inverse at {a}")
            return x
    raise AlgebraError(f"no circle inverse for {a}")


def solution_from_brace(b: FiniteBrace, subset=None):
    """The involutive solution attached to a brace; optionally restricted
    to a subset closed under both component maps."""
    from .solutions import SetSolution, validate_solution

    n = b.order
    sigma = [[b.sub(b.circle[x][y], x) for y in range(n)] for x in range(n)]
    tau = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            t = circle_inverse(b, sigma[x][y])
            tau[y][x] = b.sub(b.circle[t][x], t)
    if subset is not None:
        subset = sorted(set(subset))
        for x in subset:
            for y in subset:
                if sigma[x][y] not in subset or tau[y][x] not in subset:
                    raise AlgebraError(f"subset not closed at ({x},{y})")
        relabel = {v: i for i, v in enumerate(subset)}
        m = len(subset)
        sig = [[relabel[sigma[x][y]] for y in subset] for x in subset]
        ta = [[relabel[tau[y][x]] for x in subset] for y in subset]
        sol = SetSolution(m, tuple(map(tuple, sig)), tuple(map(tuple, ta)))
    else:
        sol = SetSolution(n, tuple(map(tuple, sigma)), tuple(map(tuple, tau)))
    validate_solution(sol)
    return sol


# -- stock ring specs --------------------------------------------------


def zero_ring_spec(n: int) -> NilpotentRingSpec:
    """Z/n with the zero multiplication; its brace is the trivial one."""
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return NilpotentRingSpec(n, add, mul)


def zp2_ring_spec(p: int) -> NilpotentRingSpec:
    """Z/p^2 with a*b = p*a*b mod p^2 (nilpotency degree 3)."""
    n = p * p
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((p * a * b) % n for b in range(n)) for a in range(n))
    return NilpotentRingSpec(n, add, mul)


# -- serialization ------------------------------------------------------


def ring_spec_to_json(spec: NilpotentRingSpec, path=None):
    obj = {
        "schema": "ybx/1",
        "order": spec.order,
        "add": [list(r) for r in spec.add],
        "mul": [list(r) for r in spec.mul],
    }
    if path:
        with open(path, "w") as fh:
            json.dump(obj, fh, indent=1)
    return obj


def ring_spec_from_json(obj_or_path) -> NilpotentRingSpec:
    obj = _load(obj_or_path)
    return NilpotentRingSpec(obj["order"], obj["add"], obj["mul"])


def brace_to_json(b: FiniteBrace, path=None):
    obj = {
        "schema": "ybx/1",
        "order": b.order,
        "add": [list(r) for r in b.add],
        "circle": [list(r) for r in b.circle],
    }
    if path:
        with open(path, "w") as fh:
            json.dump(obj, fh, indent=1)
    return obj


def brace_from_json(obj_or_path) -> FiniteBrace:
    obj = _load(obj_or_path)
    b = FiniteBrace(obj["order"], obj["add"], obj["circle"])
    validate_brace(b)
    return b


def _load(obj_or_path):
    if isinstance(obj_or_path, str):
        with open(obj_or_path) as fh:
            return json.load(fh)
    return obj_or_path
