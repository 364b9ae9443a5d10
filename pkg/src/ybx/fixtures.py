"""Named stock fixtures used across the test suites and the CLI."""

from __future__ import annotations

from .brace import (
    brace_from_ring,
    brace_to_json,
    solution_from_brace,
    zero_ring_spec,
    zp2_ring_spec,
)
from .solutions import (
    SetSolution,
    flip_solution,
    reversal_solution,
    shift_solution,
    solution_to_json,
)

__all__ = ["FIXTURES", "make_fixture", "fixture_names"]


def _trivial(n=2):
    brace = brace_from_ring(zero_ring_spec(n))
    return {"solution": solution_from_brace(brace), "brace": brace}


def _shift(n=2):
    return {"solution": shift_solution(n), "brace": None}


def _reversal(n=2):
    return {"solution": reversal_solution(n), "brace": None}


def _zp2(p=2):
    brace = brace_from_ring(zp2_ring_spec(p))
    return {"solution": solution_from_brace(brace), "brace": brace}


def _z4():
    return _zp2(2)


FIXTURES = {
    "trivial": _trivial,
    "lyubashenko-shift": _shift,
    "lyubashenko-reversal": _reversal,
    "zp2": _zp2,
    "z4-nilpotent": _z4,
}


def fixture_names():
    return sorted(FIXTURES)


def make_fixture(name, **kwargs):
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {fixture_names()}")
    out = FIXTURES[name](**kwargs)
    out["name"] = name
    out["params"] = kwargs
    return out
