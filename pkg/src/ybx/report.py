"""Structured pass/fail reporting shared by the CLI entry points."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
FINDING = "finding"


@dataclass
class Check:
    name: str
    identity: str  # human-readable statement of what was verified
    status: str
    witness: str = ""
    seconds: float = 0.0

    def to_json(self):
        return {
            "name": self.name,
            "identity": self.identity,
            "status": self.status,
            "witness": self.witness,
            "seconds": round(self.seconds, 4),
        }


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def run(self, name, identity, fn, not_applicable=False):
        """Execute fn(); an exception marks the check failed and its
        message becomes the witness."""
        if not_applicable:
            self.checks.append(Check(name, identity, NOT_APPLICABLE))
            return None
        t0 = time.perf_counter()
        try:
            out = fn()
            status, witness = PASS, ""
        except AssertionError as exc:
            out, status, witness = None, FAIL, str(exc)
        except Exception as exc:  # noqa: BLE001 - reported, not hidden
            out, status, witness = None, FAIL, f"{type(exc).__name__}: {exc}"
        self.checks.append(
            Check(name, identity, status, witness, time.perf_counter() - t0)
        )
        return out

    def add(self, name, identity, status, witness=""):
        self.checks.append(Check(name, identity, status, witness))

    @property
    def ok(self):
        return all(c.status in (PASS, NOT_APPLICABLE, FINDING) for c in self.checks)

    def to_json(self):
        return {
            "schema": "ybx/1",
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }

    def write(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)

    def summary_lines(self):
        out = [f"== {self.title} =="]
        for c in self.checks:
            line = f"[{c.status:>14}] {c.name}: {c.identity}"
            if c.witness:
                line += f"  ({c.witness})"
            out.append(line)
        out.append(f"overall: {'ok' if self.ok else 'FAILED'}")
        return out
