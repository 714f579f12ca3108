"""Verification reports: deterministic per-check records with failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


@dataclass
class Check:
    check_id: str
    anchor: str
    status: str
    witness: str | None = None

    def to_json(self):
        out = {"check": self.check_id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def passed(self, check_id: str, anchor: str) -> None:
        self.checks.append(Check(check_id, anchor, PASS))

    def failed(self, check_id: str, anchor: str, witness: str) -> None:
        self.checks.append(Check(check_id, anchor, FAIL, witness))

    def skipped(self, check_id: str, anchor: str, reason: str = "") -> None:
        self.checks.append(Check(check_id, anchor, SKIP, reason or None))

    def record(self, check_id: str, anchor: str, ok: bool, witness: str = "") -> bool:
        if ok:
            self.passed(check_id, anchor)
        else:
            self.failed(check_id, anchor, witness)
        return ok

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            cid = prefix + c.check_id if prefix else c.check_id
            self.checks.append(Check(cid, c.anchor, c.status, c.witness))
        return self

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def first_failure(self):
        fails = self.failures()
        return fails[0] if fails else None

    def require(self, context: str = "") -> "Report":
        """Raise VerificationError if any check failed."""
        bad = self.first_failure()
        if bad is not None:
            where = context + ": " if context else ""
            raise VerificationError("%s%s [%s] %s" % (where, bad.check_id, bad.anchor, bad.witness or ""))
        return self

    def summary(self) -> str:
        n_pass = sum(1 for c in self.checks if c.status == PASS)
        n_fail = sum(1 for c in self.checks if c.status == FAIL)
        n_skip = sum(1 for c in self.checks if c.status == SKIP)
        return "%d pass, %d fail, %d skipped" % (n_pass, n_fail, n_skip)

    def to_json(self):
        return {"checks": [c.to_json() for c in self.checks], "summary": self.summary(), "ok": self.ok}


class VerificationError(Exception):
    """A structural precondition or asserted identity failed."""


class CapExceeded(Exception):
    """An operation would exceed the configured dimension cap."""


def witness_tuple(tup, lhs, rhs) -> str:
    return "at %r: lhs=%r rhs=%r" % (tup, lhs, rhs)
