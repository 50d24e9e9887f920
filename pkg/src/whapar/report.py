"""Check reports: named axioms, witnesses, skip reasons."""

from dataclasses import dataclass, field
from typing import Any

from .exactlin import fmt_q


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    try:
        return fmt_q(x)
    except (TypeError, ValueError):
        return str(x)


@dataclass
class Failure:
    axiom: str
    witness: tuple
    lhs: Any = None
    rhs: Any = None

    def to_dict(self):
        return {"axiom": self.axiom, "witness": _jsonable(self.witness),
                "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs)}


@dataclass
class Report:
    """Outcome of a family of exact checks.

    ``checked`` lists axiom ids in the order they were first exercised,
    ``failures`` every failing instance (capped per axiom), ``skipped`` maps an
    axiom id to the reason it was not run.
    """

    name: str
    checked: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    skipped: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)
    max_failures_per_axiom: int = 50
    _counts: dict = field(default_factory=dict, repr=False)

    @property
    def ok(self):
        return not self.failures

    def touch(self, axiom):
        if axiom not in self._counts:
            self._counts[axiom] = 0
            self.checked.append(axiom)

    def fail(self, axiom, witness, lhs=None, rhs=None):
        self.touch(axiom)
        self._counts[axiom] += 1
        if self._counts[axiom] <= self.max_failures_per_axiom:
            self.failures.append(Failure(axiom, tuple(witness), lhs, rhs))

    def check(self, axiom, lhs, rhs, witness=()):
        """Record ``lhs == rhs`` under ``axiom``; returns the comparison."""
        self.touch(axiom)
        if lhs == rhs:
            return True
        self.fail(axiom, witness, lhs, rhs)
        return False

    def require(self, axiom, condition, witness=(), detail=None):
        self.touch(axiom)
        if not condition:
            self.fail(axiom, witness, detail, None)
        return bool(condition)

    def skip(self, axiom, reason):
        self.skipped[axiom] = reason

    def failure_count(self, axiom=None):
        if axiom is None:
            return sum(self._counts.values())
        return self._counts.get(axiom, 0)

    def failed_axioms(self):
        return [a for a in self.checked if self._counts.get(a)]

    def passed(self, axiom):
        return axiom in self._counts and not self._counts[axiom]

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    def merge(self, other, prefix=None):
        pre = (prefix + ":") if prefix else ""
        for a in other.checked:
            self.touch(pre + a)
            self._counts[pre + a] += other._counts.get(a, 0)
        for f in other.failures:
            self.failures.append(Failure(pre + f.axiom, f.witness, f.lhs, f.rhs))
        for a, r in other.skipped.items():
            self.skipped[pre + a] = r
        if other.info:
            self.info[other.name if not prefix else prefix] = other.info
        return self

    def summary(self):
        if self.ok:
            status = "pass"
        else:
            status = "FAIL (%s)" % ", ".join(self.failed_axioms())
        extra = ""
        if self.skipped:
            extra = "; skipped: " + ", ".join("%s (%s)" % kv for kv in self.skipped.items())
        return "%s: %s [%d checks]%s" % (self.name, status, len(self.checked), extra)

    def to_dict(self):
        return {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "checked": list(self.checked),
            "failed": self.failed_axioms(),
            "failures": [f.to_dict() for f in self.failures],
            "skipped": dict(self.skipped),
            "info": _jsonable(self.info),
        }
