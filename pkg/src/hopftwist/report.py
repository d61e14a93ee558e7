"""Verdicts with basis-level witnesses.

Every identity is checked as an equality of two LinMaps.  When they differ,
the witness is the lexicographically first domain basis tuple on which they
disagree, together with both images and the total number of disagreeing
tuples.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .linmap import LinMap, unravel


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple
    lhs: dict
    rhs: dict
    count: int = 1

    def to_dict(self, F=None):
        def fmt(vec):
            return {str(k): (F.format(v) if F is not None else str(v)) for k, v in sorted(vec.items())}
        return {"axiom": self.axiom, "witness": list(self.witness),
                "lhs": fmt(self.lhs), "rhs": fmt(self.rhs), "count": self.count}


@dataclass
class Report:
    name: str
    checked: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def __bool__(self):
        return self.ok

    def failed(self, axiom):
        return next((f for f in self.failures if f.axiom == axiom), None)

    def failed_axioms(self):
        return [f.axiom for f in self.failures]

    def extend(self, other: "Report"):
        self.checked.extend(other.checked)
        self.failures.extend(other.failures)
        return self

    def to_dict(self, F=None):
        return {"name": self.name, "verdict": self.verdict, "checked": list(self.checked),
                "failures": [f.to_dict(F) for f in self.failures]}

    def summary(self) -> str:
        lines = [f"{self.name}: {self.verdict.upper()} ({len(self.checked)} identities)"]
        for f in self.failures:
            lines.append(f"  FAIL {f.axiom} at basis tuple {f.witness} ({f.count} tuples differ)")
        return "\n".join(lines)


def compare(axiom: str, lhs: LinMap, rhs: LinMap):
    """None if lhs == rhs entrywise, else the first-witness :class:`Failure`."""
    if lhs == rhs:
        return None
    diff = lhs - rhs
    bad = diff.nonzero_columns()
    j = bad[0]
    return Failure(axiom, unravel(j, lhs.dom), lhs.column(j), rhs.column(j), len(bad))


def check_identities(name: str, identities, jobs: int = 1) -> Report:
    """Run ``(axiom, thunk)`` pairs; each thunk returns ``(lhs, rhs)``.

    With ``jobs > 1`` the identities are evaluated on a thread pool; results
    are always collected in the given order so reports stay deterministic.
    """
    identities = list(identities)

    def run(item):
        axiom, thunk = item
        lhs, rhs = thunk()
        return compare(axiom, lhs, rhs)

    if jobs > 1 and len(identities) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run, identities))
    else:
        results = [run(item) for item in identities]
    rep = Report(name, [a for a, _ in identities])
    rep.failures = [r for r in results if r is not None]
    return rep


_JOBS = 1


def set_jobs(n: int):
    """Worker count used by checkers that do not receive one explicitly."""
    global _JOBS
    _JOBS = max(1, int(n))


def default_jobs() -> int:
    return _JOBS
