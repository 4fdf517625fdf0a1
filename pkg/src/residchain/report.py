"""Check reports shared by every validator in the package."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

MAX_WITNESSES_PER_LAW = 5


@dataclass
class Violation:
    law: str
    witness: tuple
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.law}: witness={self.witness!r}"
        return f"{text} ({self.detail})" if self.detail else text


@dataclass
class Report:
    """Outcome of a check suite.

    Every violation is counted; only the first few witnesses per law are kept
    so that a badly broken structure does not produce megabytes of output.
    """

    suite: str
    checked: int = 0
    counts: Counter = field(default_factory=Counter)
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counts

    @property
    def total_violations(self) -> int:
        return sum(self.counts.values())

    def fail(self, law: str, witness: tuple, detail: str = "") -> None:
        self.counts[law] += 1
        if self.counts[law] <= MAX_WITNESSES_PER_LAW:
            self.violations.append(Violation(law, witness, detail))

    def check(self, law: str, holds: bool, witness: tuple, detail: str = "") -> bool:
        self.checked += 1
        if not holds:
            self.fail(law, witness, detail)
        return holds

    def note(self, text: str) -> None:
        self.notes.append(text)

    def violated_laws(self) -> set[str]:
        return set(self.counts)

    def merge(self, other: Report, prefix: str | None = None) -> Report:
        tag = prefix if prefix is not None else other.suite
        self.checked += other.checked
        for law, n in other.counts.items():
            self.counts[f"{tag}/{law}"] += n
        for v in other.violations:
            self.violations.append(Violation(f"{tag}/{v.law}", v.witness, v.detail))
        self.notes.extend(f"{tag}: {n}" for n in other.notes)
        return self

    def summary_line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.suite} {self.total_violations}"

    def format(self) -> str:
        lines = [f"[{self.suite}] {self.checked} checks, {self.total_violations} violations"]
        for law, n in sorted(self.counts.items()):
            lines.append(f"  {law}: {n}")
        lines.extend(f"    - {v}" for v in self.violations)
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.append(self.summary_line())
        return "\n".join(lines)
