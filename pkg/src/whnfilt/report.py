from __future__ import annotations

from dataclasses import dataclass, field

MAX_DETAILS = 20


@dataclass
class CheckReport:
    """Pass/fail verdict per named clause, with a bounded list of failure details."""

    clauses: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def declare(self, *names: str) -> None:
        for name in names:
            self.clauses.setdefault(name, True)

    def check(self, clause: str, ok: bool, detail: str = "") -> bool:
        self.clauses.setdefault(clause, True)
        if not ok:
            self.clauses[clause] = False
            if len(self.failures) < MAX_DETAILS:
                self.failures.append(f"{clause}: {detail}" if detail else clause)
        return ok

    def merge(self, other: CheckReport, prefix: str = "") -> None:
        for name, ok in other.clauses.items():
            key = prefix + name
            self.clauses[key] = self.clauses.get(key, True) and ok
        room = MAX_DETAILS - len(self.failures)
        self.failures.extend(prefix + msg for msg in other.failures[:max(room, 0)])

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    def __bool__(self) -> bool:
        return self.ok
