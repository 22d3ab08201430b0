"""Small pass/fail report values shared by every law-checking routine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class LawCheck:
    law: str
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class CheckReport:
    subject: str
    checks: tuple[LawCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[LawCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def law(self, name: str) -> LawCheck:
        for c in self.checks:
            if c.law == name:
                return c
        raise KeyError(name)

    def __str__(self) -> str:
        lines = [self.subject]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  ({c.counterexample})" if c.counterexample else ""
            lines.append(f"  {c.law}: {status}{extra}")
        return "\n".join(lines)


def law(name: str, passed: bool, counterexample: Optional[str] = None) -> LawCheck:
    return LawCheck(name, passed, None if passed else counterexample)
