"""Uniform pass/fail records for the verification suites."""

from __future__ import annotations

from typing import NamedTuple


class Check(NamedTuple):
    """One verified statement: a name plus expected/got strings on failure."""

    name: str
    ok: bool
    expected: str = ""
    got: str = ""

    def line(self) -> str:
        if self.ok:
            return f"ok   {self.name}"
        return f"FAIL {self.name}: expected {self.expected}, got {self.got}"


def check_eq(name: str, expected, got) -> Check:
    """Compare by equality, stringifying both sides for the failure message."""
    return Check(name, expected == got, str(expected), str(got))


def failures(checks: list[Check]) -> list[Check]:
    return [c for c in checks if not c.ok]
