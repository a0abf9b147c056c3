"""Check reports and the exception hierarchy shared by every module."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class SegalkitError(Exception):
    """Base class for all errors raised by segalkit."""


class StructuralError(SegalkitError):
    """Raw input is not even a well-formed semisimplicial set (bad arity, dangling ids)."""

    def __init__(self, message: str, simplex: tuple[int, int] | None = None):
        super().__init__(message)
        self.simplex = simplex


class PreconditionError(SegalkitError):
    """An operation was called on input that does not satisfy its precondition."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class SegalViolation(PreconditionError):
    """A horn that had to have exactly one filler has `count` fillers instead."""

    def __init__(self, horn, count: int, message: str | None = None):
        super().__init__(message or f"horn {horn} has {count} fillers, expected exactly 1", horn)
        self.horn = horn
        self.count = count


@dataclass
class CheckReport:
    """Outcome of a decision procedure.

    ``witness`` locates the first violation and is present iff ``verdict`` is
    false; cross-checks may attach statistics to ``counts`` either way.
    ``law`` names the property that was checked, for traceability in reports.
    """

    verdict: bool
    check_name: str
    witness: Any = None
    counts: dict[str, Any] = field(default_factory=dict)
    law: str = ""
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_name": self.check_name,
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
            "counts": _jsonable(self.counts),
            "law": self.law,
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        status = "PASS" if self.verdict else "FAIL"
        line = f"[{status}] {self.check_name}"
        if self.law:
            line += f" ({self.law})"
        if self.witness is not None:
            line += f"\n  witness: {_jsonable(self.witness)}"
        if self.counts:
            line += "\n  counts: " + ", ".join(f"{k}={v}" for k, v in self.counts.items())
        for note in self.notes:
            line += f"\n  note: {note}"
        return line


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)
