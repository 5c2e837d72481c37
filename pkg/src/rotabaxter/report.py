"""Verification reports and the exhaustive (optionally threaded) checker."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .exactfield import QuadExt, to_str
from .monoalg import Monomial, SparsePoly


def _render(value: Any) -> Any:
    if isinstance(value, Monomial):
        return str(value)
    if isinstance(value, SparsePoly):
        return str(value)
    if isinstance(value, QuadExt):
        return to_str(value)
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    if isinstance(value, int):
        return value
    return str(value)


@dataclass(frozen=True)
class Violation:
    """One failed identity: the inputs, which law failed, and both sides."""

    inputs: tuple
    law: str
    lhs: Any
    rhs: Any

    def sort_key(self):
        return (self.inputs, self.law)

    def to_json(self) -> dict:
        return {
            "inputs": _render(self.inputs),
            "law": self.law,
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
        }


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checked_pairs: int
    violations: tuple[Violation, ...]
    subject: str = ""

    @classmethod
    def build(cls, checked: int, violations: Iterable[Violation], subject: str = "") -> "VerificationReport":
        ordered = tuple(sorted(violations, key=Violation.sort_key))
        return cls(not ordered, checked, ordered, subject)

    @property
    def first_violation(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def failing_inputs(self) -> list[tuple]:
        seen, out = set(), []
        for v in self.violations:
            if v.inputs not in seen:
                seen.add(v.inputs)
                out.append(v.inputs)
        return out

    def laws_failed(self) -> list[str]:
        return sorted({v.law for v in self.violations})

    def to_json(self) -> dict:
        first = self.first_violation
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checked_pairs": self.checked_pairs,
            "violation_count": len(self.violations),
            "first_violation": first.to_json() if first else None,
            "violations": [v.to_json() for v in self.violations],
        }


def merge_reports(reports: Sequence[VerificationReport], subject: str = "") -> VerificationReport:
    return VerificationReport.build(
        sum(r.checked_pairs for r in reports),
        [v for r in reports for v in r.violations],
        subject,
    )


def run_checks(items: Sequence, check: Callable[[Any], list[Violation]],
               workers: int = 1, subject: str = "") -> VerificationReport:
    """Apply ``check`` to every item and merge the violations deterministically.

    Items are split into contiguous chunks, one batch per worker; the result
    does not depend on the worker count.
    """
    if workers < 1:
        raise ValueError("worker count must be at least 1")
    items = list(items)
    if workers == 1 or len(items) < 2:
        found = [v for item in items for v in check(item)]
    else:
        size = -(-len(items) // workers)
        chunks = [items[i:i + size] for i in range(0, len(items), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda chunk: [v for item in chunk for v in check(item)], chunks)
            found = [v for part in parts for v in part]
    return VerificationReport.build(len(items), found, subject)
