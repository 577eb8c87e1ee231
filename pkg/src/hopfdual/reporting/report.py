"""Verification report model shared by every suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar

__all__ = ["Report"]


@dataclass
class Report:
    """Case counts plus the first few failure witnesses of one check run.

    Failures are data here, never exceptions.
    """

    suite: str
    family: str
    params: dict[str, str] = field(default_factory=dict)
    cases_total: int = 0
    cases_failed: int = 0
    witnesses: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    max_witnesses: ClassVar[int] = 5

    @property
    def passed(self) -> bool:
        return self.cases_failed == 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def check(self, ok: bool, witness: str | Callable[[], str]) -> bool:
        """Count one case; the witness is only rendered for failures."""

        self.cases_total += 1
        if not ok:
            self.cases_failed += 1
            if len(self.witnesses) < self.max_witnesses:
                self.witnesses.append(witness() if callable(witness) else witness)
        return ok

    def absorb(self, other: Report, label: str | None = None) -> None:
        """Fold a sub-report into this one, keeping a per-part summary."""

        self.cases_total += other.cases_total
        self.cases_failed += other.cases_failed
        room = self.max_witnesses - len(self.witnesses)
        prefix = f"[{label or other.suite}] "
        self.witnesses.extend(prefix + w for w in other.witnesses[: max(room, 0)])
        parts = self.details.setdefault("parts", [])
        parts.append(
            {
                "part": label or other.suite,
                "status": other.status,
                "cases_total": other.cases_total,
                "cases_failed": other.cases_failed,
                **({"details": other.details} if other.details else {}),
            }
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "family": self.family,
            "params": dict(self.params),
            "status": self.status,
            "cases_total": self.cases_total,
            "cases_failed": self.cases_failed,
            "witnesses": list(self.witnesses),
            "details": self.details,
            "elapsed": round(self.elapsed, 3),
        }
