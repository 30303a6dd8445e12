"""Named pass/fail verdicts produced by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .tensorlin import LinearMap, ShapeMismatch


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    witness: tuple[int, int] | None = None
    note: str = ""

    def as_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CheckReport:
    """Ordered verdicts; the report passes iff no verdict failed."""

    verdicts: list[Verdict] = field(default_factory=list)
    seed: int | None = None
    warnings: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def expect_equal(self, name: str, lhs: LinearMap, rhs: LinearMap) -> bool:
        if lhs.shape != rhs.shape:
            raise ShapeMismatch(f"{name}: sides have shapes {lhs.shape} and {rhs.shape}")
        witness = lhs.first_difference(rhs)
        self.verdicts.append(Verdict(name, witness is None, witness))
        return witness is None

    def record(self, name: str, passed: bool, note: str = "") -> bool:
        self.verdicts.append(Verdict(name, bool(passed), None, note))
        return bool(passed)

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for v in other.verdicts:
            self.verdicts.append(Verdict(prefix + v.name, v.passed, v.witness, v.note))
        self.warnings.extend(other.warnings)
        return self

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    @property
    def failed_names(self) -> list[str]:
        return [v.name for v in self.verdicts if not v.passed]

    def __iter__(self) -> Iterator[Verdict]:
        return iter(self.verdicts)

    def __getitem__(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def names(self) -> list[str]:
        return [v.name for v in self.verdicts]

    def as_dict(self) -> dict:
        out = {"passed": self.passed, "verdicts": [v.as_dict() for v in self.verdicts]}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.warnings:
            out["warnings"] = list(self.warnings)
        if self.stats:
            out["stats"] = dict(self.stats)
        return out

    def format(self) -> str:
        lines = []
        for v in self.verdicts:
            mark = "ok  " if v.passed else "FAIL"
            extra = f"  (first difference at {v.witness})" if v.witness else ""
            note = f"  [{v.note}]" if v.note else ""
            lines.append(f"{mark} {v.name}{extra}{note}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        lines.append("PASS" if self.passed else f"FAIL ({len(self.failures)} of {len(self.verdicts)})")
        return "\n".join(lines)
