"""Check reports shared by the scalar self-check and the finite-model checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]
    explanation: str = ""

    def format(self) -> str:
        text = f"{self.axiom}: ({', '.join(self.witness)})"
        if self.explanation:
            text += f" {self.explanation}"
        return text


@dataclass
class CheckReport:
    """Ordered list of violations; an empty report means every check passed."""

    violations: list[Violation] = field(default_factory=list)
    # checks that could not run because a prerequisite (e.g. an identity) is missing
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def axioms(self) -> list[str]:
        """Distinct violated identifiers, in report order."""
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def for_axiom(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def witnesses(self, axiom: str | None = None) -> list[tuple[str, ...]]:
        """Witness tuples, optionally only those of one axiom."""
        return [v.witness for v in self.violations if axiom is None or v.axiom == axiom]

    def extend(self, other: CheckReport) -> None:
        self.violations.extend(other.violations)
        self.skipped.extend(other.skipped)

    def format(self, limit: int | None = None) -> list[str]:
        """Render one line per violation, at most ``limit`` per identifier."""
        lines = []
        for axiom in self.axioms():
            group = self.for_axiom(axiom)
            shown = group if limit is None else group[:limit]
            lines.extend(v.format() for v in shown)
            if len(group) > len(shown):
                lines.append(f"{axiom}: ... {len(group) - len(shown)} more")
        return lines
