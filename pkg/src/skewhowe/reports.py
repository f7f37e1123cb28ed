from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import TheoremCheckFailure


def exact_str(x) -> str:
    """Exact decimal/ratio string for ints and Fractions; never a float."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


@dataclass
class CheckReport:
    """Outcome of one exact verification: one row per checked instance."""

    name: str
    params: dict = field(default_factory=dict)
    rows: list[dict] = field(default_factory=list)

    def add(self, lhs, rhs, **key) -> bool:
        equal = lhs == rhs
        self.rows.append({**key, "lhs": exact_str(lhs), "rhs": exact_str(rhs), "equal": equal})
        return equal

    @property
    def ok(self) -> bool:
        return all(row["equal"] for row in self.rows)

    @property
    def failures(self) -> list[dict]:
        return [row for row in self.rows if not row["equal"]]

    def raise_if_failed(self) -> "CheckReport":
        if not self.ok:
            raise TheoremCheckFailure(f"{self.name} {self.params}: mismatches {self.failures}")
        return self

    def to_dict(self) -> dict:
        return {"check": self.name, "params": self.params, "ok": self.ok, "rows": self.rows}
