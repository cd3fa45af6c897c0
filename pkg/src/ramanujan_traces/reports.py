"""Outcome records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class CheckReport:
    """Result of comparing two exact expansions coefficient by coefficient.

    ``mismatch`` holds the first differing coefficient as
    ``(location, lhs, rhs)``; location is ``(q_exp,)`` or ``(x_exp, q_exp)``.
    """

    name: str
    passed: bool
    params: dict[str, Any] = field(default_factory=dict)
    mismatch: tuple[tuple[int, ...], Fraction, Fraction] | None = None
    compared: int = 0

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        orders = ", ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  [{orders}]"
        if self.mismatch is not None:
            loc, lhs, rhs = self.mismatch
            line += f"  first mismatch at {loc}: {lhs} != {rhs}"
        return line

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "params": dict(self.params),
            "coefficients_compared": self.compared,
        }
        if self.mismatch is not None:
            loc, lhs, rhs = self.mismatch
            out["first_mismatch"] = {"at": list(loc), "lhs": str(lhs), "rhs": str(rhs)}
        return out


def compare_series(name: str, lhs, rhs, params: dict[str, Any] | None = None) -> CheckReport:
    """Compare two QSeries up to the smaller order."""
    n = min(lhs.order, rhs.order)
    for i in range(n + 1):
        if lhs.coeffs[i] != rhs.coeffs[i]:
            return CheckReport(name, False, params or {}, ((i,), lhs.coeffs[i], rhs.coeffs[i]), i)
    return CheckReport(name, True, params or {}, None, n + 1)
