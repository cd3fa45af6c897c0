"""Exact rational helpers: Bernoulli numbers, divisor-power sums, periodic characters.

Rationals are plain :class:`fractions.Fraction` values throughout the package;
``Fraction`` already normalises to lowest terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable

__all__ = [
    "Rational",
    "ParityUndefined",
    "CharacterSpec",
    "bernoulli",
    "sigma",
    "character_value",
    "chi_minus4",
    "chi_12",
]

Rational = Fraction


class ParityUndefined(ValueError):
    """A periodic table is neither even nor odd."""


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    table = [Fraction(1)]
    for m in range(1, n + 1):
        if m >= 3 and m % 2 == 1:
            table.append(Fraction(0))
            continue
        s = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli(k: int) -> Fraction:
    """Return B_k with the convention B_1 = -1/2."""
    if k < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {k}")
    # grow the memo in blocks so repeated small calls share one table
    size = max(32, 1 << (k.bit_length()))
    return _bernoulli_table(size)[k]


def sigma(v: int, n: int) -> int:
    """Sum of the v-th powers of the positive divisors of n."""
    if n <= 0:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**v
            e = n // d
            if e != d:
                total += e**v
        d += 1
    return total


@dataclass(frozen=True)
class CharacterSpec:
    """A periodic function on the integers, stored as its table over one period.

    ``parity`` is ``"even"``, ``"odd"`` or ``None`` (neither).  When omitted it is
    inferred from the table; when given it is checked against the table.
    """

    period: int
    values: tuple[Fraction, ...]
    parity: str | None = None
    name: str = ""

    def __init__(
        self,
        values: Iterable,
        parity: str | None = None,
        name: str = "",
    ) -> None:
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise ValueError("character table must be non-empty")
        inferred = _infer_parity(vals)
        if parity is None:
            parity = inferred
        elif parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
        elif parity != inferred and not (inferred == "even" and not any(vals)):
            raise ParityUndefined(f"table is not {parity}: {vals}")
        object.__setattr__(self, "period", len(vals))
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "name", name)

    def __call__(self, n: int) -> Fraction:
        return self.values[n % self.period]

    @property
    def a(self) -> int:
        """0 for an even table, 1 for an odd one."""
        if self.parity == "even":
            return 0
        if self.parity == "odd":
            return 1
        raise ParityUndefined(f"character {self.name or self.values} has no parity")


def _infer_parity(vals: tuple[Fraction, ...]) -> str | None:
    N = len(vals)
    if all(vals[(-r) % N] == vals[r] for r in range(N)):
        return "even"
    if all(vals[(-r) % N] == -vals[r] for r in range(N)):
        return "odd"
    return None


def character_value(spec: CharacterSpec, n: int) -> Fraction:
    return spec(n)


chi_minus4 = CharacterSpec([0, 1, 0, -1], parity="odd", name="chi_-4")
chi_12 = CharacterSpec([0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1], parity="even", name="chi_12")
