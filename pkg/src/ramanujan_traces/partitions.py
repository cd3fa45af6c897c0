"""Integer partitions in multiplicity form, z_lambda and symmetric-group cycle indices."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

__all__ = ["Partition", "enumerate_partitions", "z_stat", "cycle_index", "partition_count"]


class Partition:
    """A partition (1^{m_1}, 2^{m_2}, ..., n^{m_n}) stored by multiplicities.

    Trailing zero multiplicities are stripped, so equal partitions compare and
    hash equal regardless of how they were built.
    """

    __slots__ = ("multiplicities",)

    def __init__(self, multiplicities: Iterable[int] = ()) -> None:
        ms = [int(m) for m in multiplicities]
        if any(m < 0 for m in ms):
            raise ValueError(f"negative multiplicity in {ms}")
        while ms and ms[-1] == 0:
            ms.pop()
        self.multiplicities: tuple[int, ...] = tuple(ms)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        parts = list(parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        ms = [0] * (max(parts, default=0))
        for p in parts:
            ms[p - 1] += 1
        return cls(ms)

    @classmethod
    def from_dict(cls, mult: dict[int, int]) -> "Partition":
        """From ``{part: multiplicity}``, e.g. ``{1: 2, 2: 1}`` for (1^2, 2)."""
        ms = [0] * max(mult, default=0)
        for k, m in mult.items():
            if k <= 0:
                raise ValueError(f"parts must be positive: {k}")
            ms[k - 1] = m
        return cls(ms)

    @property
    def n(self) -> int:
        return sum((k + 1) * m for k, m in enumerate(self.multiplicities))

    @property
    def parts(self) -> tuple[int, ...]:
        """Nonincreasing sequence form (lambda_1, ..., lambda_s)."""
        out: list[int] = []
        for k in range(len(self.multiplicities), 0, -1):
            out.extend([k] * self.multiplicities[k - 1])
        return tuple(out)

    def __len__(self) -> int:
        return sum(self.multiplicities)

    def multiplicity(self, k: int) -> int:
        return self.multiplicities[k - 1] if 0 < k <= len(self.multiplicities) else 0

    def items(self) -> Iterable[tuple[int, int]]:
        """(part, multiplicity) pairs with nonzero multiplicity, smallest part first."""
        return ((k + 1, m) for k, m in enumerate(self.multiplicities) if m)

    def __add__(self, other: "Partition") -> "Partition":
        a, b = self.multiplicities, other.multiplicities
        size = max(len(a), len(b))
        return Partition(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.multiplicities == other.multiplicities
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.multiplicities)

    def sort_key(self) -> tuple[int, ...]:
        """Canonical order: largest part first, then lexicographic on the parts."""
        return tuple(-p for p in self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return (self.n, self.sort_key()) < (other.n, other.sort_key())

    def __repr__(self) -> str:
        return f"Partition({self})"

    def __str__(self) -> str:
        if not self.multiplicities:
            return "()"
        bits = [str(k) if m == 1 else f"{k}^{m}" for k, m in self.items()]
        return "(" + ", ".join(bits) + ")"


def _parts_desc(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Partition, ...]:
    return tuple(Partition.from_parts(p) for p in _parts_desc(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, each once.

    Order: reverse-lexicographic on the nonincreasing part sequence, so (n)
    comes first and (1^n) last; for n = 4 this is (4), (1,3), (2^2), (1^2,2), (1^4).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return list(_enumerate(n))


def z_stat(lam: Partition) -> int:
    """prod_k k^{m_k} m_k!, the centraliser order of a permutation of cycle type lam."""
    z = 1
    for k, m in lam.items():
        z *= k**m * factorial(m)
    return z


def cycle_index(t: int) -> dict[Partition, Fraction]:
    """Coefficients 1/z_lambda of the cycle index Z(S_t), keyed by cycle type."""
    return {lam: Fraction(1, z_stat(lam)) for lam in enumerate_partitions(t)}


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; independent of the enumerator."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total
