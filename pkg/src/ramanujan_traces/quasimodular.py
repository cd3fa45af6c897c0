"""Eisenstein series, partition Eisenstein series and their weighted traces.

A partition lambda = (1^{m_1}, ..., n^{m_n}) stands for the monomial
E_lambda = E_2^{m_1} E_4^{m_2} ... E_{2n}^{m_n}; part k always means E_{2k}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping

from .exactnum import bernoulli, sigma
from .partitions import Partition, enumerate_partitions
from .qseries import QSeries, d_operator, substitute_power
from .reports import CheckReport, compare_series

__all__ = [
    "QuasimodularPoly",
    "PartitionWeight",
    "PhiU",
    "PhiV",
    "eisenstein",
    "partition_eisenstein",
    "phi_u",
    "phi_v",
    "trace",
    "expand",
    "lambert_s",
    "lambert_a",
    "verify_ramanujan_odes",
]


@lru_cache(maxsize=None)
def _eisenstein(k: int, N: int) -> QSeries:
    c = Fraction(-4 * k) / bernoulli(2 * k)
    return QSeries([1] + [c * sigma(2 * k - 1, n) for n in range(1, N + 1)])


def eisenstein(k: int, N: int) -> QSeries:
    """E_{2k} = 1 - (4k / B_{2k}) sum_{n>=1} sigma_{2k-1}(n) q^n to order N."""
    if k < 1:
        raise ValueError(f"Eisenstein index k must be >= 1, got {k}")
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    return _eisenstein(k, N)


@lru_cache(maxsize=4096)
def _partition_eisenstein(lam: Partition, N: int) -> QSeries:
    if len(lam) == 0:
        return QSeries.constant(1, N)
    # peel off one part so products of shared prefixes hit the cache
    k = lam.parts[-1]
    ms = list(lam.multiplicities)
    ms[k - 1] -= 1
    return _partition_eisenstein(Partition(ms), N) * _eisenstein(k, N)


def partition_eisenstein(lam: Partition, N: int) -> QSeries:
    """E_lambda = prod_k E_{2k}^{m_k} to order N."""
    return _partition_eisenstein(lam, N)


def phi_u(lam: Partition) -> Fraction:
    """4^n (2n+1)! prod_k (1/m_k!) (B_{2k} / ((2k)(2k)!))^{m_k}."""
    n = lam.n
    value = Fraction(4**n * factorial(2 * n + 1))
    for k, m in lam.items():
        value *= (bernoulli(2 * k) / (2 * k * factorial(2 * k))) ** m / factorial(m)
    return value


def phi_v(lam: Partition) -> Fraction:
    """4^n (2n)! prod_k (1/m_k!) ((4^k - 1) B_{2k} / ((2k)(2k)!))^{m_k}."""
    n = lam.n
    value = Fraction(4**n * factorial(2 * n))
    for k, m in lam.items():
        value *= ((4**k - 1) * bernoulli(2 * k) / (2 * k * factorial(2 * k))) ** m / factorial(m)
    return value


@dataclass(frozen=True)
class PartitionWeight:
    """A named rule lambda -> rational used to weight a partition trace.

    ``table`` entries, when present, override ``rule``; a weight built from a
    table alone raises KeyError for partitions it does not list.
    """

    name: str
    rule: Callable[[Partition], Fraction] | None = None
    table: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __call__(self, lam: Partition) -> Fraction:
        if lam in self.table:
            return Fraction(self.table[lam])
        if self.rule is None:
            raise KeyError(f"weight {self.name!r} has no value for {lam}")
        return Fraction(self.rule(lam))

    @classmethod
    def from_table(cls, name: str, table: Mapping[Partition, object]) -> "PartitionWeight":
        return cls(name, None, {lam: Fraction(v) for lam, v in table.items()})


PhiU = PartitionWeight("phi_U", phi_u)
PhiV = PartitionWeight("phi_V", phi_v)


class QuasimodularPoly:
    """Rational combination of partition Eisenstein monomials, all of one weight."""

    __slots__ = ("terms", "t")

    def __init__(self, terms: Mapping[Partition, object], t: int | None = None) -> None:
        clean = {lam: Fraction(c) for lam, c in terms.items() if c}
        sizes = {lam.n for lam in clean}
        if len(sizes) > 1:
            raise ValueError(f"mixed weights in quasimodular polynomial: {sorted(sizes)}")
        if t is None:
            t = sizes.pop() if sizes else 0
        elif sizes and sizes != {t}:
            raise ValueError(f"terms have size {sizes.pop()}, expected {t}")
        self.terms: dict[Partition, Fraction] = dict(sorted(clean.items()))
        self.t = t

    @property
    def weight(self) -> int:
        return 2 * self.t

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, QuasimodularPoly):
            return self.terms == other.terms and (self.t == other.t or not self.terms)
        return NotImplemented

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"QuasimodularPoly({render_poly(self)})"


def trace(phi: Callable[[Partition], object], t: int) -> QuasimodularPoly:
    """sum_{lambda |- t} phi(lambda) E_lambda as a symbolic combination."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return QuasimodularPoly({lam: phi(lam) for lam in enumerate_partitions(t)}, t)


def expand(p: QuasimodularPoly, N: int) -> QSeries:
    """q-expansion of a quasimodular polynomial to order N."""
    total = QSeries.zero(N)
    if not p.terms:
        return total
    for lam, c in p.terms.items():
        total = total + partition_eisenstein(lam, N) * c
    return total


def _monomial_name(lam: Partition) -> str:
    if len(lam) == 0:
        return "1"
    return "*".join(f"E{2 * k}" if m == 1 else f"E{2 * k}^{m}" for k, m in lam.items())


def render_poly(p: QuasimodularPoly) -> str:
    if not p.terms:
        return "0"
    bits = []
    for lam, c in sorted(p.terms.items(), key=lambda kv: kv[0].sort_key()):
        name = _monomial_name(lam)
        if name == "1":
            bits.append(str(c))
        elif c == 1:
            bits.append(name)
        elif c == -1:
            bits.append("-" + name)
        else:
            bits.append(f"{c}*{name}")
    return " + ".join(bits).replace("+ -", "- ")


def lambert_s(j: int, N: int) -> QSeries:
    """S_j = sum_{m>=1} m^j q^m / (1 - q^m), coefficientwise sigma_j(n)."""
    if j < 1 or j % 2 == 0:
        raise ValueError(f"j must be a positive odd integer, got {j}")
    return QSeries([0] + [sigma(j, n) for n in range(1, N + 1)])


def lambert_a(j: int, N: int) -> QSeries:
    """A_j = sum_{k>=1} (-1)^{k-1} k^j q^k / (1 - q^k) to order N."""
    if j < 1 or j % 2 == 0:
        raise ValueError(f"j must be a positive odd integer, got {j}")
    cs = [0] * (N + 1)
    for k in range(1, N + 1):
        term = k**j if k % 2 else -(k**j)
        for e in range(k, N + 1, k):
            cs[e] += term
    return QSeries(cs)


def lambert_a_via_s(r: int, N: int) -> QSeries:
    """S_{2r-1}(q) - 4^r S_{2r-1}(q^2)."""
    s = lambert_s(2 * r - 1, N)
    return s - substitute_power(lambert_s(2 * r - 1, N // 2 if N else 0), 2, N) * 4**r


def verify_ramanujan_odes(N: int) -> list[CheckReport]:
    """Check D(E2), D(E4), D(E6) against Ramanujan's quadratic expressions to order N."""
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    E2, E4, E6 = eisenstein(1, N), eisenstein(2, N), eisenstein(3, N)
    pairs = [
        ("D(E2) = (E2^2 - E4)/12", d_operator(E2), (E2 * E2 - E4) / 12),
        ("D(E4) = (E2*E4 - E6)/3", d_operator(E4), (E2 * E4 - E6) / 3),
        ("D(E6) = (E2*E6 - E4^2)/2", d_operator(E6), (E2 * E6 - E4 * E4) / 2),
    ]
    return [compare_series(name, lhs, rhs, {"N": N}) for name, lhs, rhs in pairs]
