"""Theta series and the brute-force quotients U_{2t}, V_{2t}, R_{2t}.

These are the independent oracle: everything here is built from direct sums
over n and exact series division, and nothing imports the trace machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .exactnum import CharacterSpec, ParityUndefined, chi_12, chi_minus4
from .qseries import QSeries, d_operator, eta_power, invert, mul
from .reports import CheckReport, compare_series

__all__ = [
    "ThetaSeries",
    "ZeroTheta",
    "ParityUndefined",
    "theta",
    "oracle_u",
    "oracle_v",
    "u_numerator",
    "u_denominator",
    "v_numerator",
    "v_denominator",
    "r_series",
    "verify_classical_identities",
]


class ZeroTheta(ZeroDivisionError):
    """Theta(chi; q) vanishes to the requested order."""


@dataclass(frozen=True)
class ThetaSeries:
    """sum_{n>=1} chi(n) n^{a_chi} q^{n^2} together with the table that produced it."""

    series: QSeries
    character: CharacterSpec
    exponent_rule: str = "n^2"

    @property
    def order(self) -> int:
        return self.series.order


def theta(chi: CharacterSpec, N: int, extra_power: int = 0) -> ThetaSeries:
    """Theta(chi; q) to order N.

    ``extra_power`` multiplies the n-th term by n^extra_power, which gives
    D^t(Theta) for extra_power = 2t.
    """
    if chi.parity is None:
        raise ParityUndefined(f"character {chi.name or chi.values} is neither even nor odd")
    a = chi.a
    cs = [Fraction(0)] * (N + 1)
    for n in range(1, isqrt(N) + 1):
        cs[n * n] = chi(n) * n ** (a + extra_power)
    return ThetaSeries(QSeries(cs), chi, "n^2")


# U: sums over n >= 0 with exponent n(n+1)/2
def u_numerator(t: int, N: int) -> QSeries:
    terms = {}
    n = 0
    while n * (n + 1) // 2 <= N:
        terms[n * (n + 1) // 2] = (-1) ** n * (2 * n + 1) ** (2 * t + 1)
        n += 1
    return QSeries.from_terms(terms, N)


def u_denominator(N: int) -> QSeries:
    return u_numerator(0, N)


def _pentagonal_range(N: int) -> range:
    bound = isqrt(2 * N // 3) + 3
    return range(-bound, bound + 1)


def v_numerator(t: int, N: int) -> QSeries:
    terms: dict[int, int] = {}
    for n in _pentagonal_range(N):
        e = n * (3 * n + 1) // 2
        if e <= N:
            terms[e] = terms.get(e, 0) + (-1) ** (n % 2) * (6 * n + 1) ** (2 * t)
    return QSeries.from_terms(terms, N)


def v_denominator(N: int) -> QSeries:
    return v_numerator(0, N)


@lru_cache(maxsize=None)
def _inverse_u_den(N: int) -> QSeries:
    return invert(u_denominator(N))


@lru_cache(maxsize=None)
def _inverse_v_den(N: int) -> QSeries:
    return invert(v_denominator(N))


@lru_cache(maxsize=256)
def oracle_u(t: int, N: int) -> QSeries:
    """U_{2t} as the quotient sum (-1)^n (2n+1)^{2t+1} q^{n(n+1)/2} / sum (-1)^n (2n+1) q^{n(n+1)/2}."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return mul(u_numerator(t, N), _inverse_u_den(N))


@lru_cache(maxsize=256)
def oracle_v(t: int, N: int) -> QSeries:
    """V_{2t} as the bilateral quotient over n in Z with exponents n(3n+1)/2."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return mul(v_numerator(t, N), _inverse_v_den(N))


def r_series(chi: CharacterSpec, t: int, N: int) -> QSeries:
    """R_{2t}(chi; q) = D^t(Theta) / Theta.

    Both series are divided by q^v, v the valuation of Theta, before inversion,
    so the result is known to order N - v.
    """
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    th = theta(chi, N).series
    v = th.valuation()
    if v is None:
        raise ZeroTheta(f"Theta({chi.name or chi.values}) vanishes to order {N}")
    num = th
    for _ in range(t):
        num = d_operator(num)
    return mul(num.shift_down(v), invert(th.shift_down(v)))


def verify_classical_identities(N: int) -> list[CheckReport]:
    """eta(q^8)^3 = Theta(chi_-4; q) and eta(q^24) = Theta(chi_12; q) to order N."""
    return [
        compare_series(
            "eta(q^8)^3 = Theta(chi_-4)", eta_power(8, 3, N), theta(chi_minus4, N).series, {"N": N}
        ),
        compare_series(
            "eta(q^24) = Theta(chi_12)", eta_power(24, 1, N), theta(chi_12, N).series, {"N": N}
        ),
    ]
