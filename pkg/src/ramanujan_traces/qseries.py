"""Truncated power series in q with exact rational coefficients.

A :class:`QSeries` of order ``N`` knows the coefficients of q^0..q^N.  Binary
operations truncate to the smaller of the two orders, so precision can only be
lost visibly (through ``order``), never silently.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "QSeries",
    "ZeroConstantTerm",
    "FractionalExponent",
    "add",
    "mul",
    "invert",
    "d_operator",
    "substitute_power",
    "pochhammer_inf",
    "eta_power",
    "eta_product",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ZeroConstantTerm(ZeroDivisionError):
    """Inversion of a series whose constant coefficient vanishes."""


class FractionalExponent(ValueError):
    """An eta quotient whose q-prefactor would have a non-integral exponent."""


class QSeries:
    """Coefficients c_0..c_N of a power series in q, known up to q^N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None) -> None:
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f"order must be >= 0, got {order}")
            if len(cs) > order + 1:
                del cs[order + 1 :]
            else:
                cs.extend([_ZERO] * (order + 1 - len(cs)))
        elif not cs:
            raise ValueError("empty coefficient list needs an explicit order")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "QSeries":
        return cls([c], order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, c=1) -> "QSeries":
        if exponent > order:
            return cls.zero(order)
        cs = [_ZERO] * (order + 1)
        cs[exponent] = Fraction(c)
        return cls._raw(cs)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], order: int) -> "QSeries":
        """Build from ``{exponent: coefficient}``; exponents beyond ``order`` are dropped."""
        cs = [_ZERO] * (order + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e <= order:
                cs[e] += Fraction(c)
        return cls._raw(cs)

    @classmethod
    def _raw(cls, cs: list) -> "QSeries":
        s = cls.__new__(cls)
        s.coeffs = tuple(cs)
        return s

    # -- basic protocol -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError(i)
        if i > self.order:
            raise IndexError(f"coefficient q^{i} is beyond the truncation order {self.order}")
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QSeries({format_series(self)})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return QSeries._raw(list(self.coeffs[: order + 1]))

    def shift_down(self, v: int) -> "QSeries":
        """Divide by q^v; the low coefficients must vanish and the order drops by v."""
        if any(self.coeffs[:v]):
            raise ValueError(f"series is not divisible by q^{v}")
        if v > self.order:
            raise ValueError(f"cannot divide order-{self.order} series by q^{v}")
        return QSeries._raw(list(self.coeffs[v:]))

    def decimate(self, m: int) -> "QSeries":
        """Inverse of ``substitute_power``: read f(q^m) back as f(q).

        Every coefficient at an exponent not divisible by ``m`` must be zero.
        """
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        for i, c in enumerate(self.coeffs):
            if c and i % m:
                raise FractionalExponent(f"nonzero coefficient at q^{i}, not a multiple of {m}")
        return QSeries._raw(list(self.coeffs[::m]))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QSeries):
            return add(self, other)
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += other
            return QSeries._raw(cs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (QSeries, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QSeries.zero(self.order)
            return QSeries._raw([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return mul(self, invert(other))
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return invert(self) ** (-k)
        result = QSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


def add(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    return QSeries._raw([ac[i] + bc[i] for i in range(n + 1)])


def _scaled(cs) -> tuple[int, list[tuple[int, int]]]:
    """Common denominator L and the sparse integer numerators L*c."""
    den = 1
    for c in cs:
        if c:
            d = c.denominator
            if den % d:
                den = den * d // gcd(den, d)
    return den, [(i, c.numerator * (den // c.denominator)) for i, c in enumerate(cs) if c]


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated to min(order(a), order(b))."""
    n = min(a.order, b.order)
    da, sa = _scaled(a.coeffs[: n + 1])
    db, sb = _scaled(b.coeffs[: n + 1])
    if len(sa) > len(sb):
        sa, sb = sb, sa
    # exact integer convolution on a common denominator, normalised once per coefficient
    acc = [0] * (n + 1)
    for i, x in sa:
        lim = n - i
        for j, y in sb:
            if j > lim:
                break
            acc[i + j] += x * y
    den = da * db
    if den == 1:
        return QSeries._raw([Fraction(v) for v in acc])
    return QSeries._raw([Fraction(v, den) for v in acc])


def invert(a: QSeries) -> QSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    a0 = a.coeffs[0]
    if not a0:
        raise ZeroConstantTerm("cannot invert a series with zero constant term")
    n = a.order
    inv0 = 1 / a0
    tail = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    b = [inv0] + [_ZERO] * n
    for k in range(1, n + 1):
        s = _ZERO
        for j, c in tail:
            if j > k:
                break
            s += c * b[k - j]
        b[k] = -s * inv0
    return QSeries._raw(b)


def d_operator(a: QSeries) -> QSeries:
    """Apply q d/dq."""
    return QSeries._raw([i * c for i, c in enumerate(a.coeffs)])


def substitute_power(a: QSeries, m: int, order: int | None = None) -> QSeries:
    """Return a(q^m) truncated at ``order`` (default: m * order(a)).

    Asking for more than m * order(a) + m - 1 would need unknown coefficients.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if order is None:
        order = m * a.order
    if order > m * a.order + m - 1:
        raise ValueError(f"a(q^{m}) is only known to order {m * a.order + m - 1}")
    cs = [_ZERO] * (order + 1)
    for i, c in enumerate(a.coeffs):
        if m * i > order:
            break
        cs[m * i] = c
    return QSeries._raw(cs)


def _times_binomial_factor(cs: list, step: int, k: int) -> None:
    """In place: cs *= (1 - q^step)^k for integer k (negative k divides)."""
    n = len(cs) - 1
    if k >= 0:
        for _ in range(k):
            for i in range(n, step - 1, -1):
                cs[i] -= cs[i - step]
    else:
        for _ in range(-k):
            for i in range(step, n + 1):
                cs[i] += cs[i - step]


def pochhammer_inf(N: int) -> QSeries:
    """(q; q)_infinity = prod_{n>=1} (1 - q^n) to order N."""
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    cs = [1] + [0] * N
    for n in range(1, N + 1):
        _times_binomial_factor(cs, n, 1)
    return QSeries._raw([Fraction(c) for c in cs])


def eta_product(m: int, k: int, N: int) -> QSeries:
    """prod_{n>=1} (1 - q^{mn})^k to order N, without the eta prefactor; any integer k."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    cs = [1] + [0] * N
    for n in range(1, N // m + 1):
        _times_binomial_factor(cs, m * n, k)
    return QSeries._raw([Fraction(c) for c in cs])


def eta_power(m: int, k: int, N: int) -> QSeries:
    """eta(q^m)^k = q^{mk/24} prod_{n>=1} (1 - q^{mn})^k, to order N.

    Negative k gives a pole at q = 0, which a power series cannot hold; use
    :func:`eta_product` for the reciprocal product.
    """
    if (m * k) % 24:
        raise FractionalExponent(f"eta(q^{m})^{k} carries q^({m * k}/24)")
    lead = m * k // 24
    if lead < 0:
        raise ValueError(f"eta(q^{m})^{k} has a pole of order {-lead} at q = 0")
    if lead > N:
        return QSeries.zero(N)
    body = eta_product(m, k, N - lead)
    return QSeries._raw([_ZERO] * lead + list(body.coeffs))


def format_series(s: QSeries, var: str = "q", max_terms: int = 12) -> str:
    parts = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        if len(parts) == max_terms:
            parts.append("...")
            break
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}{'*' + mono if mono else ''}")
    body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
    return f"{body} + O({var}^{s.order + 1})"


def coefficient_list(s: QSeries) -> Sequence[Fraction]:
    return list(s.coeffs)
