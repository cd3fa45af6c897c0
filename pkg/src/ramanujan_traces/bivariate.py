"""Series in X with q-series coefficients, and the two-variable identity checks.

Fractional powers of q never appear.  Sums such as sum chi(n) q^{n^2/8} sin(nX)
are built in the variable Q = q^{1/8} (or q^{1/24}), where every exponent is an
integer, then divided by the leading Q and read back in q with ``decimate``.
Infinite products stop at the last factor that can touch q^N.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, isqrt
from typing import Callable, Iterable, Sequence

from .exactnum import CharacterSpec, bernoulli, chi_12, chi_minus4
from .qseries import QSeries, eta_power, invert, mul
from .quasimodular import eisenstein, lambert_a, lambert_s
from .reports import CheckReport
from .theta import ParityUndefined, oracle_u, oracle_v, r_series, theta

__all__ = [
    "XSeries",
    "NonzeroConstant",
    "x_mul",
    "x_exp",
    "trig",
    "sinc",
    "u_generating_function",
    "v_generating_function",
    "compare_x",
    "check_genfun",
    "check_lemma_genfun",
    "check_jacobi_products",
    "check_product_theorem",
    "check_key_identity",
    "check_v_exponential_identities",
]

DEFAULT_XORDER = 9
DEFAULT_QORDER = 30


class NonzeroConstant(ValueError):
    """exp of an X-series whose X^0 coefficient is not zero."""


class XSeries:
    """sum_{k=0}^{M} c_k(q) X^k, every c_k a QSeries of the same order N."""

    __slots__ = ("xcoeffs",)

    def __init__(self, xcoeffs: Sequence[QSeries]) -> None:
        xs = tuple(xcoeffs)
        if not xs:
            raise ValueError("XSeries needs at least the X^0 coefficient")
        orders = {c.order for c in xs}
        if len(orders) != 1:
            raise ValueError(f"coefficients carry different q-orders {sorted(orders)}")
        self.xcoeffs: tuple[QSeries, ...] = xs

    @classmethod
    def zero(cls, M: int, N: int) -> "XSeries":
        z = QSeries.zero(N)
        return cls([z] * (M + 1))

    @classmethod
    def one(cls, M: int, N: int) -> "XSeries":
        return cls.from_terms({(0, 0): 1}, M, N)

    @classmethod
    def from_terms(cls, terms, M: int, N: int) -> "XSeries":
        """From ``{(x_exp, q_exp): coefficient}``; out-of-range terms are dropped."""
        rows: list[dict[int, Fraction]] = [{} for _ in range(M + 1)]
        for (i, j), c in terms.items():
            if i <= M and j <= N and c:
                rows[i][j] = rows[i].get(j, Fraction(0)) + Fraction(c)
        return cls([QSeries.from_terms(r, N) for r in rows])

    @classmethod
    def from_x_coefficients(cls, cs: Sequence, N: int) -> "XSeries":
        """A q-free series with the given rational X-coefficients."""
        return cls([QSeries.constant(c, N) for c in cs])

    @property
    def xorder(self) -> int:
        return len(self.xcoeffs) - 1

    @property
    def qorder(self) -> int:
        return self.xcoeffs[0].order

    def __getitem__(self, k: int) -> QSeries:
        return self.xcoeffs[k]

    def coefficient(self, x_exp: int, q_exp: int) -> Fraction:
        return self.xcoeffs[x_exp][q_exp]

    def __eq__(self, other) -> bool:
        if isinstance(other, XSeries):
            return self.xcoeffs == other.xcoeffs
        return NotImplemented

    def __add__(self, other: "XSeries") -> "XSeries":
        M = min(self.xorder, other.xorder)
        return XSeries([self.xcoeffs[k] + other.xcoeffs[k] for k in range(M + 1)])

    def __neg__(self) -> "XSeries":
        return XSeries([-c for c in self.xcoeffs])

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, XSeries):
            return x_mul(self, other)
        if isinstance(other, QSeries):
            return XSeries([mul(c, other) for c in self.xcoeffs])
        if isinstance(other, (int, Fraction)):
            return XSeries([c * other for c in self.xcoeffs])
        return NotImplemented

    __rmul__ = __mul__

    def map_q(self, fn: Callable[[QSeries], QSeries]) -> "XSeries":
        return XSeries([fn(c) for c in self.xcoeffs])

    def truncate(self, M: int | None = None, N: int | None = None) -> "XSeries":
        M = self.xorder if M is None else M
        N = self.qorder if N is None else N
        return XSeries([c.truncate(N) for c in self.xcoeffs[: M + 1]])

    def __repr__(self) -> str:
        return f"XSeries(xorder={self.xorder}, qorder={self.qorder})"


def x_mul(a: XSeries, b: XSeries) -> XSeries:
    """Cauchy product in X; X- and q-orders both truncate to the smaller operand."""
    M = min(a.xorder, b.xorder)
    N = min(a.qorder, b.qorder)
    out = [QSeries.zero(N)] * (M + 1)
    nz_a = [(i, c) for i, c in enumerate(a.xcoeffs[: M + 1]) if not c.is_zero()]
    nz_b = [(j, c) for j, c in enumerate(b.xcoeffs[: M + 1]) if not c.is_zero()]
    for i, ca in nz_a:
        for j, cb in nz_b:
            if i + j > M:
                break
            out[i + j] = out[i + j] + mul(ca, cb)
    return XSeries([c.truncate(N) for c in out])


def x_exp(a: XSeries) -> XSeries:
    """exp(a) for a with vanishing X^0 coefficient, via k b_k = sum_j j a_j b_{k-j}."""
    if not a.xcoeffs[0].is_zero():
        raise NonzeroConstant("exp needs a zero X^0 coefficient")
    M, N = a.xorder, a.qorder
    b = [QSeries.constant(1, N)]
    nz = [(j, c * j) for j, c in enumerate(a.xcoeffs) if j and not c.is_zero()]
    for k in range(1, M + 1):
        s = QSeries.zero(N)
        for j, ja in nz:
            if j > k:
                break
            if not b[k - j].is_zero():
                s = s + mul(ja, b[k - j])
        b.append(s / k)
    return XSeries(b)


def _trig_coeffs(kind: str, n, M: int) -> list[Fraction]:
    n = Fraction(n)
    cs = [Fraction(0)] * (M + 1)
    start = 1 if kind == "sin" else 0
    if kind not in ("sin", "cos"):
        raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")
    for k in range(start, M + 1, 2):
        sign = -1 if (k // 2) % 2 else 1
        cs[k] = sign * n**k / factorial(k)
    return cs


def trig(kind: str, n: int, M: int, N: int = 0) -> XSeries:
    """Taylor series of sin(nX) or cos(nX) to X^M, as a q-free series of q-order N."""
    if M < 0:
        raise ValueError(f"xorder must be >= 0, got {M}")
    return XSeries.from_x_coefficients(_trig_coeffs(kind, n, M), N)


def sinc(M: int, N: int = 0) -> XSeries:
    """sin(X)/X to X^M."""
    cs = [Fraction(0)] * (M + 1)
    for k in range(0, M + 1, 2):
        cs[k] = Fraction((-1) ** (k // 2), factorial(k + 1))
    return XSeries.from_x_coefficients(cs, N)


# -- generating functions built from the oracles -------------------------------


def u_generating_function(M: int, N: int) -> XSeries:
    """sum_t (-1)^t U_{2t}(q) X^{2t+1} / (2t+1)!, from the theta-quotient oracle."""
    xs = [QSeries.zero(N)] * (M + 1)
    for k in range(1, M + 1, 2):
        t = (k - 1) // 2
        xs[k] = oracle_u(t, N) * Fraction((-1) ** t, factorial(k))
    return XSeries(xs)


def v_generating_function(M: int, N: int) -> XSeries:
    """sum_t (-1)^t V_{2t}(q) X^{2t} / (2t)!, from the theta-quotient oracle."""
    xs = [QSeries.zero(N)] * (M + 1)
    for k in range(0, M + 1, 2):
        t = k // 2
        xs[k] = oracle_v(t, N) * Fraction((-1) ** t, factorial(k))
    return XSeries(xs)


def compare_x(name: str, lhs: XSeries, rhs: XSeries, params: dict) -> CheckReport:
    """Exact comparison at every (X, q) coefficient both sides know."""
    M = min(lhs.xorder, rhs.xorder)
    N = min(lhs.qorder, rhs.qorder)
    for i in range(M + 1):
        a, b = lhs.xcoeffs[i].coeffs, rhs.xcoeffs[i].coeffs
        for j in range(N + 1):
            if a[j] != b[j]:
                return CheckReport(name, False, params, ((i, j), a[j], b[j]), i * (N + 1) + j)
    return CheckReport(name, True, params, None, (M + 1) * (N + 1))


def _bilateral_theta_trig(
    chi: CharacterSpec, kind: str, M: int, order: int, power: int = 0, skip_zero: bool = True
) -> XSeries:
    """sum_{n in Z} chi(n) n^power Q^{n^2} trig(nX) to Q-order ``order``."""
    B = isqrt(order)
    rows: list[dict[int, Fraction]] = [{} for _ in range(M + 1)]
    for n in range(-B, B + 1):
        c = chi(n)
        if not c:
            continue
        if n == 0:
            if skip_zero:
                continue
            raise ZeroDivisionError("n = 0 term with nonzero chi(0) and negative power")
        w = c * Fraction(n) ** power
        for k, t in enumerate(_trig_coeffs(kind, n, M)):
            if t:
                rows[k][n * n] = rows[k].get(n * n, Fraction(0)) + w * t
    return XSeries([QSeries.from_terms(r, order) for r in rows])


def _read_back(xs: XSeries, lead: int, scale: int) -> XSeries:
    """Divide by Q^lead and substitute Q^scale -> q."""
    return xs.map_q(lambda s: s.shift_down(lead).decimate(scale))


def _theta_side_u(M: int, N: int) -> XSeries:
    """(1/(2 eta^3)) sum chi_-4(n) q^{n^2/8} sin(nX), in integral powers of q."""
    big = 8 * N + 1
    num = _bilateral_theta_trig(chi_minus4, "sin", M, big) * Fraction(1, 2)
    eta3 = eta_power(8, 3, big).shift_down(1)
    return _read_back(num, 1, 8).map_q(lambda s: mul(s, invert(eta3.decimate(8))))


def _theta_side_v(M: int, N: int) -> XSeries:
    """(1/(2 eta)) sum chi_12(n) q^{n^2/24} cos(nX), in integral powers of q."""
    big = 24 * N + 1
    num = _bilateral_theta_trig(chi_12, "cos", M, big) * Fraction(1, 2)
    eta1 = eta_power(24, 1, big).shift_down(1)
    return _read_back(num, 1, 24).map_q(lambda s: mul(s, invert(eta1.decimate(24))))


def _check_orders(M: int, N: int) -> None:
    if M < 0 or N < 0:
        raise ValueError(f"orders must be nonnegative, got M={M}, N={N}")


def check_genfun(series: str, M: int = DEFAULT_XORDER, N: int = DEFAULT_QORDER) -> CheckReport:
    """Generating function of U (sine side, eta^3) or V (cosine side, eta) against the oracle."""
    _check_orders(M, N)
    s = series.upper()
    if s == "U":
        lhs, rhs = u_generating_function(M, N), _theta_side_u(M, N)
        name = "sum (-1)^t U_2t X^(2t+1)/(2t+1)! = (1/(2 eta^3)) sum chi_-4(n) q^(n^2/8) sin(nX)"
    elif s == "V":
        lhs, rhs = v_generating_function(M, N), _theta_side_v(M, N)
        name = "sum (-1)^t V_2t X^(2t)/(2t)! = (1/(2 eta)) sum chi_12(n) q^(n^2/24) cos(nX)"
    else:
        raise ValueError(f"series must be U or V, got {series!r}")
    return compare_x(name, lhs, rhs, {"series": s, "M": M, "N": N})


def lemma_generating_function(chi: CharacterSpec, M: int, N: int) -> XSeries:
    """sum_t (-1)^t R_{2t}(chi; q) X^{2t+1} / (2t+1)!, order N - v(Theta)."""
    xs: list[QSeries | None] = [None] * (M + 1)
    for k in range(1, M + 1, 2):
        t = (k - 1) // 2
        xs[k] = r_series(chi, t, N) * Fraction((-1) ** t, factorial(k))
    n_out = next(c for c in xs if c is not None).order if M >= 1 else N
    zero = QSeries.zero(n_out)
    return XSeries([c if c is not None else zero for c in xs])


def check_lemma_genfun(
    chi: CharacterSpec, M: int = DEFAULT_XORDER, N: int = DEFAULT_QORDER
) -> list[CheckReport]:
    """R-series generating function for an arbitrary even or odd periodic table.

    The right side is (1/(2 Theta)) sum_{n in Z, n != 0} chi(n) n^{a-1} q^{n^2} sin(nX),
    i.e. the imaginary part of the complex exponential sum; a second report
    confirms that its real part, the matching cosine sum, vanishes.
    """
    _check_orders(M, N)
    if chi.parity is None:
        raise ParityUndefined(f"character {chi.name or chi.values} is neither even nor odd")
    a = chi.a
    th = theta(chi, N).series
    v = th.valuation()
    label = chi.name or f"period-{chi.period} table"
    params = {"chi": label, "M": max(M, 1), "N": N}
    M = max(M, 1)
    lhs = lemma_generating_function(chi, M, N)
    sin_sum = _bilateral_theta_trig(chi, "sin", M, N, power=a - 1, skip_zero=(a == 1 or not chi(0)))
    cos_sum = _bilateral_theta_trig(chi, "cos", M, N, power=a - 1, skip_zero=(a == 1 or not chi(0)))
    inv = invert(th.shift_down(v))
    rhs = (sin_sum * Fraction(1, 2)).map_q(lambda s: mul(s.shift_down(v), inv))
    real_part = cos_sum.map_q(lambda s: s.shift_down(v))
    return [
        compare_x(f"Lemma generating function for {label}", lhs, rhs, params),
        compare_x(
            f"cosine part vanishes for {label}", real_part, XSeries.zero(M, N - v), params
        ),
    ]


def _product(factors: Iterable[XSeries], start: XSeries) -> XSeries:
    acc = start
    for f in factors:
        acc = x_mul(acc, f)
    return acc


def jacobi_product_side(part: int, M: int, N: int) -> XSeries:
    """Truncated trigonometric products of the two triple-product-type identities."""
    c2 = _trig_coeffs("cos", 2, M)
    if part == 1:
        factors = []
        for j in range(1, N + 1):
            terms = {(0, 0): 1, (0, 2 * j): 1}
            # (1 - q^j) times (1 - 2cos(2X) q^j + q^{2j})
            for k, c in enumerate(c2):
                if c:
                    terms[(k, j)] = terms.get((k, j), 0) - 2 * c
            factors.append(XSeries.from_terms(terms, M, N))
            factors.append(XSeries.from_terms({(0, 0): 1, (0, j): -1}, M, N))
        return _product(factors, trig("sin", 1, M, N))
    if part == 2:
        c4 = _trig_coeffs("cos", 4, M)
        factors = []
        for n in range(1, N + 1):
            factors.append(XSeries.from_terms({(0, 0): 1, (0, n): -1}, M, N))
            terms = {(0, 0): 1, (0, 2 * n): 1}
            for k, c in enumerate(c2):
                if c:
                    terms[(k, n)] = 2 * c
            factors.append(XSeries.from_terms(terms, M, N))
            if 2 * n - 1 <= N:
                terms = {(0, 0): 1, (0, 4 * n - 2): 1}
                for k, c in enumerate(c4):
                    if c:
                        terms[(k, 2 * n - 1)] = -2 * c
                factors.append(XSeries.from_terms(terms, M, N))
        return _product(factors, trig("cos", 1, M, N))
    raise ValueError(f"part must be 1 or 2, got {part}")


def check_jacobi_products(part: int, M: int = DEFAULT_XORDER, N: int = DEFAULT_QORDER) -> CheckReport:
    """Theta-side sum (leading power removed) against the truncated product."""
    _check_orders(M, N)
    if part == 1:
        big = 8 * N + 1
        sums = _bilateral_theta_trig(chi_minus4, "sin", M, big) * Fraction(1, 2)
        lhs = _read_back(sums, 1, 8)
        name = "(q^(-1/8)/2) sum chi_-4(n) q^(n^2/8) sin(nX) = sin X prod (1-q^j)(1-2cos(2X)q^j+q^2j)"
    elif part == 2:
        big = 24 * N + 1
        sums = _bilateral_theta_trig(chi_12, "cos", M, big) * Fraction(1, 2)
        lhs = _read_back(sums, 1, 24)
        name = (
            "(q^(-1/24)/2) sum chi_12(n) q^(n^2/24) cos(nX) = cos X prod (1-q^n)"
            "(1+2cos(2X)q^n+q^2n)(1-2cos(4X)q^(2n-1)+q^(4n-2))"
        )
    else:
        raise ValueError(f"part must be 1 or 2, got {part}")
    rhs = jacobi_product_side(part, M, N)
    return compare_x(name, lhs, rhs, {"part": part, "M": M, "N": N})


def _bracket(sq_trig: XSeries, j: int, sign: int, alternating: bool, M: int, N: int) -> XSeries:
    """1 + sign * 4 sq_trig(X) * q^j / (1 -+ q^j)^2, expanded as sum_m (+-1)^{m-1} m q^{jm}."""
    g = {}
    m = 1
    while j * m <= N:
        g[j * m] = m * ((-1) ** (m - 1) if alternating else 1)
        m += 1
    gq = QSeries.from_terms(g, N)
    body = sq_trig * gq * (4 * sign)
    return XSeries.one(M, N) + body


def product_theorem_side(series: str, M: int, N: int) -> XSeries:
    s1 = trig("sin", 1, M, N)
    sin2 = x_mul(s1, s1)
    if series == "U":
        factors = [_bracket(sin2, j, +1, False, M, N) for j in range(1, N + 1)]
        return _product(factors, s1)
    if series == "V":
        s2 = trig("sin", 2, M, N)
        sin2_2 = x_mul(s2, s2)
        factors = [_bracket(sin2, j, -1, True, M, N) for j in range(1, N + 1)]
        factors += [
            _bracket(sin2_2, 2 * j - 1, +1, False, M, N) for j in range(1, (N + 1) // 2 + 1)
        ]
        return _product(factors, trig("cos", 1, M, N))
    raise ValueError(f"series must be U or V, got {series!r}")


def check_product_theorem(series: str, M: int = DEFAULT_XORDER, N: int = DEFAULT_QORDER) -> CheckReport:
    """Oracle generating function against the bracketed sin^2 products."""
    _check_orders(M, N)
    s = series.upper()
    if s == "U":
        lhs = u_generating_function(M, N)
        name = "sum (-1)^t U_2t X^(2t+1)/(2t+1)! = sin X prod [1 + 4 sin^2X q^j/(1-q^j)^2]"
    elif s == "V":
        lhs = v_generating_function(M, N)
        name = (
            "sum (-1)^t V_2t X^(2t)/(2t)! = cos X prod [1 - 4 sin^2X q^j/(1+q^j)^2]"
            "[1 + 4 sin^2(2X) q^(2j-1)/(1-q^(2j-1))^2]"
        )
    else:
        raise ValueError(f"series must be U or V, got {series!r}")
    return compare_x(name, lhs, product_theorem_side(s, M, N), {"series": s, "M": M, "N": N})


def key_exponential(M: int, N: int) -> XSeries:
    """exp(-2 sum_{r>=1} S_{2r-1}(q) (-4X^2)^r / (2r)!)."""
    terms = [QSeries.zero(N)] * (M + 1)
    for r in range(1, M // 2 + 1):
        terms[2 * r] = lambert_s(2 * r - 1, N) * Fraction(-2 * (-4) ** r, factorial(2 * r))
    return x_exp(XSeries(terms))


def sinc_bernoulli_exponential(M: int, N: int = 0) -> XSeries:
    """exp(-sum_k (-4)^k B_{2k} X^{2k} / ((2k)(2k)!)), which should equal 1/sinc(X)."""
    cs = [Fraction(0)] * (M + 1)
    for k in range(1, M // 2 + 1):
        cs[2 * k] = -Fraction((-4) ** k) * bernoulli(2 * k) / (2 * k * factorial(2 * k))
    return x_exp(XSeries.from_x_coefficients(cs, N))


def check_key_identity(
    M: int = DEFAULT_XORDER, N: int = DEFAULT_QORDER, sinc_order: int = 12
) -> list[CheckReport]:
    """U generating function = sin X * exp(Lambert sum), and the q-free sinc identity."""
    _check_orders(M, N)
    lhs = u_generating_function(M, N)
    rhs = x_mul(trig("sin", 1, M, N), key_exponential(M, N))
    key = compare_x(
        "sum (-1)^t U_2t X^(2t+1)/(2t+1)! = sin X exp(-2 sum S_(2r-1)(q) (-4X^2)^r/(2r)!)",
        lhs,
        rhs,
        {"M": M, "N": N},
    )
    prod = x_mul(sinc_bernoulli_exponential(sinc_order), sinc(sinc_order))
    sinc_report = compare_x(
        "exp(-sum (-4)^k B_2k X^2k/((2k)(2k)!)) * sinc(X) = 1",
        prod,
        XSeries.one(sinc_order, 0),
        {"M": sinc_order},
    )
    return [key, sinc_report]


def check_v_exponential_identities(
    M: int = DEFAULT_XORDER, N: int = DEFAULT_QORDER
) -> list[CheckReport]:
    """The V-side exponential forms: the A-series product and the closing Eisenstein exponential."""
    _check_orders(M, N)
    sin2 = x_mul(trig("sin", 1, M, N), trig("sin", 1, M, N))
    prod = _product((_bracket(sin2, j, -1, True, M, N) for j in range(1, N + 1)), XSeries.one(M, N))
    a_terms = [QSeries.zero(N)] * (M + 1)
    e_terms = [QSeries.zero(N)] * (M + 1)
    for r in range(1, M // 2 + 1):
        a_terms[2 * r] = lambert_a(2 * r - 1, N) * Fraction(2 * (-4) ** r, factorial(2 * r))
        c = (4**r - 1) * bernoulli(2 * r) * Fraction((-4) ** r, 2 * factorial(2 * r) * r)
        e_terms[2 * r] = eisenstein(r, N) * c
    return [
        compare_x(
            "prod [1 - 4 sin^2X q^n/(1+q^n)^2] = exp(2 sum A_(2r-1)(q) (-4X^2)^r/(2r)!)",
            prod,
            x_exp(XSeries(a_terms)),
            {"M": M, "N": N},
        ),
        compare_x(
            "sum (-1)^t V_2t X^2t/(2t)! = exp(sum (4^k-1) B_2k E_2k (-4X^2)^k/(2k (2k)!))",
            v_generating_function(M, N),
            x_exp(XSeries(e_terms)),
            {"M": M, "N": N},
        ),
    ]
