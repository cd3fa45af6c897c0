"""Rewrite partition-Eisenstein combinations in the E_2, E_4, E_6 monomial basis.

Relations E_{2k} = sum c_{a,b} E_4^a E_6^b (k >= 4) are found by solving an
exact linear system on q-coefficients and then checked well past the window
used to solve them.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .quasimodular import PhiU, PhiV, QuasimodularPoly, eisenstein, expand, trace
from .qseries import QSeries

__all__ = [
    "SingularSystem",
    "VerificationFailed",
    "ModularRelation",
    "E246Poly",
    "solve_exact",
    "modular_relation",
    "to_e246",
    "k_table",
    "expand_e246",
]

SAFETY_MARGIN = 5
DEFAULT_VERIFY_ORDER = 60


class SingularSystem(ArithmeticError):
    """The coefficient matrix is rank deficient or the system is inconsistent."""


class VerificationFailed(AssertionError):
    """A derived identity disagrees with direct q-expansion."""


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve an overdetermined but consistent system A x = b over the rationals.

    Gauss-Jordan elimination with row pivoting on the first nonzero entry.
    Raises SingularSystem when A has a nontrivial kernel or b is not in its
    column space.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if aug[i][c]), None)
        if p is None:
            raise SingularSystem(f"column {c} has no pivot; monomials are dependent on this window")
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, m):
        if aug[i][n]:
            raise SingularSystem("overdetermined system is inconsistent")
    return [aug[i][n] for i in range(n)]


@dataclass(frozen=True)
class ModularRelation:
    """E_{2k} as a combination of E_4^a E_6^b with 4a + 6b = 2k."""

    k: int
    combo: Mapping[tuple[int, int], Fraction]

    def __str__(self) -> str:
        poly = E246Poly({(0, a, b): c for (a, b), c in self.combo.items()}, self.k)
        return f"E{2 * self.k} = {render_e246(poly)}"


def _e46_monomials(k: int) -> list[tuple[int, int]]:
    """(a, b) with 4a + 6b = 2k, ordered by increasing a."""
    return sorted((a, b) for b in range(k // 3 + 1) for a in [(2 * k - 6 * b) // 4] if 4 * a + 6 * b == 2 * k)


def _e46_series(a: int, b: int, N: int) -> QSeries:
    return eisenstein(2, N) ** a * eisenstein(3, N) ** b


_relations: dict[tuple[int, int], ModularRelation] = {}
_relations_lock = threading.Lock()


def modular_relation(k: int, Nverify: int = DEFAULT_VERIFY_ORDER, margin: int = SAFETY_MARGIN) -> ModularRelation:
    """Derive E_{2k} in terms of E_4, E_6 and verify it to q-order Nverify."""
    if k < 4:
        raise ValueError(f"relations are only needed for k >= 4, got {k}")
    key = (k, margin)
    with _relations_lock:
        cached = _relations.get(key)
    if cached is None:
        cached = _derive_relation(k, margin)
        with _relations_lock:
            cached = _relations.setdefault(key, cached)
    _verify_relation(cached, Nverify)
    return cached


def _derive_relation(k: int, margin: int) -> ModularRelation:
    monos = _e46_monomials(k)
    if not monos:
        raise SingularSystem(f"no E4/E6 monomials of weight {2 * k}")
    window = len(monos) + margin
    cols = [_e46_series(a, b, window) for a, b in monos]
    target = eisenstein(k, window)
    rows = [[col[i] for col in cols] for i in range(window + 1)]
    sol = solve_exact(rows, [target[i] for i in range(window + 1)])
    return ModularRelation(k, {ab: c for ab, c in zip(monos, sol) if c})


def _verify_relation(rel: ModularRelation, N: int) -> None:
    total = QSeries.zero(N)
    for (a, b), c in rel.combo.items():
        total = total + _e46_series(a, b, N) * c
    diff = total - eisenstein(rel.k, N)
    if not diff.is_zero():
        i = diff.valuation()
        raise VerificationFailed(f"{rel} fails at q^{i}")


class E246Poly:
    """sum K_{l,m,n} E_2^l E_4^m E_6^n with l + 2m + 3n = t for every key."""

    __slots__ = ("terms", "t")

    def __init__(self, terms: Mapping[tuple[int, int, int], object], t: int | None = None) -> None:
        clean = {tuple(key): Fraction(c) for key, c in terms.items() if c}
        ws = {l + 2 * m + 3 * n for (l, m, n) in clean}
        if len(ws) > 1:
            raise ValueError(f"inhomogeneous polynomial: weights {sorted(2 * w for w in ws)}")
        if t is None:
            t = ws.pop() if ws else 0
        elif ws and ws != {t}:
            raise ValueError(f"terms have t = {ws.pop()}, expected {t}")
        self.terms: dict[tuple[int, int, int], Fraction] = dict(sorted(clean.items(), reverse=True))
        self.t = t

    @property
    def weight(self) -> int:
        return 2 * self.t

    def __getitem__(self, key: tuple[int, int, int]) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, E246Poly):
            return self.terms == other.terms
        return NotImplemented

    def __mul__(self, other: "E246Poly") -> "E246Poly":
        out: dict[tuple[int, int, int], Fraction] = {}
        for (l1, m1, n1), c1 in self.terms.items():
            for (l2, m2, n2), c2 in other.terms.items():
                key = (l1 + l2, m1 + m2, n1 + n2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return E246Poly(out, self.t + other.t)

    def __pow__(self, e: int) -> "E246Poly":
        out = E246Poly({(0, 0, 0): 1}, 0)
        for _ in range(e):
            out = out * self
        return out

    def scaled(self, c: Fraction) -> "E246Poly":
        return E246Poly({key: v * c for key, v in self.terms.items()}, self.t)

    def __repr__(self) -> str:
        return f"E246Poly({render_e246(self)})"


def render_e246(p: E246Poly) -> str:
    if not p.terms:
        return "0"
    bits = []
    for (l, m, n), c in p.terms.items():
        factors = [f"E{w}" if e == 1 else f"E{w}^{e}" for w, e in ((2, l), (4, m), (6, n)) if e]
        name = "*".join(factors)
        if not name:
            bits.append(str(c))
        elif c == 1:
            bits.append(name)
        elif c == -1:
            bits.append("-" + name)
        else:
            bits.append(f"{c}*{name}")
    return " + ".join(bits).replace("+ -", "- ")


def expand_e246(p: E246Poly, N: int) -> QSeries:
    total = QSeries.zero(N)
    E2, E4, E6 = eisenstein(1, N), eisenstein(2, N), eisenstein(3, N)
    for (l, m, n), c in p.terms.items():
        total = total + (E2**l) * (E4**m) * (E6**n) * c
    return total


def _part_as_e246(k: int, Nverify: int) -> E246Poly:
    if k == 1:
        return E246Poly({(1, 0, 0): 1}, 1)
    if k == 2:
        return E246Poly({(0, 1, 0): 1}, 2)
    if k == 3:
        return E246Poly({(0, 0, 1): 1}, 3)
    rel = modular_relation(k, Nverify)
    return E246Poly({(0, a, b): c for (a, b), c in rel.combo.items()}, k)


def to_e246(p: QuasimodularPoly, Nverify: int = DEFAULT_VERIFY_ORDER) -> E246Poly:
    """Substitute E_{2k} relations (largest k first) and collect in (l, m, n)."""
    out: dict[tuple[int, int, int], Fraction] = {}
    for lam, c in p.terms.items():
        mono = E246Poly({(0, 0, 0): 1}, 0)
        for k, m in sorted(lam.items(), reverse=True):
            mono = mono * (_part_as_e246(k, Nverify) ** m)
        for key, v in mono.terms.items():
            out[key] = out.get(key, Fraction(0)) + c * v
    result = E246Poly(out, p.t)
    lhs, rhs = expand(p, Nverify), expand_e246(result, Nverify)
    if lhs != rhs:
        raise VerificationFailed(
            f"reduction of weight-{p.weight} form changes the q-expansion at q^{(lhs - rhs).valuation()}"
        )
    return result


def k_table(series: str, t: int, Nverify: int = DEFAULT_VERIFY_ORDER) -> E246Poly:
    """The coefficients K_{l,m,n} of U_{2t} or V_{2t}."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    s = series.upper()
    if s == "U":
        phi = PhiU
    elif s == "V":
        phi = PhiV
    else:
        raise ValueError(f"series must be U or V, got {series!r}")
    return to_e246(trace(phi, t), Nverify)
