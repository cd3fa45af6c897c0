from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramanujan_traces.exactnum import bernoulli
from ramanujan_traces.partitions import Partition, enumerate_partitions
from ramanujan_traces.qseries import QSeries, substitute_power
from ramanujan_traces.quasimodular import (
    PartitionWeight,
    PhiU,
    PhiV,
    QuasimodularPoly,
    eisenstein,
    expand,
    lambert_a,
    lambert_a_via_s,
    lambert_s,
    partition_eisenstein,
    phi_u,
    phi_v,
    trace,
    verify_ramanujan_odes,
)
from ramanujan_traces.theta import oracle_u, oracle_v

P = Partition.from_parts


def divisor_sum(v, n):
    return sum(d**v for d in range(1, n + 1) if n % d == 0)


def test_eisenstein_examples():
    assert eisenstein(2, 1)[1] == 240
    assert eisenstein(1, 3) == QSeries([1, -24, -72, -96])
    assert eisenstein(3, 1)[1] == -504


def test_eisenstein_against_divisor_oracle():
    for k in range(1, 8):
        E = eisenstein(k, 30)
        c = -Fraction(4 * k) / bernoulli(2 * k)
        assert E[0] == 1
        assert all(E[n] == c * divisor_sum(2 * k - 1, n) for n in range(1, 31))


def test_partition_eisenstein_examples():
    assert partition_eisenstein(Partition(), 5) == QSeries.constant(1, 5)
    for k in range(1, 6):
        assert partition_eisenstein(P([k]), 20) == eisenstein(k, 20)
    assert partition_eisenstein(P([1, 1]), 1) == QSeries([1, -48])


partitions_up_to_6 = st.integers(0, 6).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


@settings(max_examples=40, deadline=None)
@given(partitions_up_to_6, partitions_up_to_6)
def test_partition_eisenstein_multiplicative(lam, mu):
    N = 30
    assert partition_eisenstein(lam + mu, N) == partition_eisenstein(lam, N) * partition_eisenstein(mu, N)


def test_phi_u_examples():
    assert phi_u(P([3])) == Fraction(16, 9)
    assert phi_u(P([2, 1])) == Fraction(-42, 9)
    assert phi_u(P([1, 1, 1])) == Fraction(35, 9)
    assert phi_u(P([1])) == 1
    assert phi_u(Partition()) == 1


def test_phi_v_examples():
    assert phi_v(P([4])) == -272
    assert phi_v(P([3, 1])) == 448
    assert phi_v(P([2, 2])) == 140
    assert phi_v(P([2, 1, 1])) == -420
    assert phi_v(P([1, 1, 1, 1])) == 105
    assert phi_v(P([1])) == 1


@pytest.mark.parametrize("n", range(0, 13))
def test_phi_v_integral(n):
    for lam in enumerate_partitions(n):
        assert phi_v(lam).denominator == 1


def test_trace_examples():
    assert trace(PhiU, 0).terms == {Partition(): 1}
    u6 = trace(PhiU, 3)
    assert u6.terms == {P([3]): Fraction(16, 9), P([2, 1]): Fraction(-42, 9), P([1, 1, 1]): Fraction(35, 9)}
    assert trace(PhiV, 2).terms == {P([2]): -2, P([1, 1]): 3}
    assert u6.weight == 6


def test_expand_examples():
    assert expand(QuasimodularPoly({Partition(): 1}), 4) == QSeries.constant(1, 4)
    assert expand(trace(PhiU, 1), 3) == QSeries([1, -24, -72, -96])
    assert expand(QuasimodularPoly({P([2]): -2, P([1, 1]): 3}), 1) == QSeries([1, -624])


def test_quasimodular_poly_rejects_mixed_weight():
    with pytest.raises(ValueError):
        QuasimodularPoly({P([1]): 1, P([2]): 1})


def test_custom_weight_table():
    # weights supplied as a table; the trace is the plain E_lambda sum
    table = {lam: 1 for lam in enumerate_partitions(3)}
    w = PartitionWeight.from_table("ones", table)
    poly = trace(w, 3)
    E2, E4, E6 = (eisenstein(k, 10) for k in (1, 2, 3))
    assert expand(poly, 10) == E6 + E2 * E4 + E2 * E2 * E2
    with pytest.raises(KeyError):
        w(P([4]))


@pytest.mark.parametrize("t", range(0, 9))
def test_main_theorem_small(t):
    assert expand(trace(PhiU, t), 50) == oracle_u(t, 50)
    assert expand(trace(PhiV, t), 50) == oracle_v(t, 50)


def test_lambert_s_examples():
    assert lambert_s(1, 3) == QSeries([0, 1, 3, 4])
    assert lambert_s(3, 2) == QSeries([0, 1, 9])
    assert lambert_s(1, 50) == (1 - eisenstein(1, 50)) / 24


@pytest.mark.parametrize("j", [1, 3, 5, 7, 9])
def test_lambert_closed_form(j):
    c = bernoulli(j + 1) / (2 * (j + 1))
    assert lambert_s(j, 50) == (1 - eisenstein((j + 1) // 2, 50)) * c


def test_lambert_rejects_even():
    with pytest.raises(ValueError):
        lambert_s(2, 5)
    with pytest.raises(ValueError):
        lambert_a(4, 5)


def test_lambert_a_examples():
    assert lambert_a(1, 3) == QSeries([0, 1, -1, 4])
    assert lambert_a(5, 0) == QSeries([0])


def test_lambert_a_direct_double_sum():
    # oracle: sum_k (-1)^{k-1} k^j q^k / (1 - q^k) expanded term by term
    N = 30
    for j in (1, 3, 5):
        cs = [Fraction(0)] * (N + 1)
        for k in range(1, N + 1):
            for m in range(1, N // k + 1):
                cs[k * m] += (-1) ** (k - 1) * k**j
        assert lambert_a(j, N) == QSeries(cs)


@pytest.mark.parametrize("r", range(1, 6))
def test_lambert_a_via_s(r):
    N = 40
    assert lambert_a(2 * r - 1, N) == lambert_a_via_s(r, N)
    s = lambert_s(2 * r - 1, N)
    assert lambert_a(2 * r - 1, N) == s - substitute_power(lambert_s(2 * r - 1, 20), 2, N) * 4**r


def test_ramanujan_odes():
    low = verify_ramanujan_odes(1)
    assert all(low)
    E2, E4 = eisenstein(1, 1), eisenstein(2, 1)
    assert ((E2 * E2 - E4) / 12)[1] == -24
    assert all(verify_ramanujan_odes(0))
    reports = verify_ramanujan_odes(100)
    assert all(reports) and all(r.compared == 101 for r in reports)
