from fractions import Fraction
from math import factorial

import pytest

from ramanujan_traces.partitions import (
    Partition,
    cycle_index,
    enumerate_partitions,
    partition_count,
    z_stat,
)


def brute_partitions(n, largest=None):
    # oracle: recursive nonincreasing sequences
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    return [(k,) + rest for k in range(min(n, largest), 0, -1) for rest in brute_partitions(n - k, k)]


def test_enumerate_small():
    assert enumerate_partitions(0) == [Partition()]
    four = enumerate_partitions(4)
    assert four == [
        Partition.from_dict({4: 1}),
        Partition.from_dict({1: 1, 3: 1}),
        Partition.from_dict({2: 2}),
        Partition.from_dict({1: 2, 2: 1}),
        Partition.from_dict({1: 4}),
    ]
    assert len(enumerate_partitions(5)) == len(brute_partitions(5)) == 7


def test_enumerate_unique_and_valid():
    for n in range(0, 16):
        ps = enumerate_partitions(n)
        assert len(set(ps)) == len(ps)
        assert all(p.n == n for p in ps)
        assert sorted(p.parts for p in ps) == sorted(brute_partitions(n))


def test_counts_match_pentagonal_recurrence():
    for n in range(0, 41):
        assert len(enumerate_partitions(n)) == partition_count(n)


def test_partition_count_against_generating_function():
    # 1 / (q;q)_inf by direct geometric expansion
    N = 40
    cs = [1] + [0] * N
    for k in range(1, N + 1):
        for i in range(k, N + 1):
            cs[i] += cs[i - k]
    assert [partition_count(n) for n in range(N + 1)] == cs


def test_partition_value_semantics():
    a = Partition([2, 1, 0, 0])
    b = Partition.from_parts([2, 1, 1])
    assert a == b and hash(a) == hash(b)
    assert a.parts == (2, 1, 1)
    assert a.n == 4 and len(a) == 3
    assert a + Partition.from_parts([3]) == Partition.from_parts([3, 2, 1, 1])
    assert str(a) == "(1^2, 2)"
    with pytest.raises(ValueError):
        Partition([1, -1])


@pytest.mark.parametrize(
    "lam,z", [(Partition.from_parts([1, 1, 1]), 6), (Partition.from_parts([3]), 3), (Partition(), 1)]
)
def test_z_stat_examples(lam, z):
    assert z_stat(lam) == z


def test_cycle_index_examples():
    p = Partition.from_parts
    assert cycle_index(3) == {p([1, 1, 1]): Fraction(1, 6), p([2, 1]): Fraction(1, 2), p([3]): Fraction(1, 3)}
    assert cycle_index(0) == {Partition(): 1}
    assert cycle_index(2) == {p([1, 1]): Fraction(1, 2), p([2]): Fraction(1, 2)}


def count_cycle_types(t):
    # oracle: tally cycle types over all permutations of S_t
    from itertools import permutations

    counts = {}
    for perm in permutations(range(t)):
        seen, parts = set(), []
        for s in range(t):
            if s in seen:
                continue
            length, x = 0, s
            while x not in seen:
                seen.add(x)
                x = perm[x]
                length += 1
            parts.append(length)
        key = Partition.from_parts(parts)
        counts[key] = counts.get(key, 0) + 1
    return counts


@pytest.mark.parametrize("t", range(0, 13))
def test_cycle_index_group_order(t):
    assert sum(factorial(t) * c for c in cycle_index(t).values()) == factorial(t)


def test_cycle_index_counts_permutations():
    for t in range(0, 7):
        counts = count_cycle_types(t)
        for lam, c in cycle_index(t).items():
            assert c * factorial(t) == counts[lam]


def _exp_series(f, order):
    # exp of a univariate rational series with f[0] = 0, via k b_k = sum j f_j b_{k-j}
    b = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        b[k] = sum(j * f[j] * b[k - j] for j in range(1, k + 1)) / k
    return b


@pytest.mark.parametrize("seed", range(5))
def test_cycle_index_generating_function(seed):
    # sum_t Z(S_t) y^t = exp(sum_k x_k y^k / k), with x_k set to rational values
    order = 10
    xs = {k: Fraction((seed + 2) * k % 7 - 3, k % 3 + 1) for k in range(1, order + 1)}
    f = [Fraction(0)] + [xs[k] / k for k in range(1, order + 1)]
    rhs = _exp_series(f, order)
    for t in range(order + 1):
        lhs = Fraction(0)
        for lam, c in cycle_index(t).items():
            term = c
            for part in lam.parts:
                term *= xs[part]
            lhs += term
        assert lhs == rhs[t]
