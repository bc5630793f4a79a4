from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import rational_lists
from hurwitz.bell import (
    Partition,
    complete_bell,
    compose_egf,
    enumerate_partitions,
    partial_bell,
)
from hurwitz.rings import GaussianRational
from hurwitz.series import HurwitzSeries


# ---- independent oracles -------------------------------------------------

def brute_partitions(n, largest=None):
    """Partitions of n as nonincreasing part lists."""
    if largest is None:
        largest = n
    if n == 0:
        return [[]]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - first, first):
            out.append([first] + rest)
    return out


def to_multiplicities(parts, n):
    js = [0] * n
    for p in parts:
        js[p - 1] += 1
    return tuple(js)


def set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for sub in set_partitions(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


def bell_by_set_partitions(n, k, b):
    """B(n, k) as the sum over set partitions of {1..n} into k blocks."""
    total = 0
    for sp in set_partitions(list(range(n))):
        if len(sp) == k:
            term = 1
            for block in sp:
                term *= b[len(block) - 1]
            total += term
    return total


def bell_by_recurrence(n, k, b):
    """B(n,k) = sum_i C(n-1, i-1) b_i B(n-i, k-1), B(0,0) = 1."""
    table = {(0, 0): 1}
    for m in range(1, n + 1):
        for j in range(1, m + 1):
            table[(m, j)] = sum(
                comb(m - 1, i - 1) * b[i - 1] * table.get((m - i, j - 1), 0)
                for i in range(1, m - j + 2)
            )
    return table[(n, k)]


def compose_by_substitution(f, g):
    """sum_k f_k g**k / k! with truncated Hurwitz products."""
    N = f.order
    one = HurwitzSeries.constant(1, N, f.ring)
    total = HurwitzSeries.constant(f[0], N, f.ring)
    power = one
    for k in range(1, N + 1):
        power = power * g
        total = total + power * f[k] / factorial(k)
    return total


# ---- partitions ------------------------------------------------------------

def test_partition_examples():
    assert [p.multiplicities for p in enumerate_partitions(1)] == [(1,)]
    assert len(enumerate_partitions(5)) == len(brute_partitions(5)) == 7
    assert [p.multiplicities for p in enumerate_partitions(3, parts=2)] == [(1, 1, 0)]


@pytest.mark.parametrize("n", range(1, 21))
def test_partitions_match_brute_force(n):
    got = [p.multiplicities for p in enumerate_partitions(n)]
    expected = {to_multiplicities(ps, n) for ps in brute_partitions(n)}
    assert len(got) == len(expected)
    assert set(got) == expected
    assert got == sorted(got)
    assert all(sum(i * j for i, j in enumerate(v, 1)) == n for v in got)
    by_parts = sum(len(enumerate_partitions(n, k)) for k in range(1, n + 1))
    assert by_parts == len(got)


def test_partition_type():
    p = Partition((1, 0, 1, 0))
    assert p.n == 4 and p.length == 2
    assert p.parts() == [3, 1]
    assert p.coefficient == 4
    with pytest.raises(ValueError):
        Partition((0, 0))


@pytest.mark.parametrize("n, parts", [(0, None), (-1, None), (3, 0), (3, 4)])
def test_partition_rejects(n, parts):
    with pytest.raises(ValueError):
        enumerate_partitions(n, parts)


def test_enumeration_is_repeatable():
    first = enumerate_partitions(12, 4)
    first.pop()
    assert len(enumerate_partitions(12, 4)) == len(first) + 1


# ---- Bell polynomials -------------------------------------------------------

def test_partial_bell_examples():
    assert partial_bell(3, 2, [1, 2, 6]) == 6
    assert partial_bell(4, 1, [1, 1, 1, 1]) == 1
    assert partial_bell(4, 2, [1, 1, 1, 1]) == bell_by_set_partitions(4, 2, [1] * 4) == 7


@pytest.mark.parametrize("n, k", [(0, 1), (3, 0), (3, 4)])
def test_partial_bell_domain(n, k):
    with pytest.raises(ValueError):
        partial_bell(n, k, [1, 1, 1])


def test_partial_bell_needs_enough_values():
    with pytest.raises(ValueError):
        partial_bell(4, 2, [1, 1])


def test_complete_bell_examples():
    assert complete_bell(1, [2], [3]) == 6
    assert complete_bell(2, [1, 2], [1, 1]) == 3
    assert complete_bell(3, [1, 1, 1], [1, 2, 6]) == 13
    with pytest.raises(ValueError):
        complete_bell(0, [], [])


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n), rational_lists(n, n))))
@settings(max_examples=40, deadline=None)
def test_partial_bell_matches_set_partitions(args):
    n, k, b = args
    assert partial_bell(n, k, b) == bell_by_set_partitions(n, k, b)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n), rational_lists(n, n))))
@settings(max_examples=60, deadline=None)
def test_partial_bell_matches_recurrence(args):
    n, k, b = args
    assert partial_bell(n, k, b) == bell_by_recurrence(n, k, b)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(
    st.just(n), rational_lists(n, n), rational_lists(n, n))))
@settings(max_examples=60, deadline=None)
def test_complete_is_sum_of_partials(args):
    n, b, a = args
    assert complete_bell(n, b, a) == sum(partial_bell(n, k, b) * a[k - 1] for k in range(1, n + 1))


@given(st.integers(1, 15).flatmap(lambda n: st.tuples(st.just(n), rational_lists(n, n))))
@settings(max_examples=50, deadline=None)
def test_extreme_partial_bells(args):
    n, b = args
    assert partial_bell(n, n, b) == b[0] ** n
    assert partial_bell(n, 1, b) == b[n - 1]


def test_bell_over_integers_and_gaussians():
    assert partial_bell(5, 2, [1, 1, 1, 1, 1]) == 15  # S(5, 2)
    assert isinstance(partial_bell(5, 2, [1, 1, 1, 1, 1]), int)
    i = GaussianRational(0, 1)
    # B(2,1)(i, i) + B(2,2)(i) = i + i**2
    assert complete_bell(2, [i, i], [1, 1]) == GaussianRational(-1, 1)


# ---- composition ------------------------------------------------------------

def test_compose_identity_and_zero():
    f = HurwitzSeries([3, 1, 4, 1, 5])
    x = HurwitzSeries.variable(4)
    assert compose_egf(f, x) == f
    zero = HurwitzSeries([0] * 5)
    assert compose_egf(f, zero) == HurwitzSeries.constant(3, 4)


def test_compose_gives_bell_numbers():
    exp = HurwitzSeries([1] * 6)
    expm1 = HurwitzSeries([0] + [1] * 5)
    got = compose_egf(exp, expm1)
    assert list(got[1:]) == [1, 2, 5, 15, 52]
    assert got == compose_by_substitution(exp, expm1)


def test_compose_rejects_nonzero_base():
    with pytest.raises(ValueError, match="zero constant term"):
        compose_egf(HurwitzSeries([1, 1]), HurwitzSeries([1, 1]))
    with pytest.raises(ValueError):
        compose_egf(HurwitzSeries([1, 1]), HurwitzSeries([0, 1, 1]))


@given(st.integers(1, 10).flatmap(lambda N: st.tuples(
    rational_lists(N + 1, N + 1), rational_lists(N, N))))
@settings(max_examples=40, deadline=None)
def test_compose_matches_substitution(args):
    fs, gs = args
    f = HurwitzSeries(fs)
    g = HurwitzSeries([0] + gs)
    assert compose_egf(f, g) == compose_by_substitution(f, g)
