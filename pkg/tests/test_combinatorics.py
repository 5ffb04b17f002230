import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fewdist.combinatorics import (SingularMatrixError, binomial, determinant_exact,
                                   elementary_symmetric, multinomial, partition_count,
                                   rank_exact, solve_linear_exact)


def brute_partitions(t, largest=None):
    """Enumerate partitions of t as non-increasing tuples."""
    if largest is None:
        largest = t
    if t == 0:
        yield ()
        return
    for first in range(min(t, largest), 0, -1):
        for rest in brute_partitions(t - first, first):
            yield (first,) + rest


@pytest.mark.parametrize("a, b, value", [(8, 2, 28), (23, 2, 253), (5, 7, 0), (5, -1, 0), (0, 0, 1)])
def test_binomial(a, b, value):
    assert binomial(a, b) == value


def test_binomial_is_exact_for_large_arguments():
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320


def test_partition_small():
    assert partition_count(0) == 1
    assert partition_count(4) == 5
    assert sorted(brute_partitions(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


def test_partition_20_against_enumeration():
    oracle = sum(1 for _ in brute_partitions(20))
    assert oracle == 627
    assert partition_count(20) == 627


@pytest.mark.parametrize("t", range(26))
def test_partition_matches_enumeration(t):
    assert partition_count(t) == sum(1 for _ in brute_partitions(t))


def test_hockey_stick():
    for n in range(1, 31):
        for s in range(0, 31):
            assert sum(binomial(n + j - 1, j) for j in range(s + 1)) == binomial(n + s, s)


def test_multinomial_and_elementary():
    assert multinomial([2, 0, 2]) == 6
    assert multinomial([]) == 1
    assert elementary_symmetric([1, 2, 3], 2) == 11
    assert elementary_symmetric([1, 2, 3], 0) == 1
    assert elementary_symmetric([1, 2, 3], 4) == 0
    assert elementary_symmetric([Fraction(1, 2), 2], 2) == 1


def test_solve_identity():
    r = [Fraction(1, 3), Fraction(-2), Fraction(5, 7)]
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert solve_linear_exact(eye, r) == r


def test_solve_lower_triangular():
    assert solve_linear_exact([[1, 0], [1, 1]], [1, 3]) == [1, 2]


def test_solve_random_rational_residual_zero():
    rng = random.Random(5)
    solved = 0
    while solved < 20:
        A = [[Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(5)] for _ in range(5)]
        if determinant_exact(A) == 0:
            continue
        b = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(5)]
        x = solve_linear_exact(A, b)
        assert [sum(a * xi for a, xi in zip(row, x)) for row in A] == b
        assert all(isinstance(xi, Fraction) and xi.denominator > 0 for xi in x)
        solved += 1


def test_solve_singular_raises():
    with pytest.raises(SingularMatrixError):
        solve_linear_exact([[1, 2], [2, 4]], [1, 2])


def test_rank_exact():
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([[Fraction(1, 2), 1, 0], [1, 2, 0], [0, 0, Fraction(1, 3)]]) == 2
    assert rank_exact([]) == 0


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_against_determinant_minors(rows):
    # Independent oracle: rank is the largest k with a nonzero k x k minor.
    from itertools import combinations
    oracle = 0
    for k in range(1, min(len(rows), 4) + 1):
        if any(determinant_exact([[rows[i][j] for j in cs] for i in rs]) != 0
               for rs in combinations(range(len(rows)), k)
               for cs in combinations(range(4), k)):
            oracle = k
    assert rank_exact(rows) == oracle
