"""Exact integer and rational helpers.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Nothing here touches floating point; the sign tests in the
bound computations depend on that.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence


class SingularMatrixError(ArithmeticError):
    pass


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when ``b`` falls outside ``[0, a]``."""
    if a < 0:
        raise ValueError(f"binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def _partition_table(t: int) -> tuple[int, ...]:
    table = [1] + [0] * t
    for part in range(1, t + 1):
        for total in range(part, t + 1):
            table[total] += table[total - part]
    return tuple(table)


def partition_count(t: int) -> int:
    """Number of integer partitions of ``t`` (``p(0) = 1``)."""
    if t < 0:
        raise ValueError(f"partition_count needs t >= 0, got {t}")
    return _partition_table(t)[t]


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(part!) computed as a product of binomials."""
    total, out = 0, 1
    for p in parts:
        total += p
        out *= math.comb(total, p)
    return out


def elementary_symmetric(values: Sequence[Rational], m: int) -> Rational:
    """e_m(values): sum over m-subsets of distinct indices of the product."""
    if m < 0 or m > len(values):
        return 0
    e = [1] + [0] * m
    for v in values:
        for k in range(m, 0, -1):
            e[k] += e[k - 1] * v
    return e[m]


def _height(x: Fraction) -> int:
    return max(abs(x.numerator), x.denominator)


def solve_linear_exact(matrix: Sequence[Sequence[Rational]],
                       rhs: Sequence[Rational]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly by pivoted Gauss-Jordan elimination."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    if len(rhs) != size:
        raise ValueError(f"rhs has length {len(rhs)}, expected {size}")
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        candidates = [r for r in range(col, size) if a[r][col] != 0]
        if not candidates:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        piv = min(candidates, key=lambda r: _height(a[r][col]))
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size] for row in a]


def determinant_exact(matrix: Sequence[Sequence[Rational]]) -> Fraction:
    size = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(size):
        candidates = [r for r in range(col, size) if a[r][col] != 0]
        if not candidates:
            return Fraction(0)
        piv = min(candidates, key=lambda r: _height(a[r][col]))
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _integer_row(row: Sequence[Rational]) -> list[int]:
    dens = [Fraction(x).denominator for x in row if not isinstance(x, int)]
    scale = math.lcm(*dens) if dens else 1
    return [int(x * scale) for x in row]


def rank_exact(matrix: Sequence[Sequence[Rational]]) -> int:
    """Rank over the rationals.

    Each row is scaled to integers (rank-preserving) and reduced
    fraction-free; rows are divided by their content after every step to
    bound entry growth.  Pivots are chosen by smallest magnitude.
    """
    rows = [r for r in (_integer_row(row) for row in matrix) if any(r)]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        if rank == len(rows):
            break
        candidates = [i for i in range(rank, len(rows)) if rows[i][col]]
        if not candidates:
            continue
        piv = min(candidates, key=lambda i: abs(rows[i][col]))
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, len(rows)):
            q = rows[i][col]
            if q:
                g = math.gcd(p, q)
                a, b = p // g, q // g
                new = [a * x - b * y for x, y in zip(rows[i], prow)]
                c = math.gcd(*new)
                rows[i] = [x // c for x in new] if c > 1 else new
        rank += 1
    return rank
