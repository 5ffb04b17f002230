"""Upper bounds on A_2(n, D), the largest binary code of length n with distances in D.

Five bounds are provided.  ``theorem1`` and ``theorem2`` are the
polynomial-method dimension counts and hold for any distance set of size
``s``.  ``barg_musin``, ``nozaki_shinohara`` and ``two_distance`` are the
earlier results, each with the applicability gate under which it is stated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .combinatorics import binomial, partition_count
from .core import DistanceSet, InvalidInputError
from .krawtchouk import expand_in_krawtchouk

BOUND_ORDER = ("theorem1", "theorem2", "barg_musin", "nozaki_shinohara", "two_distance")


@dataclass(frozen=True)
class BoundReport:
    name: str
    applicable: bool
    value: Optional[int] = None
    notes: str = ""

    def __post_init__(self):
        if self.name not in BOUND_ORDER:
            raise ValueError(f"unknown bound {self.name!r}")
        if not self.applicable and self.value is not None:
            raise ValueError("an inapplicable bound carries no value")
        if self.applicable and (self.value is None or self.value < 1):
            raise ValueError(f"applicable bound needs a value >= 1, got {self.value}")


def _check_ns(n: int, s: int) -> None:
    if n < 1 or s < 1:
        raise InvalidInputError(f"need n >= 1 and s >= 1, got n={n}, s={s}")
    if s > n:
        raise InvalidInputError(f"a length-{n} code has at most {n} distances, got s={s}")


def bound_theorem1(n: int, s: int) -> int:
    """Dimension of polynomials of degree <= s in n variables, C(n+s, s)."""
    _check_ns(n, s)
    return binomial(n + s, s)


def theorem2_correction(n: int, s: int) -> int:
    """Sum over 0 <= t <= s/2 of C(t+n-1, t) - p(t)."""
    return sum(binomial(t + n - 1, t) - partition_count(t) for t in range(s // 2 + 1))


def bound_theorem2(n: int, s: int) -> int:
    """Theorem-1 count minus the collapse of even monomials onto permutation classes."""
    _check_ns(n, s)
    return binomial(n + s, s) - theorem2_correction(n, s)


def bound_barg_musin(n: int, D: DistanceSet) -> BoundReport:
    D.check_length(n)
    s, total = D.s, sum(D)
    if 2 * total > s * n:
        return BoundReport("barg_musin", False,
                           notes=f"requires sum(d_i) <= s*n/2; sum={total} > {s * n}/2")
    value = sum(binomial(n, i) for i in range(s - 1)) + binomial(n, s)
    return BoundReport("barg_musin", True, value, notes=f"sum(d_i)={total} <= {s * n}/2")


def bound_nozaki_shinohara(n: int, D: DistanceSet) -> BoundReport:
    D.check_length(n)
    expansion = expand_in_krawtchouk(n, D)
    value = sum(binomial(n, k) for k, f in enumerate(expansion.coefficients) if f > 0)
    coeffs = ", ".join(str(f) for f in expansion.coefficients)
    notes = f"signs {expansion.signs()}; f = ({coeffs}); applied with no restriction on D"
    if value == 0:
        # Unreachable: f(0) = 1 = sum f_k C(n, k) forces some f_k > 0.
        return BoundReport("nozaki_shinohara", False, notes=notes + "; no positive f_k")
    return BoundReport("nozaki_shinohara", True, value, notes=notes)


def bound_two_distance(n: int, D: DistanceSet) -> BoundReport:
    D.check_length(n)
    if D.s != 2:
        return BoundReport("two_distance", False, notes=f"needs exactly 2 distances, got {D.s}")
    if n < 6:
        return BoundReport("two_distance", False, notes=f"stated only for n >= 6, got n={n}")
    return BoundReport("two_distance", True, binomial(n, 2) + 1, notes="C(n,2)+1")


@dataclass(frozen=True)
class BestBounds:
    n: int
    distances: DistanceSet
    reports: tuple[BoundReport, ...]
    minimum: int

    def by_name(self) -> dict[str, BoundReport]:
        return {r.name: r for r in self.reports}

    def best_names(self) -> list[str]:
        return [r.name for r in self.reports if r.applicable and r.value == self.minimum]


def best_bounds(n: int, D: DistanceSet) -> BestBounds:
    """All bounds in ``BOUND_ORDER`` plus the minimum over the applicable ones."""
    D.check_length(n)
    s = D.s
    reports = (
        BoundReport("theorem1", True, bound_theorem1(n, s), notes=f"C({n + s},{s})"),
        BoundReport("theorem2", True, bound_theorem2(n, s),
                    notes=f"C({n + s},{s}) - {theorem2_correction(n, s)}"),
        bound_barg_musin(n, D),
        bound_nozaki_shinohara(n, D),
        bound_two_distance(n, D),
    )
    minimum = min(r.value for r in reports if r.applicable)
    return BestBounds(n, D, reports, minimum)
