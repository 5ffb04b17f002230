"""Binary Krawtchouk polynomials and the Krawtchouk expansion of the annihilator.

``phi_k(x) = sum_j (-1)^j C(x, j) C(n - x, k - j)`` is only ever needed at
integer points ``0 <= x <= n``.  The annihilator of a distance set ``D`` is
``f(t) = prod_i (d_i - t) / d_i``; it equals 1 at 0 and vanishes on ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binomial, solve_linear_exact
from .core import DistanceSet, InvalidInputError


def krawtchouk_eval(n: int, k: int, x: int) -> int:
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise InvalidInputError(f"degree k={k} outside [0, {n}]")
    if not 0 <= x <= n:
        raise InvalidInputError(f"point x={x} outside [0, {n}]")
    return sum((-1) ** j * binomial(x, j) * binomial(n - x, k - j) for j in range(k + 1))


def annihilator_eval(D: DistanceSet, t: int) -> Fraction:
    out = Fraction(1)
    for d in D:
        out *= Fraction(d - t, d)
    return out


@dataclass(frozen=True)
class KrawtchoukExpansion:
    n: int
    s: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.s + 1:
            raise ValueError(f"expected {self.s + 1} coefficients, got {len(self.coefficients)}")

    def __call__(self, t: int) -> Fraction:
        return sum((f * krawtchouk_eval(self.n, k, t)
                    for k, f in enumerate(self.coefficients)), Fraction(0))

    def signs(self) -> str:
        return "".join("+" if f > 0 else "-" if f < 0 else "0" for f in self.coefficients)


def interpolation_matrix(n: int, s: int) -> list[list[int]]:
    """Rows indexed by t = 0..s, columns by k = 0..s, entries phi_k(t)."""
    return [[krawtchouk_eval(n, k, t) for k in range(s + 1)] for t in range(s + 1)]


def expand_in_krawtchouk(n: int, D: DistanceSet) -> KrawtchoukExpansion:
    """Coefficients ``f_k`` with ``f = sum_k f_k phi_k``, by exact interpolation at t = 0..s.

    ``phi_k`` has exact degree ``k`` so the interpolation system is
    nonsingular, and two degree-``s`` polynomials agreeing at ``s + 1``
    points agree everywhere.
    """
    D.check_length(n)
    s = D.s
    rhs = [annihilator_eval(D, t) for t in range(s + 1)]
    coeffs = solve_linear_exact(interpolation_matrix(n, s), rhs)
    return KrawtchoukExpansion(n, s, tuple(coeffs))
