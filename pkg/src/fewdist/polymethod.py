"""The polynomials behind the dimension bounds, as concrete objects.

For a word ``v`` and distances ``d_1 < ... < d_s`` define

    P_v(x) = prod_i (d_i - (x, 1) - (v, 1) + 2 (v, x))
           = prod_i (c_i + sum_j sign_j x_j),   c_i = d_i - wt(v),

with ``sign_j = +1`` where ``v_j = 1`` and ``-1`` where ``v_j = 0``.  On a code
whose distances lie in ``D`` the matrix ``[P_u(v)]`` is ``prod(d_i)`` times the
identity, so the ``P_u`` are linearly independent inside the space of
polynomials of degree ``<= s``.

Expanded polynomials are sparse maps from exponent tuples to exact
coefficients.  Because every ``c_i`` and sign is an integer, ``build_P``
produces integer coefficients; evaluation accepts any rationals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational
from typing import Iterator, Sequence

from .combinatorics import binomial, elementary_symmetric, multinomial, rank_exact
from .core import (Code, DistanceSet, InvalidInputError, ResourceLimitError, Word,
                   pairwise_distances, weight)

log = logging.getLogger(__name__)

DEFAULT_SIZE_GUARD = 2_000_000

Exponent = tuple[int, ...]


class PreconditionError(ValueError):
    """A code has a pairwise distance outside the declared distance set."""

    def __init__(self, u: Word, v: Word, d: int, D: DistanceSet):
        self.pair = (u, v)
        self.distance = d
        super().__init__(f"words {u} and {v} are at distance {d}, not in {{{D}}}")


def degree(e: Exponent) -> int:
    return sum(e)


def term_sort_key(e: Exponent) -> tuple:
    """Graded order; within a degree, x_1 before x_2 before ..."""
    return (sum(e), tuple(-a for a in e))


@dataclass
class MultivariatePolynomial:
    n: int
    terms: dict[Exponent, Rational] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {e: c for e, c in self.terms.items() if c != 0}
        for e in self.terms:
            if len(e) != self.n:
                raise InvalidInputError(f"exponent {e} has {len(e)} entries, expected {self.n}")

    @classmethod
    def constant(cls, n: int, c: Rational) -> MultivariatePolynomial:
        return cls(n, {(0,) * n: c})

    def coefficient(self, e: Exponent) -> Rational:
        return self.terms.get(tuple(e), 0)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def times_affine(self, c: Rational, linear: Sequence[Rational]) -> MultivariatePolynomial:
        """Product with ``c + sum_j linear[j] x_j``."""
        out: dict[Exponent, Rational] = {}
        for e, a in self.terms.items():
            if c:
                out[e] = out.get(e, 0) + a * c
            for j, l in enumerate(linear):
                if l:
                    f = e[:j] + (e[j] + 1,) + e[j + 1:]
                    out[f] = out.get(f, 0) + a * l
        return MultivariatePolynomial(self.n, out)

    def __call__(self, x: Sequence[Rational]) -> Rational:
        if len(x) != self.n:
            raise InvalidInputError(f"point has {len(x)} coordinates, expected {self.n}")
        total: Rational = 0
        for e, a in self.terms.items():
            term = a
            for xj, k in zip(x, e):
                if k:
                    term *= xj ** k
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Rational]]:
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))


def _shift_and_signs(v: Word, D: DistanceSet) -> tuple[list[int], list[int]]:
    w = weight(v)
    return [d - w for d in D], [1 if b else -1 for b in v]


def eval_P(v: Word, D: DistanceSet, x: Sequence[Rational]) -> Fraction:
    """Product-form value of ``P_v`` at ``x`` (no expansion)."""
    if len(x) != v.n:
        raise InvalidInputError(f"point has {len(x)} coordinates, word has length {v.n}")
    xs = list(x) if all(isinstance(a, int) for a in x) else [Fraction(a) for a in x]
    sum_x = sum(xs)
    vx = sum(a for a, b in zip(xs, v) if b)
    out = 1
    for d in D:
        out *= d - sum_x - weight(v) + 2 * vx
    return Fraction(out)


def space_dimension(n: int, s: int) -> int:
    """Number of monomials of degree <= s in n variables."""
    return binomial(n + s, s)


def check_guard(n: int, s: int, size_guard: int) -> None:
    need = space_dimension(n, s)
    if need > size_guard:
        raise ResourceLimitError(
            f"expansion needs C({n + s},{s}) = {need} terms, guard is {size_guard}")


def build_P(v: Word, D: DistanceSet, size_guard: int = DEFAULT_SIZE_GUARD) -> MultivariatePolynomial:
    check_guard(v.n, D.s, size_guard)
    shifts, signs = _shift_and_signs(v, D)
    poly = MultivariatePolynomial.constant(v.n, 1)
    for c in shifts:
        poly = poly.times_affine(c, signs)
    return poly


def monomial_basis(n: int, s: int) -> list[Exponent]:
    """All exponent vectors of total degree <= s, in ``term_sort_key`` order."""
    out = []
    for deg in range(s + 1):
        for idx in combinations_with_replacement(range(n), deg):
            e = [0] * n
            for j in idx:
                e[j] += 1
            out.append(tuple(e))
    return out


def check_distances(code: Code, D: DistanceSet) -> None:
    for u, v, d in pairwise_distances(code):
        if d not in D:
            raise PreconditionError(u, v, d, D)


def evaluation_matrix(code: Code, D: DistanceSet) -> list[list[Fraction]]:
    """``M[u][v] = P_u(v)`` over the code in sorted order."""
    check_distances(code, D)
    words = code.sorted()
    return [[eval_P(u, D, list(v)) for v in words] for u in words]


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    rank: int
    size: int
    dimension: int


def coefficient_matrix(code: Code, D: DistanceSet,
                       size_guard: int = DEFAULT_SIZE_GUARD) -> list[list[Rational]]:
    basis = monomial_basis(code.n, D.s)
    rows = []
    for u in code.sorted():
        p = build_P(u, D, size_guard)
        rows.append([p.coefficient(e) for e in basis])
    return rows


def verify_linear_independence(code: Code, D: DistanceSet,
                               size_guard: int = DEFAULT_SIZE_GUARD) -> IndependenceResult:
    check_distances(code, D)
    check_guard(code.n, D.s, size_guard)
    rows = coefficient_matrix(code, D, size_guard)
    rank = rank_exact(rows)
    dim = space_dimension(code.n, D.s)
    assert rank <= dim, f"rank {rank} exceeds dim V = {dim}"
    ok = rank == len(code)
    if not ok:
        log.error("P_u polynomials are dependent: rank %d < |C| = %d (n=%d, D={%s})",
                  rank, len(code), code.n, D)
    return IndependenceResult(ok, rank, len(code), dim)


def even_coefficient_formula(v_weight: int, D: DistanceSet, alpha: Sequence[int]) -> Rational:
    """Coefficient of ``x^(2 alpha)`` in ``P_v`` for any ``v`` of weight ``v_weight``.

    Equals ``multinomial(2t; 2 alpha) * e_{s-2t}(d_1 - w, ..., d_s - w)`` with
    ``t = sum(alpha)``; the signs of ``x_j`` drop out because every power is even.
    """
    if any(a < 0 for a in alpha):
        raise InvalidInputError(f"negative exponent in {tuple(alpha)}")
    t = sum(alpha)
    if 2 * t > D.s:
        raise InvalidInputError(f"2*sum(alpha) = {2 * t} exceeds s = {D.s}")
    shifts = [d - v_weight for d in D]
    return multinomial([2 * a for a in alpha]) * elementary_symmetric(shifts, D.s - 2 * t)


def half_exponents(n: int, s: int) -> Iterator[Exponent]:
    """All ``alpha`` with ``2 * sum(alpha) <= s``."""
    return iter(monomial_basis(n, s // 2))


def symmetrized_even_span_check(v: Word, D: DistanceSet,
                                size_guard: int = DEFAULT_SIZE_GUARD,
                                poly: MultivariatePolynomial | None = None) -> bool:
    """True when all-even monomials that are permutations of each other share a coefficient."""
    if poly is None:
        poly = build_P(v, D, size_guard)
    classes: dict[Exponent, Rational] = {}
    for alpha in half_exponents(v.n, D.s):
        c = poly.coefficient(tuple(2 * a for a in alpha))
        key = tuple(sorted(alpha))
        if classes.setdefault(key, c) != c:
            return False
    return True


def even_formula_agreement(v: Word, D: DistanceSet,
                           size_guard: int = DEFAULT_SIZE_GUARD,
                           poly: MultivariatePolynomial | None = None) -> list[Exponent]:
    """Even exponents where the expansion disagrees with ``even_coefficient_formula``."""
    if poly is None:
        poly = build_P(v, D, size_guard)
    w = weight(v)
    bad = []
    for alpha in half_exponents(v.n, D.s):
        e = tuple(2 * a for a in alpha)
        if poly.coefficient(e) != even_coefficient_formula(w, D, alpha):
            bad.append(e)
    return bad
