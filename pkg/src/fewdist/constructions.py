"""Extremal few-distance codes.

* all words of weight ``s`` (optionally with the zero word when ``s`` is
  even): an ``s``-distance code with distances ``2, 4, ..., 2s`` once
  ``n >= 2s``;
* the 253 weight-7 words of the binary Golay code, i.e. the blocks of the
  4-(23,7,1) design, which form a two-distance code with distances {8, 12}.
"""

from __future__ import annotations

import warnings
from collections import Counter
from itertools import combinations

from .combinatorics import binomial
from .core import Code, InvalidInputError, Word

# x^11 + x^9 + x^7 + x^6 + x^5 + x + 1
GOLAY_GENERATOR_EXPONENTS = (11, 9, 7, 6, 5, 1, 0)
GOLAY_LENGTH = 23
GOLAY_DIMENSION = 12
GOLAY_WEIGHT_SUPPORT = frozenset({0, 7, 8, 11, 12, 15, 16, 23})


def constant_weight_distances(n: int, s: int) -> list[int]:
    """Distances realised by the weight-``s`` words of length ``n``.

    Two such words sharing ``i`` ones are at distance ``2(s - i)``, and
    ``i`` ranges over ``[max(0, 2s - n), s - 1]``.
    """
    return sorted(2 * (s - i) for i in range(max(0, 2 * s - n), s))


def construct_constant_weight(n: int, s: int, adjoin_zero: bool = False) -> Code:
    if not 1 <= s <= n:
        raise InvalidInputError(f"need 1 <= s <= n, got s={s}, n={n}")
    if adjoin_zero and s % 2:
        raise InvalidInputError(
            f"cannot adjoin the zero word for odd s={s}: its distance {s} is odd")
    if n < 2 * s:
        warnings.warn(f"n={n} < 2s={2 * s}: distances are {constant_weight_distances(n, s)}, "
                      f"not all of 2..{2 * s}", stacklevel=2)
    words = []
    for support in combinations(range(n), s):
        bits = 0
        for j in support:
            bits |= 1 << (n - 1 - j)
        words.append(Word(n, bits))
    if adjoin_zero:
        words.append(Word.zero(n))
    code = Code(n, frozenset(words))
    assert len(code) == binomial(n, s) + adjoin_zero
    return code


def _poly_word(exponents, shift: int, n: int) -> int:
    """Coefficient vector of ``x^shift * g(x)``; coordinate ``j`` holds the x^j coefficient."""
    bits = 0
    for e in exponents:
        bits |= 1 << (n - 1 - (e + shift))
    return bits


def golay_basis() -> list[int]:
    """Generator rows ``x^i g(x)``, ``i = 0..11``, as packed length-23 words."""
    return [_poly_word(GOLAY_GENERATOR_EXPONENTS, i, GOLAY_LENGTH) for i in range(GOLAY_DIMENSION)]


def golay_codewords() -> list[int]:
    """All 2^12 codewords, enumerated in Gray-code order."""
    basis = golay_basis()
    words = [0]
    current = 0
    for i in range(1, 1 << GOLAY_DIMENSION):
        current ^= basis[(i & -i).bit_length() - 1]
        words.append(current)
    return words


def golay_weight_distribution() -> Counter:
    return Counter(w.bit_count() for w in golay_codewords())


def construct_golay_blocks() -> Code:
    words = golay_codewords()
    if len(set(words)) != 1 << GOLAY_DIMENSION:
        raise AssertionError("Golay generator rows are not independent")
    blocks = [Word(GOLAY_LENGTH, w) for w in words if w.bit_count() == 7]
    if len(blocks) != 253:
        raise AssertionError(f"expected 253 weight-7 words, got {len(blocks)}")
    return Code(GOLAY_LENGTH, frozenset(blocks))
