"""Binary words, codes and distance sets, plus the plain-text code file format.

A word of length ``n`` is packed into a Python ``int``: coordinate 1 (the
leftmost character of its string form) is the most significant bit.  With
this convention integer order and lexicographic string order coincide, and
distance/weight are population counts.

File format::

    # optional comment lines
    n M
    <M lines of exactly n characters from {0,1}>
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class InvalidInputError(ValueError):
    """Arguments violate an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size limit."""


class EmptyDistanceSetError(ValueError):
    """A code with fewer than two words has no distances."""


class CodeParseError(ValueError):
    """Base class for code file errors; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class HeaderError(CodeParseError):
    pass


class LineLengthError(CodeParseError):
    pass


class AlphabetError(CodeParseError):
    pass


class DuplicateWordError(CodeParseError):
    pass


class CountMismatchError(CodeParseError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    """A binary word of length ``n`` stored as a packed integer."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"negative length {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise InvalidInputError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def from_str(cls, text: str) -> Word:
        if any(c not in "01" for c in text):
            raise InvalidInputError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> Word:
        return cls.from_str("".join("1" if b else "0" for b in bits))

    @classmethod
    def zero(cls, n: int) -> Word:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> Word:
        return cls(n, (1 << n) - 1)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> int:
        """Bit at 0-based coordinate ``j`` (leftmost is 0)."""
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> (self.n - 1 - j)) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[j] for j in range(self.n))

    def __xor__(self, other: Word) -> Word:
        _check_same_length(self, other)
        return Word(self.n, self.bits ^ other.bits)

    def __and__(self, other: Word) -> Word:
        _check_same_length(self, other)
        return Word(self.n, self.bits & other.bits)

    def complement(self) -> Word:
        return Word(self.n, self.bits ^ ((1 << self.n) - 1))


def _check_same_length(u: Word, v: Word) -> None:
    if u.n != v.n:
        raise InvalidInputError(f"length mismatch: {u.n} != {v.n}")


def hamming_distance(u: Word, v: Word) -> int:
    _check_same_length(u, v)
    return (u.bits ^ v.bits).bit_count()


def weight(u: Word) -> int:
    return u.bits.bit_count()


@dataclass(frozen=True)
class DistanceSet:
    """Strictly increasing tuple of allowed distances ``d_1 < ... < d_s``."""

    distances: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.distances)
        object.__setattr__(self, "distances", d)
        if not d:
            raise InvalidInputError("a distance set needs at least one distance")
        if d[0] < 1:
            raise InvalidInputError(f"distances must be positive, got {d[0]}")
        if any(a >= b for a, b in zip(d, d[1:])):
            raise InvalidInputError(f"distances must be strictly increasing: {list(d)}")

    @classmethod
    def of(cls, *distances: int) -> DistanceSet:
        return cls(tuple(distances))

    @property
    def s(self) -> int:
        return len(self.distances)

    @property
    def max(self) -> int:
        return self.distances[-1]

    def check_length(self, n: int) -> None:
        if self.max > n:
            raise InvalidInputError(f"distance {self.max} exceeds length {n}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.distances)

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, d: object) -> bool:
        return d in self.distances

    def __str__(self) -> str:
        return ",".join(map(str, self.distances))


@dataclass(frozen=True)
class Code:
    """A set of distinct words of common length ``n``."""

    n: int
    words: frozenset[Word]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"code length must be positive, got {self.n}")
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            if w.n != self.n:
                raise InvalidInputError(f"word {w} has length {w.n}, expected {self.n}")

    @classmethod
    def from_words(cls, n: int, words: Iterable[Word | str]) -> Code:
        ws = [Word.from_str(w) if isinstance(w, str) else w for w in words]
        if len(set(ws)) != len(ws):
            raise InvalidInputError("duplicate words")
        return cls(n, frozenset(ws))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted())

    def __contains__(self, w: object) -> bool:
        return w in self.words

    def sorted(self) -> list[Word]:
        return sorted(self.words, key=lambda w: w.bits)


def pairwise_distances(code: Code) -> Iterator[tuple[Word, Word, int]]:
    for u, v in combinations(code.sorted(), 2):
        yield u, v, (u.bits ^ v.bits).bit_count()


def distance_set_of(code: Code) -> DistanceSet:
    if len(code) < 2:
        raise EmptyDistanceSetError(f"code of size {len(code)} has no pairwise distances")
    return DistanceSet(tuple(sorted({d for _, _, d in pairwise_distances(code)})))


def parse_code(data: bytes | str) -> Code:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    elif lines:
        raise CodeParseError("missing final newline", len(lines))
    i = 0
    while i < len(lines) and lines[i].startswith("#"):
        i += 1
    if i == len(lines):
        raise HeaderError("missing 'n M' header")
    header = lines[i].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise HeaderError(f"malformed header {lines[i]!r}", i + 1)
    n, m = int(header[0]), int(header[1])
    if n < 1:
        raise HeaderError(f"code length must be positive, got {n}", i + 1)
    body = lines[i + 1:]
    seen: set[int] = set()
    words = []
    for k, line in enumerate(body[:m]):
        lineno = i + 2 + k
        if any(c not in "01" for c in line):
            raise AlphabetError(f"characters outside {{0,1}} in {line!r}", lineno)
        if len(line) != n:
            raise LineLengthError(f"expected {n} characters, got {len(line)}", lineno)
        bits = int(line, 2)
        if bits in seen:
            raise DuplicateWordError(f"duplicate word {line}", lineno)
        seen.add(bits)
        words.append(Word(n, bits))
    if len(body) != m:
        raise CountMismatchError(f"header declares {m} words, found {len(body)}",
                                 i + 1 + min(len(body), m + 1))
    return Code(n, frozenset(words))


def serialize_code(code: Code) -> bytes:
    out = [f"{code.n} {len(code)}"]
    out.extend(str(w) for w in code.sorted())
    return ("\n".join(out) + "\n").encode("ascii")
