"""Binary block codes, their matrices, and the orders used on them.

Codewords carry a partial order: u <= v here means every 1-bit of v is
also a 1-bit of u, so the all-ones word is the minimum.  On the family
of square codes with unit upper-triangular matrix (`is_triangular_code`)
two further comparisons act row by row: a lexicographic one and a
word-order one, both driven by the first row where the sorted matrices
differ.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import InputError


@dataclass(frozen=True)
class Codeword:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise InputError("empty codeword")
        if any(b not in (0, 1) for b in bits):
            raise InputError("codeword bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, s: str) -> "Codeword":
        return cls(tuple(int(c) for c in s))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.bits) if b)


def word_leq(a: Codeword, b: Codeword) -> bool:
    """Codeword order: a <= b iff b's support is contained in a's."""
    if len(a) != len(b):
        raise InputError("codewords have different lengths")
    return all(x >= y for x, y in zip(a.bits, b.bits))


@dataclass(frozen=True)
class BlockCode:
    """A non-empty set of distinct equal-length codewords.

    Word order is preserved as given; two BlockCode values are equal
    only when their word sequences match.  Use `lex_sort_desc` for the
    canonical arrangement.
    """

    words: tuple[Codeword, ...]

    def __post_init__(self):
        words = tuple(
            w if isinstance(w, Codeword) else Codeword(tuple(w)) for w in self.words
        )
        if not words:
            raise InputError("a block code needs at least one codeword")
        length = len(words[0])
        if any(len(w) != length for w in words):
            raise InputError("codewords must share one length")
        if len(set(words)) != len(words):
            raise InputError("duplicate codeword")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_strings(cls, strings) -> "BlockCode":
        return cls(tuple(Codeword.from_string(s) for s in strings))

    def strings(self) -> tuple[str, ...]:
        return tuple(str(w) for w in self.words)

    @property
    def length(self) -> int:
        return len(self.words[0])

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.words)


@dataclass(frozen=True)
class CodeMatrix:
    """0/1 matrix whose row i is the i-th codeword of some code."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if not entries or not entries[0]:
            raise InputError("empty matrix")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise InputError("ragged matrix")
            if any(v not in (0, 1) for v in row):
                raise InputError("matrix entries must be 0 or 1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_code(cls, code: BlockCode) -> "CodeMatrix":
        return cls(tuple(w.bits for w in code.words))

    def to_code(self) -> BlockCode:
        return BlockCode(tuple(Codeword(row) for row in self.entries))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j] == 0 for i in range(self.rows) for j in range(min(i, self.cols))
        )

    @property
    def has_unit_diagonal(self) -> bool:
        return self.is_square and all(self.entries[i][i] == 1 for i in range(self.rows))


def lex_sort_desc(code: BlockCode) -> BlockCode:
    """The same code with words in descending lexicographic order."""
    return BlockCode(tuple(sorted(code.words, key=lambda w: w.bits, reverse=True)))


@dataclass(frozen=True)
class MembershipCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_triangular_code(code: BlockCode) -> MembershipCheck:
    """Membership in the square unit-upper-triangular code family.

    A member has as many words as bit positions, contains the all-ones
    word, and its lex-descending matrix is upper triangular with ones on
    the diagonal.  The reason string names the first failed condition.
    """
    n = code.length
    if len(code) != n:
        return MembershipCheck(False, f"not square: {len(code)} words of length {n}")
    if all(0 in w.bits for w in code.words):
        return MembershipCheck(False, "all-ones word missing")
    m = CodeMatrix.from_code(lex_sort_desc(code))
    for i in range(n):
        for j in range(i):
            if m.entries[i][j]:
                return MembershipCheck(
                    False, f"sorted row {i} has a 1 left of the diagonal"
                )
        if not m.entries[i][i]:
            return MembershipCheck(False, f"sorted row {i} has no 1 on the diagonal")
    return MembershipCheck(True)


def enumerate_triangular_codes(n: int, *, max_order: int = 7) -> Iterator[BlockCode]:
    """Yield every member of the order-n triangular family.

    Row 0 is forced to all ones and row n-1 to 0...01; rows in between
    have free bits right of the diagonal, swept most-significant-first
    in row-major order, so the family arrives in a stable sequence of
    size 2**((n-1)*(n-2)/2).
    """
    if n < 1:
        raise InputError("n must be positive")
    if n > max_order:
        raise InputError(f"n={n} exceeds the bound {max_order}")
    free = [(i, j) for i in range(1, n - 1) for j in range(i + 1, n)]
    base = [[0] * n for _ in range(n)]
    for i in range(n):
        base[i][i] = 1
    base[0] = [1] * n
    for pattern in product((0, 1), repeat=len(free)):
        rows = [row[:] for row in base]
        for (i, j), bit in zip(free, pattern):
            rows[i][j] = bit
        yield BlockCode(tuple(Codeword(tuple(r)) for r in rows))


def staircase_code(n: int) -> BlockCode:
    """The member whose sorted row k is k zeros followed by n-k ones."""
    if n < 1:
        raise InputError("n must be positive")
    return BlockCode(
        tuple(Codeword(tuple(0 if j < i else 1 for j in range(n))) for i in range(n))
    )


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _sorted_member_rows(code: BlockCode, other: BlockCode):
    if code.length != other.length or len(code) != len(other):
        raise InputError("codes must share the same order to be compared")
    for c in (code, other):
        check = is_triangular_code(c)
        if not check:
            raise InputError(f"not a triangular-family code: {check.reason}")
    a = lex_sort_desc(code).words
    b = lex_sort_desc(other).words
    return a, b


def compare_codes_lex(v: BlockCode, w: BlockCode) -> Comparison:
    """Total order: compare the first differing sorted rows as numbers."""
    a, b = _sorted_member_rows(v, w)
    for ra, rb in zip(a, b):
        if ra.bits != rb.bits:
            return Comparison.GREATER if ra.bits > rb.bits else Comparison.LESS
    return Comparison.EQUAL


def compare_codes_word(v: BlockCode, w: BlockCode) -> Comparison:
    """Partial order: compare the first differing sorted rows by word order."""
    a, b = _sorted_member_rows(v, w)
    for ra, rb in zip(a, b):
        if ra.bits != rb.bits:
            if word_leq(ra, rb):
                return Comparison.LESS
            if word_leq(rb, ra):
                return Comparison.GREATER
            return Comparison.INCOMPARABLE
    return Comparison.EQUAL
