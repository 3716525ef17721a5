"""Partitions and multipartitions in exponent notation.

A partition ``(3^2,1)`` is stored as the pairs ``((3, 2), (1, 1))`` with
strictly decreasing part sizes.  A multipartition ``((3,1)^2,(2))`` is
stored as pairs ``(partition, multiplicity)`` with strictly decreasing
partitions under the order defined by :func:`compare_prec`.

Order convention: partitions are compared first by size, then
lexicographically on their weakly decreasing part lists, so a larger
first part makes a partition greater.  Hence ``(1^3) < (2,1) < (3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator


@total_ordering
@dataclass(frozen=True)
class Partition:
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for part, mult in self.pairs:
            if part < 1 or mult < 1:
                raise ValueError(f"bad partition pair {(part, mult)}")
            if prev is not None and part >= prev:
                raise ValueError("part sizes must be strictly decreasing")
            prev = part

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        counts: dict[int, int] = {}
        for x in parts:
            if x < 1:
                raise ValueError("parts must be positive")
            counts[x] = counts.get(x, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def parts(self) -> tuple[int, ...]:
        """Weakly decreasing flat list of parts."""
        return tuple(p for p, c in self.pairs for _ in range(c))

    @property
    def size(self) -> int:
        return sum(p * c for p, c in self.pairs)

    @property
    def length(self) -> int:
        return sum(c for _, c in self.pairs)

    @property
    def key(self) -> tuple:
        return (self.size, self.parts)

    def is_trivial(self) -> bool:
        """True for ``(1^m)``, the Jordan type of the identity."""
        return all(p == 1 for p, _ in self.pairs)

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.key < other.key

    def __str__(self):
        return format_partition(self)


def compare_prec(a: Partition, b: Partition) -> int:
    """-1, 0 or 1 as ``a`` precedes, equals or follows ``b``."""
    return (a.key > b.key) - (a.key < b.key)


@total_ordering
@dataclass(frozen=True)
class MultiPartition:
    pairs: tuple[tuple[Partition, int], ...] = ()

    def __post_init__(self):
        prev = None
        for lam, mult in self.pairs:
            if lam.size == 0 or mult < 1:
                raise ValueError(f"bad multipartition pair {(str(lam), mult)}")
            if prev is not None and not lam < prev:
                raise ValueError("partitions must be strictly decreasing")
            prev = lam

    @classmethod
    def from_partitions(cls, parts: Iterable[Partition]) -> "MultiPartition":
        counts: dict[Partition, int] = {}
        for lam in parts:
            counts[lam] = counts.get(lam, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return tuple(lam for lam, b in self.pairs for _ in range(b))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    @property
    def size(self) -> int:
        return sum(lam.size * b for lam, b in self.pairs)

    @property
    def key(self) -> tuple:
        return (self.size, tuple(lam.key for lam in self.partitions))

    def __lt__(self, other):
        if not isinstance(other, MultiPartition):
            return NotImplemented
        return self.key < other.key

    def __str__(self):
        return format_multipartition(self)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in increasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(sorted(Partition.from_parts(p) for p in _partitions_bounded(n, n)))


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int) -> tuple[MultiPartition, ...]:
    """All multipartitions of total size ``n`` in increasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pool = [lam for k in range(1, n + 1) for lam in enumerate_partitions(k)]
    found: list[MultiPartition] = []

    def rec(remaining: int, top: int, chosen: list[Partition]):
        if remaining == 0:
            found.append(MultiPartition.from_partitions(chosen))
            return
        for idx in range(top, -1, -1):
            lam = pool[idx]
            if lam.size <= remaining:
                chosen.append(lam)
                rec(remaining - lam.size, idx, chosen)
                chosen.pop()

    rec(n, len(pool) - 1, [])
    return tuple(sorted(found))


# -- canonical text forms --------------------------------------------------

def format_partition(lam: Partition) -> str:
    items = [str(p) if c == 1 else f"{p}^{c}" for p, c in lam.pairs]
    return "(" + ",".join(items) + ")"


def format_multipartition(mu: MultiPartition) -> str:
    items = [
        format_partition(lam) + ("" if b == 1 else f"^{b}") for lam, b in mu.pairs
    ]
    return "(" + ",".join(items) + ")"


_TOKEN = re.compile(r"\s*(\d+|[()^,])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"malformed input {self.text!r}: expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def number(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise ValueError(f"malformed input {self.text!r}: expected a number")
        return int(tok)

    def exponent(self) -> int:
        if self.peek() == "^":
            self.take("^")
            return self.number()
        return 1

    def partition(self) -> Partition:
        self.take("(")
        parts: list[int] = []
        if self.peek() != ")":
            while True:
                p = self.number()
                parts.extend([p] * self.exponent())
                if self.peek() != ",":
                    break
                self.take(",")
        self.take(")")
        return Partition.from_parts(parts)

    def multipartition(self) -> MultiPartition:
        self.take("(")
        parts: list[Partition] = []
        if self.peek() != ")":
            while True:
                lam = self.partition()
                if lam.size == 0:
                    raise ValueError("empty partition inside a multipartition")
                parts.extend([lam] * self.exponent())
                if self.peek() != ",":
                    break
                self.take(",")
        self.take(")")
        return MultiPartition.from_partitions(parts)

    def done(self):
        if self.peek() is not None:
            raise ValueError(f"trailing input in {self.text!r}")


def parse_partition(text: str) -> Partition:
    """Parse ``"(3^2,1)"``; part order in the input does not matter."""
    p = _Parser(text)
    lam = p.partition()
    p.done()
    return lam


def parse_multipartition(text: str) -> MultiPartition:
    """Parse ``"((3,1)^2,(2))"``."""
    p = _Parser(text)
    mu = p.multipartition()
    p.done()
    return mu
