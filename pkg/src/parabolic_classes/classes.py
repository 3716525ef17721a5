"""Types of conjugacy classes of GL_n(q) that do not depend on q.

A :class:`PsiMap` records, for each eigenvalue degree ``j``, the
multiset of Jordan types attached to eigenvalue orbits of that degree.
Forgetting *which* orbits carry the types leaves a label that is the
same for every q.  Whether a given label is realised for a particular q
(enough distinct orbits of each degree) is checked separately by
:func:`psi_nonempty_at`; the class-size polynomial vanishes exactly
when it is not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .partitions import (
    MultiPartition,
    Partition,
    enumerate_multipartitions,
    format_multipartition,
    parse_multipartition,
    parse_partition,
    format_partition,
)
from .poly import ONE, RationalPoly, delta_poly, phi_poly


@dataclass(frozen=True)
class PsiMap:
    """Map ``j -> psi(j)``, stored as sorted ``(j, multipartition)`` pairs.

    Only degrees with a nonempty multipartition are stored.
    """

    items: tuple[tuple[int, MultiPartition], ...]

    def __post_init__(self):
        prev = 0
        for j, mu in self.items:
            if j <= prev:
                raise ValueError("degrees must be strictly increasing")
            if mu.size == 0:
                raise ValueError("empty multipartitions are not stored")
            prev = j

    @classmethod
    def from_dict(cls, mapping: dict[int, MultiPartition]) -> "PsiMap":
        return cls(tuple(sorted((j, mu) for j, mu in mapping.items() if mu.size)))

    def __getitem__(self, j: int) -> MultiPartition:
        for k, mu in self.items:
            if k == j:
                return mu
        return MultiPartition()

    @property
    def n(self) -> int:
        return sum(j * mu.size for j, mu in self.items)

    @property
    def max_degree(self) -> int:
        return self.items[-1][0] if self.items else 0

    @property
    def sort_key(self) -> tuple:
        return (-self.max_degree, tuple((-j, mu.key) for j, mu in reversed(self.items)))

    def __str__(self):
        return format_psi(self)


class FactorIndex(NamedTuple):
    j: int
    r: int
    s: int


class CentralizerFactor(NamedTuple):
    """One factor GL_rank(q^field_degree) carrying a unipotent of given type."""

    index: FactorIndex
    field_degree: int
    rank: int
    unipotent_type: Partition


@dataclass(frozen=True)
class CentralizerShape:
    factors: tuple[CentralizerFactor, ...]

    @property
    def n(self) -> int:
        return sum(f.field_degree * f.rank for f in self.factors)

    def __str__(self):
        return " x ".join(
            f"GL_{f.rank}(q{'' if f.field_degree == 1 else '^%d' % f.field_degree})"
            f" type {format_partition(f.unipotent_type)}"
            for f in self.factors
        )


@lru_cache(maxsize=None)
def enumerate_psi(n: int) -> tuple[PsiMap, ...]:
    """All labels with ``sum_j j*|psi(j)| == n``.

    Order: largest degree in the support first, then by the
    multipartitions for degrees from the top down.
    """
    if n < 1:
        raise ValueError("n must be positive")
    found: list[PsiMap] = []

    def rec(j: int, remaining: int, chosen: dict[int, MultiPartition]):
        if remaining == 0:
            found.append(PsiMap.from_dict(chosen))
            return
        if j > remaining:
            return
        # psi(j) may be empty
        rec(j + 1, remaining, chosen)
        for size in range(1, remaining // j + 1):
            for mu in enumerate_multipartitions(size):
                chosen[j] = mu
                rec(j + 1, remaining - j * size, chosen)
                del chosen[j]

    rec(1, n, {})
    return tuple(sorted(found, key=lambda psi: psi.sort_key))


def a_set(psi: PsiMap) -> tuple[FactorIndex, ...]:
    return tuple(
        FactorIndex(j, r, s)
        for j, mu in psi.items
        for r, (_, b) in enumerate(mu.pairs, start=1)
        for s in range(1, b + 1)
    )


def psi_class_size(psi: PsiMap) -> RationalPoly:
    """Number of conjugacy classes with label ``psi``, as a polynomial in q."""
    result = ONE
    for j, mu in psi.items:
        result = result * delta_poly(mu.multiplicities, phi_poly(j))
    return result


def centralizer_shape(psi: PsiMap) -> CentralizerShape:
    factors = []
    for idx in a_set(psi):
        lam = psi[idx.j].pairs[idx.r - 1][0]
        factors.append(CentralizerFactor(idx, idx.j, lam.size, lam))
    return CentralizerShape(tuple(factors))


def psi_nonempty_at(psi: PsiMap, q0: int) -> bool:
    """Whether there are enough distinct eigenvalue orbits over F_q0."""
    for j, mu in psi.items:
        if sum(mu.multiplicities) > phi_poly(j)(q0):
            return False
    return True


# -- text and JSON forms ---------------------------------------------------

def format_psi(psi: PsiMap) -> str:
    """E.g. ``1:((2)); 2:((1^2)); 3:((1))``."""
    return "; ".join(f"{j}:{format_multipartition(mu)}" for j, mu in psi.items)


def parse_psi(text: str) -> PsiMap:
    mapping: dict[int, MultiPartition] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        head, sep, body = chunk.partition(":")
        if not sep or not head.strip().isdigit():
            raise ValueError(f"expected 'j:(multipartition)', got {chunk!r}")
        j = int(head)
        if j < 1 or j in mapping:
            raise ValueError(f"bad or repeated degree {j} in {text!r}")
        mapping[j] = parse_multipartition(body)
    return PsiMap.from_dict(mapping)


def psi_to_json(psi: PsiMap) -> dict:
    return {
        "psi": [
            [j, [[format_partition(lam), b] for lam, b in mu.pairs]]
            for j, mu in psi.items
        ]
    }


def psi_from_json(obj: dict) -> PsiMap:
    mapping = {}
    for j, pairs in obj["psi"]:
        parts = []
        for text, b in pairs:
            parts.extend([parse_partition(text)] * int(b))
        mapping[int(j)] = MultiPartition.from_partitions(parts)
    return PsiMap.from_dict(mapping)


def poly_to_json(p: RationalPoly) -> list:
    """Integers stay integers; other rationals become ``"a/b"`` strings."""
    return [int(c) if c.denominator == 1 else str(c) for c in p.coeffs]


def poly_from_json(coeffs: list) -> RationalPoly:
    return RationalPoly(Fraction(c) for c in coeffs)


def dumps_psi(psi: PsiMap) -> str:
    return json.dumps(psi_to_json(psi))
