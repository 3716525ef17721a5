"""Flags stable under a unipotent element, and the sum over E(psi).

The count of flags of a given type fixed by a unipotent element of
Jordan type ``lam`` in GL_m(Q) is a polynomial in Q of degree at most the
dimension of the partial flag variety.  It is computed here by counting
exactly over the smallest prime powers and interpolating.

Counting over a single field uses ``N = u - 1`` in Jordan form and
recursion on the quotient: a stable flag ``V_1 < V_2 < ...`` is a stable
subspace ``V_1`` followed by a stable flag of ``V/V_1``, whose count only
depends on the Jordan type of ``N`` on ``V/V_1``.  Stable subspaces are
generated without scanning the whole Grassmannian: a stable ``W`` is
determined by ``X = N W`` together with a subspace between ``X`` and
``N^{-1} X``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .classes import FactorIndex, PsiMap, a_set, centralizer_shape
from .gfq import (
    FiniteField,
    Matrix,
    enumerate_subspaces,
    field_of_order,
    mat_rank,
    nullspace,
    prime_powers,
    reduce_vector,
    rref,
)
from .partitions import Partition
from .poly import ONE, ZERO, RationalPoly, divide_exact, lagrange_interpolate, substitute_power


class DimensionVector(tuple):
    """Strictly increasing positive integers ``d_1 < ... < d_t = n``."""

    def __new__(cls, dims: Iterable[int], n: int | None = None):
        dims = tuple(int(x) for x in dims)
        if not dims:
            raise ValueError("dimension vector must be nonempty")
        if dims[0] < 1 or any(a >= b for a, b in zip(dims, dims[1:])):
            raise ValueError(f"{dims} is not strictly increasing and positive")
        if n is not None and dims[-1] != n:
            raise ValueError(f"{dims} does not end at n={n}")
        return super().__new__(cls, dims)

    @property
    def n(self) -> int:
        return self[-1]

    @property
    def blocks(self) -> tuple[int, ...]:
        """Successive differences, i.e. the block sizes of the Levi factor."""
        return tuple(b - a for a, b in zip((0,) + self, self))

    def __repr__(self):
        return f"DimensionVector({tuple(self)})"


def parse_dimension_vector(text: str, n: int | None = None) -> DimensionVector:
    items = [s for s in text.replace(" ", "").split(",") if s]
    if not all(s.isdigit() for s in items):
        raise ValueError(f"bad dimension vector {text!r}")
    return DimensionVector(map(int, items), n)


def all_dimension_vectors(n: int) -> list[DimensionVector]:
    out = []
    for k in range(n):
        for inner in itertools.combinations(range(1, n), k):
            out.append(DimensionVector(inner + (n,)))
    return sorted(out)


def flag_blocks(ft: Sequence[int]) -> tuple[int, ...]:
    """Positive block sizes of a weakly increasing flag type ``0 <= f_1 <= ... <= f_t``."""
    prev = 0
    out = []
    for f in ft:
        if f < prev:
            raise ValueError(f"flag type {tuple(ft)} is not weakly increasing")
        if f > prev:
            out.append(f - prev)
        prev = f
    return tuple(out)


def flag_variety_dim(blocks: Sequence[int]) -> int:
    return sum(a * b for a, b in itertools.combinations(blocks, 2))


# -- Gaussian counts ----------------------------------------------------------

def _q_integer_poly(i: int) -> RationalPoly:
    return RationalPoly([1] * i)


def _q_factorial_poly(i: int) -> RationalPoly:
    result = ONE
    for k in range(1, i + 1):
        result = result * _q_integer_poly(k)
    return result


@lru_cache(maxsize=None)
def total_flag_count_poly(block_sizes: tuple[int, ...]) -> RationalPoly:
    """Number of flags with the given block sizes, as a polynomial in Q."""
    if any(a < 1 for a in block_sizes):
        raise ValueError("block sizes must be positive")
    num = _q_factorial_poly(sum(block_sizes))
    den = ONE
    for a in block_sizes:
        den = den * _q_factorial_poly(a)
    return divide_exact(num, den)


def _gaussian_multinomial(q: int, blocks: Sequence[int]) -> int:
    def qfact(i):
        out = 1
        for k in range(1, i + 1):
            out *= (q**k - 1) // (q - 1)
        return out

    den = 1
    for a in blocks:
        den *= qfact(a)
    return qfact(sum(blocks)) // den


# -- counting over one field ------------------------------------------------

class _NilpotentModule:
    """F_Q^m with a nilpotent N in Jordan form of type ``lam``."""

    def __init__(self, F: FiniteField, lam: Partition):
        self.F = F
        self.lam = lam
        self.m = lam.size
        # position of each coordinate inside its Jordan chain, and chain length
        self.pos = []
        self.chain = []
        for L in lam.parts:
            self.pos.extend(range(L))
            self.chain.extend([L] * L)
        # coordinates spanning N^i V
        self.image_coords = [
            [c for c in range(self.m) if self.pos[c] < self.chain[c] - i]
            for i in range(max(lam.parts, default=0) + 1)
        ]
        self.levels: list[list[tuple[Matrix, tuple[int, ...]]]] = [[((), ())]]
        self.quotient_counts: dict[int, Counter] = {}

    def apply_n(self, v: Sequence[int]) -> tuple[int, ...]:
        m, pos, chain = self.m, self.pos, self.chain
        return tuple(v[c + 1] if pos[c] + 1 < chain[c] else 0 for c in range(m))

    def inside_image(self, rows: Matrix) -> bool:
        img = set(self.image_coords[1])
        return all(not row[c] for row in rows for c in range(self.m) if c not in img)

    def quotient_type(self, rows: Matrix) -> Partition:
        """Jordan type of N acting on ``V / span(rows)``."""
        k = len(rows)
        ranks = [self.m - k]
        i = 1
        while ranks[-1] > 0:
            coords = self.image_coords[i] if i < len(self.image_coords) else []
            keep = set(coords)
            projected = [
                tuple(0 if c in keep else x for c, x in enumerate(row)) for row in rows
            ]
            ranks.append(len(coords) + mat_rank(self.F, projected) - k)
            i += 1
        # ranks[i-1] - ranks[i] = number of parts >= i
        at_least = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
        parts = []
        for i, cnt in enumerate(at_least, start=1):
            nxt = at_least[i] if i < len(at_least) else 0
            parts.extend([i] * (cnt - nxt))
        return Partition.from_parts(parts)

    def _preimage(self, X: Matrix, xpiv: tuple[int, ...]) -> Matrix:
        m = self.m
        cols = []
        for c in range(m):
            ne = [0] * m
            if self.pos[c] >= 1:
                ne[c - 1] = 1
            cols.append(reduce_vector(self.F, ne, X, xpiv))
        A = tuple(tuple(cols[c][r] for c in range(m)) for r in range(m))
        if not any(any(row) for row in A):
            return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))
        return nullspace(self.F, A)

    def _build_level(self, j: int):
        F = self.F
        found = []
        for xdim in range(j):
            for X, xpiv in self.levels[xdim]:
                if not self.inside_image(X):
                    continue
                M = self._preimage(X, xpiv)
                rem = [reduce_vector(F, v, X, xpiv) for v in M]
                C, _ = rref(F, rem)
                need = j - xdim
                if len(C) < need:
                    continue
                for U in enumerate_subspaces(F, len(C), need):
                    lifted = []
                    for urow in U:
                        v = [0] * self.m
                        for coef, crow in zip(urow, C):
                            if coef:
                                mc = F.mul[coef]
                                v = [F.add[a][mc[b]] for a, b in zip(v, crow)]
                        lifted.append(v)
                    Y, ypiv = rref(F, tuple(X) + tuple(tuple(v) for v in lifted))
                    if mat_rank(F, [self.apply_n(y) for y in Y]) == xdim:
                        found.append((Y, ypiv))
        self.levels.append(found)

    def stable_subspaces(self, k: int) -> list[tuple[Matrix, tuple[int, ...]]]:
        while len(self.levels) <= k:
            self._build_level(len(self.levels))
        return self.levels[k]

    def quotient_type_counts(self, k: int) -> Counter:
        if k not in self.quotient_counts:
            self.quotient_counts[k] = Counter(
                self.quotient_type(rows) for rows, _ in self.stable_subspaces(k)
            )
        return self.quotient_counts[k]


class StableFlagCounter:
    """Exact counts of u-stable flags over one fixed field F_Q."""

    def __init__(self, q: int):
        self.q = q
        self.F = field_of_order(q)
        self._modules: dict[Partition, _NilpotentModule] = {}
        self._memo: dict[tuple[Partition, tuple[int, ...]], int] = {}

    def module(self, lam: Partition) -> _NilpotentModule:
        if lam not in self._modules:
            self._modules[lam] = _NilpotentModule(self.F, lam)
        return self._modules[lam]

    def count(self, lam: Partition, blocks: tuple[int, ...]) -> int:
        if sum(blocks) != lam.size:
            raise ValueError("block sizes do not add up to |lam|")
        if len(blocks) <= 1:
            return 1
        if lam.is_trivial():
            return _gaussian_multinomial(self.q, blocks)
        # W -> W^perp turns stable flags into stable flags of reversed type
        if blocks[0] > blocks[-1]:
            blocks = blocks[::-1]
        key = (lam, blocks)
        if key not in self._memo:
            counts = self.module(lam).quotient_type_counts(blocks[0])
            self._memo[key] = sum(c * self.count(rho, blocks[1:]) for rho, c in counts.items())
        return self._memo[key]


@lru_cache(maxsize=None)
def _counter(q: int) -> StableFlagCounter:
    return StableFlagCounter(q)


def stable_flag_count(lam: Partition, ft: Sequence[int], q0: int) -> int:
    """Number of J(1, lam)-stable flags of type ``ft`` over F_q0."""
    return _counter(q0).count(lam, _checked_blocks(lam, ft))


def _checked_blocks(lam: Partition, ft: Sequence[int]) -> tuple[int, ...]:
    blocks = flag_blocks(ft)
    if sum(blocks) != lam.size or (ft and ft[-1] != lam.size):
        raise ValueError(f"flag type {tuple(ft)} does not end at |lam| = {lam.size}")
    return blocks


def interpolation_nodes(ft: Sequence[int]) -> list[int]:
    return prime_powers(flag_variety_dim(flag_blocks(ft)) + 1)


def stable_flag_count_poly(lam: Partition, ft: Sequence[int]) -> RationalPoly:
    """Stable flag count as a polynomial in the factor's own variable Q."""
    return _stable_poly(lam, _checked_blocks(lam, ft))


@lru_cache(maxsize=None)
def _stable_poly(lam: Partition, blocks: tuple[int, ...]) -> RationalPoly:
    if len(blocks) <= 1:
        return ONE
    deg = flag_variety_dim(blocks)
    nodes = prime_powers(deg + 1)
    points = [(q0, _counter(q0).count(lam, blocks)) for q0 in nodes]
    poly = lagrange_interpolate(points, degree_bound=deg)
    if not poly.is_integral():
        raise ArithmeticError(f"stable flag count for {lam}, {blocks} is not integral: {poly}")
    return poly


# -- E(psi) -----------------------------------------------------------------

@dataclass(frozen=True)
class EMatrix:
    """Flag dimensions per centralizer factor: ``rows[f][i] = e(factor f, i+1)``."""

    factors: tuple[FactorIndex, ...]
    rows: tuple[tuple[int, ...], ...]

    def column(self, factor: int) -> tuple[int, ...]:
        return self.rows[factor]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def enumerate_e_matrices(psi: PsiMap, d: Sequence[int]) -> list[EMatrix]:
    """All admissible distributions of ``d`` over the centralizer factors.

    Sorted lexicographically by the row-major flattened grid.
    """
    d = DimensionVector(d)
    if d.n != psi.n:
        raise ValueError(f"dimension vector ends at {d.n}, but psi has n = {psi.n}")
    shape = centralizer_shape(psi)
    weights = [f.field_degree for f in shape.factors]
    targets = [f.rank for f in shape.factors]
    nf, t = len(weights), len(d)
    found = []

    def fill_column(i, f, lower, remaining, col, cols):
        if f == nf:
            if remaining == 0:
                columns(i + 1, cols + [tuple(col)])
            return
        w = weights[f]
        for v in range(lower[f], targets[f] + 1):
            if w * v > remaining:
                break
            col.append(v)
            fill_column(i, f + 1, lower, remaining - w * v, col, cols)
            col.pop()

    def columns(i, cols):
        if i == t - 1:
            all_cols = cols + [tuple(targets)]
            rows = tuple(tuple(c[f] for c in all_cols) for f in range(nf))
            found.append(EMatrix(tuple(a_set(psi)), rows))
            return
        lower = cols[-1] if cols else [0] * nf
        fill_column(i, 0, lower, d[i], [], cols)

    columns(0, [])
    found.sort(key=lambda e: tuple(x for row in e.rows for x in row))
    return found


@lru_cache(maxsize=None)
def f_value_poly(psi: PsiMap, d: tuple[int, ...]) -> RationalPoly:
    """Number of flags of type ``d`` stable under x(psi), as a polynomial in q."""
    shape = centralizer_shape(psi)
    total = ZERO
    for e in enumerate_e_matrices(psi, d):
        term = ONE
        for f, factor in enumerate(shape.factors):
            local = stable_flag_count_poly(factor.unipotent_type, e.column(f))
            term = term * substitute_power(local, factor.field_degree)
        total = total + term
    if not total.is_integral():
        raise ArithmeticError(f"f-value for {psi}, {tuple(d)} is not integral: {total}")
    return total
