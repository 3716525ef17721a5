"""Brute-force counts over explicit matrices, independent of the polynomial path.

``k_oracle`` sums, over one explicit representative of every conjugacy
class of GL_n(q), the number of flags of type d that the representative
fixes.  ``k_burnside`` counts orbits of P acting on G by conjugation
directly, for groups small enough to list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .classes import PsiMap
from .flags import DimensionVector
from .gfq import (
    FiniteField,
    IrreduciblePoly,
    Matrix,
    block_diag,
    enumerate_superspaces,
    irreducible_polys,
    jordan_block_matrix,
    mat_image_in_span,
    mat_rank,
    nullspace,
)
from .partitions import MultiPartition, Partition, enumerate_partitions

DEFAULT_ORACLE_BUDGET = 10**8
DEFAULT_BURNSIDE_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """The requested brute-force computation is larger than allowed."""


@dataclass(frozen=True)
class GammaRep:
    """A conjugacy class of GL_n(q): distinct irreducibles, each with a Jordan type."""

    field: FiniteField
    blocks: tuple[tuple[IrreduciblePoly, Partition], ...]
    matrix: Matrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        polys = [f for f, _ in self.blocks]
        if len(set(polys)) != len(polys):
            raise ValueError("irreducible factors must be distinct")
        mats = [jordan_block_matrix(self.field, f, lam) for f, lam in self.blocks]
        object.__setattr__(self, "matrix", block_diag(mats))

    @property
    def n(self) -> int:
        return sum(f.degree * lam.size for f, lam in self.blocks)


def enumerate_gamma(F: FiniteField, n: int) -> Iterator[GammaRep]:
    """One representative for each conjugacy class of GL_n(F)."""
    if n < 1:
        raise ValueError("n must be positive")
    polys = [f for j in range(1, n + 1) for f in irreducible_polys(F, j)]

    def rec(start: int, remaining: int, chosen: list):
        if remaining == 0:
            yield GammaRep(F, tuple(chosen))
            return
        for idx in range(start, len(polys)):
            f = polys[idx]
            if f.degree > remaining:
                break
            for size in range(1, remaining // f.degree + 1):
                for lam in enumerate_partitions(size):
                    chosen.append((f, lam))
                    yield from rec(idx + 1, remaining - f.degree * size, chosen)
                    chosen.pop()

    yield from rec(0, n, [])


def classify_gamma(gamma: GammaRep) -> PsiMap:
    """The q-independent label of a class: Jordan types grouped by eigenvalue degree."""
    by_degree: dict[int, list[Partition]] = {}
    for f, lam in gamma.blocks:
        by_degree.setdefault(f.degree, []).append(lam)
    return PsiMap.from_dict(
        {j: MultiPartition.from_partitions(lams) for j, lams in by_degree.items()}
    )


@dataclass(frozen=True)
class FlagRep:
    """Nested RREF bases ``V_1 < ... < V_t``."""

    subspaces: tuple[Matrix, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.subspaces)


def enumerate_flags(F: FiniteField, d: Sequence[int]) -> Iterator[FlagRep]:
    d = DimensionVector(d)
    n = d.n

    def rec(i, basis, piv, chain):
        if i == len(d):
            yield FlagRep(tuple(chain))
            return
        for _, rows, wp in enumerate_superspaces(F, n, basis, piv, d[i]):
            chain.append(rows)
            yield from rec(i + 1, rows, wp, chain)
            chain.pop()

    yield from rec(0, (), (), [])


def fixed_flag_count(F: FiniteField, x: Matrix, d: Sequence[int]) -> int:
    """Number of flags of type ``d`` with ``x V_i = V_i`` for every i.

    Depth-first over subspaces, smallest first, extending only stable
    ones; the count below a stable ``V_i`` is memoised on ``V_i``.
    """
    d = DimensionVector(d)
    n = len(x)
    if d.n != n:
        raise ValueError(f"dimension vector ends at {d.n}, matrix has size {n}")
    memo: dict[tuple[int, Matrix], int] = {}

    def rec(i: int, basis: Matrix, piv) -> int:
        if i == len(d) - 1:
            return 1
        key = (i, basis)
        if key in memo:
            return memo[key]
        total = 0
        for new_rows, rows, wp in enumerate_superspaces(F, n, basis, piv, d[i]):
            if mat_image_in_span(F, x, rows, wp, rows=new_rows):
                total += rec(i + 1, rows, wp)
        memo[key] = total
        return total

    return rec(0, (), ())


def _flag_count(q: int, blocks: Sequence[int]) -> int:
    def qfact(k):
        out = 1
        for i in range(1, k + 1):
            out *= sum(q**e for e in range(i))
        return out

    out = qfact(sum(blocks))
    for a in blocks:
        out //= qfact(a)
    return out


def k_oracle(F: FiniteField, n: int, d: Sequence[int], budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """Number of P-conjugacy classes in G as a sum of fixed-flag counts."""
    d = DimensionVector(d, n)
    gammas = list(enumerate_gamma(F, n))
    work = len(gammas) * _flag_count(F.q, d.blocks)
    if work > budget:
        raise BudgetExceeded(
            f"oracle for n={n}, d={tuple(d)}, q={F.q} needs ~{work} stability tests (budget {budget})"
        )
    return sum(fixed_flag_count(F, g.matrix, d) for g in gammas)


def _parabolic_elements(F: FiniteField, d: DimensionVector) -> Iterator[Matrix]:
    n = d.n
    block_of = [b for b, size in enumerate(d.blocks) for _ in range(size)]
    free = [(i, j) for i in range(n) for j in range(n) if block_of[i] <= block_of[j]]
    for values in itertools.product(range(F.q), repeat=len(free)):
        M = [[0] * n for _ in range(n)]
        for (i, j), v in zip(free, values):
            M[i][j] = v
        if mat_rank(F, M) == n:
            yield tuple(tuple(r) for r in M)


def centralizer_order(F: FiniteField, p: Matrix) -> int:
    """|C_G(p)|: list the commutant algebra and count its invertible elements."""
    n = len(p)
    # unknown g_{ab} sits at column a*n + b; equation (g p - p g)_{ik} = 0
    eqs = []
    for i in range(n):
        for k in range(n):
            row = [0] * (n * n)
            for j in range(n):
                row[i * n + j] = F.add[row[i * n + j]][p[j][k]]
                row[j * n + k] = F.sub[row[j * n + k]][p[i][j]]
            eqs.append(tuple(row))
    basis = nullspace(F, tuple(eqs))
    count = 0
    for coefs in itertools.product(range(F.q), repeat=len(basis)):
        g = [0] * (n * n)
        for c, vec in zip(coefs, basis):
            if c:
                mc = F.mul[c]
                g = [F.add[a][mc[b]] for a, b in zip(g, vec)]
        if mat_rank(F, [g[r * n:(r + 1) * n] for r in range(n)]) == n:
            count += 1
    return count


def k_burnside(F: FiniteField, n: int, d: Sequence[int], budget: int = DEFAULT_BURNSIDE_BUDGET) -> int:
    """Orbit count (1/|P|) sum_{p in P} |C_G(p)| for tiny groups."""
    d = DimensionVector(d, n)
    dim_p = sum(a * sum(d.blocks[i:]) for i, a in enumerate(d.blocks))
    work = F.q ** (dim_p + n * n)
    if work > budget:
        raise BudgetExceeded(
            f"Burnside count for n={n}, d={tuple(d)}, q={F.q} needs ~{work} steps (budget {budget})"
        )
    order = 0
    total = 0
    for p in _parabolic_elements(F, d):
        order += 1
        total += centralizer_order(F, p)
    if total % order:
        raise ArithmeticError("Burnside sum is not divisible by |P|")
    return total // order
