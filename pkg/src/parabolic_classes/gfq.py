"""Finite fields F_{p^k}, polynomials and linear algebra over them.

Field elements are plain ints in ``range(q)``: the base-p digits of an
element are its coefficients (lowest degree first) as a polynomial in
the generator modulo the field's modulus.  All arithmetic goes through
precomputed tables, which is fast enough for the q <= 32 used here.

Vectors are tuples of elements, matrices are tuples of row tuples, and a
subspace is given by its reduced row echelon basis together with the
pivot columns.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(k for k in range(2, q + 1) if q % k == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


def prime_powers(count: int) -> list[int]:
    """The ``count`` smallest prime powers."""
    out = []
    q = 2
    while len(out) < count:
        if prime_power(q):
            out.append(q)
        q += 1
    return out


@dataclass(eq=False)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        p, k = self.p, self.k
        if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        q = self.q = p**k
        digits = [self._digits(a) for a in range(q)]
        self.add = [[self._from_digits([(x + y) % p for x, y in zip(dx, dy)])
                     for dy in digits] for dx in digits]
        self.neg = [self._from_digits([(-x) % p for x in dx]) for dx in digits]
        self.mul = [[self._mul_digits(dx, dy) for dy in digits] for dx in digits]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]
        # negmul[f][y] == -(f*y), the workhorse of row elimination
        self.negmul = [[self.neg[self.mul[f][y]] for y in range(q)] for f in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)
        if any(self.mul[a][self.inv[a]] != 1 for a in range(1, q)):
            raise ValueError("modulus is not irreducible")

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _mul_digits(self, dx, dy) -> int:
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(dx):
            if x:
                for j, y in enumerate(dy):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for top in range(len(prod) - 1, k - 1, -1):
            c = prod[top]
            if c:
                for i in range(k + 1):
                    prod[top - k + i] = (prod[top - k + i] - c * mod[i]) % p
        return self._from_digits(prod[:k])

    def element(self, coeffs: Sequence[int]) -> int:
        """Element with the given coefficients over F_p."""
        return self._from_digits([c % self.p for c in coeffs] + [0] * (self.k - len(coeffs)))

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FiniteField:
    """F_{p^k} with the least monic irreducible modulus.

    Polynomials are compared by their coefficient tuples, lowest degree
    first.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    prime = FiniteField(p, 1, (0, 1))
    if k == 1:
        return prime
    modulus = next(iter(_irreducibles_with_x(prime, k)))
    return FiniteField(p, k, modulus)


def field_of_order(q: int) -> FiniteField:
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return field_make(*pk)


# -- polynomials over F_q (coefficient tuples, lowest degree first) ---------

def poly_mod(F: FiniteField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``b``."""
    rem = list(a)
    db = len(b) - 1
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if c:
            nc = F.negmul[c]
            for i in range(db + 1):
                rem[top - db + i] = F.add[rem[top - db + i]][nc[b[i]]]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


@lru_cache(maxsize=None)
def _irreducibles_with_x(F: FiniteField, j: int) -> tuple[tuple[int, ...], ...]:
    found = []
    smaller = [g for d in range(1, j // 2 + 1) for g in _irreducibles_with_x(F, d)]
    for low in itertools.product(range(F.q), repeat=j):
        f = low + (1,)
        if all(poly_mod(F, f, g) for g in smaller):
            found.append(f)
    return tuple(found)


@dataclass(frozen=True)
class IrreduciblePoly:
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def irreducible_polys(F: FiniteField, j: int) -> tuple[IrreduciblePoly, ...]:
    """Monic irreducibles of degree ``j`` other than X, in lexicographic order."""
    if j < 1:
        raise ValueError("degree must be positive")
    return tuple(IrreduciblePoly(f) for f in _irreducibles_with_x(F, j) if f != (0, 1))


# -- matrices and subspaces --------------------------------------------------

def identity(F: FiniteField, m: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def mat_mul(F: FiniteField, A: Matrix, B: Matrix) -> Matrix:
    if A and len(A[0]) != len(B):
        raise ValueError("dimension mismatch")
    add, mul = F.add, F.mul
    cols = list(zip(*B))
    out = []
    for row in A:
        new = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = add[acc][mul[a][b]]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def mat_vec(F: FiniteField, A: Matrix, v: Sequence[int]) -> Vector:
    """``A v`` for a column vector ``v``."""
    add, mul = F.add, F.mul
    out = []
    for row in A:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = add[acc][mul[a][b]]
        out.append(acc)
    return tuple(out)


def rref(F: FiniteField, rows: Sequence[Sequence[int]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon basis of the row span, and its pivot columns."""
    M = [list(r) for r in rows]
    if not M:
        return (), ()
    ncols = len(M[0])
    add, mul, inv, negmul = F.add, F.mul, F.inv, F.negmul
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        lead = M[r][c]
        if lead != 1:
            s = mul[inv[lead]]
            M[r] = [s[x] for x in M[r]]
        prow = M[r]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if f:
                    nf = negmul[f]
                    row = M[i]
                    M[i] = [add[a][nf[b]] for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M[:r]), tuple(pivots)


def mat_rank(F: FiniteField, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(F, rows)[1])


def reduce_vector(F: FiniteField, v: Sequence[int], basis: Matrix, pivots: Sequence[int]) -> list[int]:
    """Remainder of ``v`` after eliminating the pivots of an RREF basis."""
    v = list(v)
    add, negmul = F.add, F.negmul
    for row, c in zip(basis, pivots):
        f = v[c]
        if f:
            nf = negmul[f]
            v = [add[a][nf[b]] for a, b in zip(v, row)]
    return v


def in_span(F: FiniteField, v: Sequence[int], basis: Matrix, pivots: Sequence[int]) -> bool:
    return not any(reduce_vector(F, v, basis, pivots))


def mat_image_in_span(
    F: FiniteField, x: Matrix, basis: Matrix, pivots: Sequence[int] | None = None,
    rows: Sequence[Sequence[int]] | None = None,
) -> bool:
    """Whether ``x W`` lies in ``W`` for the subspace with RREF ``basis``.

    Only the vectors in ``rows`` (default: the whole basis) are tested,
    which is enough when the rest of ``W`` is already known to be stable.
    """
    if pivots is None:
        basis, pivots = rref(F, basis)
    for w in (basis if rows is None else rows):
        if not in_span(F, mat_vec(F, x, w), basis, pivots):
            return False
    return True


def nullspace(F: FiniteField, A: Matrix) -> Matrix:
    """Basis of ``{v : A v = 0}``."""
    ncols = len(A[0])
    R, pivots = rref(F, A)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg[row[fc]]
        out.append(tuple(v))
    return tuple(out)


def mat_inverse(F: FiniteField, A: Matrix) -> Matrix:
    m = len(A)
    aug = [tuple(row) + identity(F, m)[i] for i, row in enumerate(A)]
    R, pivots = rref(F, aug)
    if pivots[:m] != tuple(range(m)):
        raise ValueError("matrix is singular")
    return tuple(row[m:] for row in R)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    m = sum(len(b) for b in blocks)
    out = []
    off = 0
    for b in blocks:
        for row in b:
            out.append((0,) * off + tuple(row) + (0,) * (m - off - len(row)))
        off += len(b)
    return tuple(out)


def random_invertible(F: FiniteField, m: int, rng: random.Random) -> Matrix:
    while True:
        A = tuple(tuple(rng.randrange(F.q) for _ in range(m)) for _ in range(m))
        if mat_rank(F, A) == m:
            return A


def _rref_subspaces(q: int, m: int, k: int) -> Iterator[Matrix]:
    for pivots in itertools.combinations(range(m), k):
        pset = set(pivots)
        free = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pset]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), val in zip(free, values):
                rows[i][c] = val
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(
    F: FiniteField, m: int, k: int, containing: Matrix | None = None
) -> Iterator[Matrix]:
    """Every ``k``-dimensional subspace of F^m once, as an RREF basis.

    With ``containing`` only subspaces containing that span are listed.
    """
    if containing is None:
        if not 0 <= k <= m:
            raise ValueError("need 0 <= k <= m")
        yield from _rref_subspaces(F.q, m, k)
        return
    basis, pivots = rref(F, containing)
    for _, rows, _ in enumerate_superspaces(F, m, basis, pivots, k):
        yield rows


def enumerate_superspaces(
    F: FiniteField, m: int, basis: Matrix, pivots: Sequence[int], k: int
) -> Iterator[tuple[Matrix, Matrix, tuple[int, ...]]]:
    """Subspaces of dimension ``k`` containing the RREF span ``basis``.

    Yields ``(new_rows, rref_rows, pivots)`` where ``new_rows`` span a
    complement of ``basis`` inside the subspace.
    """
    u = len(pivots)
    if not u <= k <= m:
        raise ValueError("need dim(containing) <= k <= m")
    comp = [c for c in range(m) if c not in pivots]
    for sub in _rref_subspaces(F.q, m - u, k - u):
        new_rows = []
        for srow in sub:
            v = [0] * m
            for c, val in zip(comp, srow):
                v[c] = val
            new_rows.append(tuple(v))
        new_rows = tuple(new_rows)
        rows, piv = rref(F, tuple(basis) + new_rows)
        yield new_rows, rows, piv


def companion_matrix(F: FiniteField, f: Sequence[int]) -> Matrix:
    """Companion matrix with ones on the subdiagonal and ``-f`` in the last column."""
    j = len(f) - 1
    C = [[0] * j for _ in range(j)]
    for i in range(1, j):
        C[i][i - 1] = 1
    for i in range(j):
        C[i][j - 1] = F.neg[f[i]]
    return tuple(tuple(r) for r in C)


def jordan_block_matrix(F: FiniteField, f: IrreduciblePoly | Sequence[int], lam) -> Matrix:
    """Generalised Jordan matrix for the irreducible ``f`` and partition ``lam``.

    Each part ``L`` gives an ``L x L`` block matrix with the companion of
    ``f`` on the diagonal and identity blocks just above it.
    """
    coeffs = f.coeffs if isinstance(f, IrreduciblePoly) else tuple(f)
    j = len(coeffs) - 1
    C = companion_matrix(F, coeffs)
    blocks = []
    for L in lam.parts:
        size = j * L
        B = [[0] * size for _ in range(size)]
        for b in range(L):
            for r in range(j):
                for c in range(j):
                    B[b * j + r][b * j + c] = C[r][c]
                if b + 1 < L:
                    B[b * j + r][(b + 1) * j + r] = 1
        blocks.append(tuple(tuple(r) for r in B))
    return block_diag(blocks)
