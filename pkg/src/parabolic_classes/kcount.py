"""The number of P_{n,d}(q)-conjugacy classes in GL_n(q) as a polynomial.

k(P,G) is assembled as the sum over class labels psi of
``|psi~| * f_P^G(x(psi))``.  The individual summands usually have
non-integral coefficients; the total must not, and a non-integral total
is reported as an internal error rather than rounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .classes import PsiMap, enumerate_psi, format_psi, poly_to_json, psi_class_size
from .flags import DimensionVector, f_value_poly
from .poly import ZERO, RationalPoly, divide_exact, format_poly


class IntegralityError(ArithmeticError):
    """Raised when a polynomial that must lie in Z[q] does not."""


@dataclass(frozen=True)
class PsiTerm:
    psi: PsiMap
    class_size: RationalPoly
    f_value: RationalPoly

    @property
    def contribution(self) -> RationalPoly:
        return self.class_size * self.f_value


@dataclass(frozen=True)
class KReport:
    n: int
    d: DimensionVector
    k_poly: RationalPoly
    per_psi: tuple[PsiTerm, ...]

    @property
    def k_coeffs(self) -> list[int]:
        return self.k_poly.int_coeffs()

    def factored_hint(self) -> str | None:
        """``(q - 1)(cofactor)`` when q - 1 divides k exactly."""
        try:
            cof = divide_exact(self.k_poly, RationalPoly((-1, 1)))
        except ArithmeticError:
            return None
        return f"(q - 1)({format_poly(cof)})"

    def to_json(self) -> dict:
        obj = {
            "n": self.n,
            "d": list(self.d),
            "k_coeffs": self.k_coeffs,
        }
        hint = self.factored_hint()
        if hint is not None:
            obj["factored_hint"] = hint
        obj["per_psi"] = [
            {
                "psi": format_psi(t.psi),
                "class_size": poly_to_json(t.class_size),
                "f_value": poly_to_json(t.f_value),
            }
            for t in self.per_psi
        ]
        return obj


def k_poly(n: int, d: Sequence[int]) -> KReport:
    return _k_report(n, DimensionVector(d, n))


@lru_cache(maxsize=None)
def _k_report(n: int, d: DimensionVector) -> KReport:
    terms = []
    total = ZERO
    for psi in enumerate_psi(n):
        size = psi_class_size(psi)
        fval = f_value_poly(psi, tuple(d))
        terms.append(PsiTerm(psi, size, fval))
        total = total + size * fval
    if not total.is_integral():
        raise IntegralityError(f"k(P,G) for n={n}, d={tuple(d)} has non-integer coefficients: {total}")
    if total(1) != 0:
        raise IntegralityError(f"k(P,G) for n={n}, d={tuple(d)} does not vanish at q=1")
    return KReport(n, d, total, tuple(terms))


def k_eval(n: int, d: Sequence[int], q0: int) -> int:
    value = k_poly(n, d).k_poly(q0)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(f"k(P,G) at q={q0} is {value}")
    return int(value)


def associated_vectors(d: Sequence[int]) -> list[DimensionVector]:
    """All dimension vectors whose block sizes are a permutation of those of ``d``."""
    d = DimensionVector(d)
    out = set()
    for perm in set(itertools.permutations(d.blocks)):
        out.add(DimensionVector(itertools.accumulate(perm)))
    return sorted(out)


@dataclass(frozen=True)
class AssociationCheck:
    holds: bool
    witness: tuple[tuple[DimensionVector, RationalPoly], ...]


def check_association_invariance(n: int, d: Sequence[int]) -> AssociationCheck:
    polys = tuple((dv, k_poly(n, dv).k_poly) for dv in associated_vectors(DimensionVector(d, n)))
    holds = all(p == polys[0][1] for _, p in polys)
    return AssociationCheck(holds, polys)


def class_number_poly(n: int) -> RationalPoly:
    """Number of conjugacy classes of GL_n(q)."""
    total = ZERO
    for psi in enumerate_psi(n):
        total = total + psi_class_size(psi)
    return total
