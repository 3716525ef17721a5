"""Exact univariate polynomials in q with rational coefficients.

Everything here is exact: coefficients are :class:`fractions.Fraction`
and no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class RationalPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``q**i``.

    Trailing zero coefficients are stripped on construction, so two
    polynomials are equal iff their coefficient tuples are equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "RationalPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.constant(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, q0: Number) -> Fraction:
        return evaluate(self, q0)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


def _coerce(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def add(p: RationalPoly, r: RationalPoly) -> RationalPoly:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return RationalPoly(out)


def mul(p: RationalPoly, r: RationalPoly) -> RationalPoly:
    if p.is_zero() or r.is_zero():
        return ZERO
    out = [Fraction(0)] * (len(p.coeffs) + len(r.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(r.coeffs):
            out[i + j] += a * b
    return RationalPoly(out)


def evaluate(p: RationalPoly, q0: Number) -> Fraction:
    """Horner evaluation at an exact rational point."""
    q0 = Fraction(q0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


def substitute_power(p: RationalPoly, j: int) -> RationalPoly:
    """Return ``p(q**j)``."""
    if j < 1:
        raise ValueError("j must be positive")
    if j == 1 or p.is_zero():
        return p
    out = [Fraction(0)] * (j * p.degree + 1)
    for i, c in enumerate(p.coeffs):
        out[i * j] = c
    return RationalPoly(out)


def divmod_poly(p: RationalPoly, r: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    if r.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    lead = r.coeffs[-1]
    quot = [Fraction(0)] * max(len(rem) - len(r.coeffs) + 1, 0)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + r.degree] / lead
        quot[k] = c
        if c:
            for i, b in enumerate(r.coeffs):
                rem[k + i] -= c * b
    return RationalPoly(quot), RationalPoly(rem)


def divide_exact(p: RationalPoly, r: RationalPoly) -> RationalPoly:
    quot, rem = divmod_poly(p, r)
    if not rem.is_zero():
        raise ArithmeticError(f"{r} does not divide {p}")
    return quot


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    k = 2
    while k * k <= m:
        if m % k == 0:
            m //= k
            if m % k == 0:
                return 0
            result = -result
        k += 1
    if m > 1:
        result = -result
    return result


def divisors(m: int) -> list[int]:
    return [k for k in range(1, m + 1) if m % k == 0]


def phi_poly(m: int) -> RationalPoly:
    """Number of Frobenius orbits on elements of exact degree ``m``.

    For ``m == 1`` the orbits are the nonzero elements of F_q, hence
    ``q - 1`` rather than the Mobius sum ``q``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return RationalPoly((-1, 1))
    out = [Fraction(0)] * (m + 1)
    for j in divisors(m):
        out[m // j] += Fraction(mobius(j), m)
    return RationalPoly(out)


def binomial_poly(z: RationalPoly, c: int) -> RationalPoly:
    """``z(z-1)...(z-c+1)/c!`` for a polynomial ``z``."""
    result = ONE
    for i in range(c):
        result = result * (z - i)
    return result * Fraction(1, factorial(c))


def delta_poly(b: Sequence[int], z: RationalPoly) -> RationalPoly:
    """Chained binomial product ``C(z,b1) C(z-b1,b2) ... C(z-b1-...-b_{m-1}, bm)``."""
    if not b:
        raise ValueError("b must be nonempty")
    result = ONE
    used = 0
    for bi in b:
        if bi < 1:
            raise ValueError("entries of b must be positive")
        result = result * binomial_poly(z - used, bi)
        used += bi
    return result


def lagrange_interpolate(
    points: Sequence[tuple[Number, Number]], degree_bound: int | None = None
) -> RationalPoly:
    """Unique polynomial of degree < len(points) through ``points``.

    With ``degree_bound`` the result must have degree at most that bound,
    which turns any surplus points into consistency checks.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    # Newton divided differences, then expand the Newton form.
    coef = list(ys)
    n = len(xs)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k])
    result = RationalPoly.constant(coef[-1])
    for i in range(n - 2, -1, -1):
        result = result * RationalPoly((-xs[i], 1)) + coef[i]
    if degree_bound is not None and result.degree > degree_bound:
        raise ValueError(
            f"points are not on a polynomial of degree <= {degree_bound}"
        )
    return result


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c})"


def format_poly(p: RationalPoly, var: str = "q") -> str:
    """Expanded form, highest degree first, e.g. ``2q^2 - 2q``."""
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if i == 0:
            body = _format_coeff(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else _format_coeff(a) + mono
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


ZERO = RationalPoly()
ONE = RationalPoly((1,))
Q = RationalPoly((0, 1))
