"""Exact arithmetic: reduced rationals and dense integer polynomials.

Rationals are :class:`fractions.Fraction` values; :func:`rat` only adds the
library's error type. Polynomials are stored as tuples of Python integers,
index = power of ``t``, with trailing zeros stripped.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import lru_cache, reduce
from typing import Iterable, Sequence

Rational = Fraction


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


def rat(num: int, den: int) -> Fraction:
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial ``sum(c[i] * t**i)``; the empty tuple is zero."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPoly":
        return cls((0,) * n + (c,))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(tuple(a // c for a in self.coeffs))

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-a for a in self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(other * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPoly()
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    res[i + j] += a * b
        return IntPoly(tuple(res))

    __rmul__ = __mul__

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division over the rationals; raises if a quotient coefficient is not integral."""
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        q = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c, r = divmod(rem[k + dq], other.lc)
            if r:
                raise DomainError("quotient is not integral")
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return IntPoly(tuple(q)), IntPoly(tuple(rem))

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Pseudo-remainder of ``lc(other)**(deg self - deg other + 1) * self`` by ``other``."""
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq, b = other.degree, other.lc
        while len(rem) - 1 >= dq and rem:
            c = rem[-1]
            shift = len(rem) - 1 - dq
            rem = [b * x for x in rem]
            for j, y in enumerate(other.coeffs):
                rem[shift + j] -= c * y
            rem = list(_strip(rem))
        return IntPoly(tuple(rem))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Q via the primitive pseudo-remainder sequence.

    The result has content 1 and positive leading coefficient.
    """
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd of two zero polynomials")
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    f, g = a.primitive(), b.primitive()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        r = f.pseudo_rem(g)
        f, g = g, r.primitive()
    return f.primitive()


def poly_resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant as the Sylvester determinant, evaluated by fraction-free elimination."""
    m, n = a.degree, b.degree
    if m < 0 or n < 0:
        return 0
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + ac + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + bc + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def _bareiss_det(mat: list[list[int]]) -> int:
    m = [row[:] for row in mat]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=4096)
def has_root_of_unity_root(p: IntPoly, n: int) -> bool:
    """True iff some n-th root of unity is a root of ``p``."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    if n < 1:
        raise DomainError("n must be positive")
    cyc = IntPoly.monomial(n) - IntPoly((1,))
    return poly_gcd(p, cyc).degree > 0


def totient(n: int) -> int:
    result, k, m = n, 2, n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


def has_any_root_of_unity_root(p: IntPoly) -> bool:
    """True iff ``p`` vanishes at some root of unity of any order.

    A primitive n-th root of unity has minimal polynomial of degree
    ``totient(n)``, so only orders with ``totient(n) <= deg p`` can occur;
    ``totient(n) >= sqrt(n/2)`` bounds those orders by ``2 * deg(p)**2``.
    """
    if p.is_zero():
        raise DomainError("zero polynomial")
    d = p.degree
    for n in range(1, 2 * d * d + 3):
        if totient(n) <= d and has_root_of_unity_root(p, n):
            return True
    return False
