"""Two-bridge knots K(alpha, beta), double twist knots J(l, m) and surgery slopes."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Union


class InvalidKnotError(ValueError):
    pass


class SlopeParseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TwoBridgeKnot:
    """K(alpha, beta) with alpha odd >= 3, 0 < beta < alpha, gcd(alpha, beta) = 1.

    Construct through :func:`normalize` when beta may lie outside (0, alpha).
    """

    alpha: int
    beta: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a < 3 or a % 2 == 0:
            raise InvalidKnotError(f"alpha must be odd and >= 3, got {a}")
        if not 0 < b < a:
            raise InvalidKnotError(f"beta must satisfy 0 < beta < alpha, got {b}")
        if gcd(a, b) != 1:
            raise InvalidKnotError(f"gcd({a}, {b}) != 1")

    def epsilon(self, i: int) -> int:
        """Sign exponent (-1)**floor(i*beta/alpha) of the knot group word."""
        return -1 if (i * self.beta // self.alpha) % 2 else 1

    @property
    def beta_inverse(self) -> int:
        return pow(self.beta, -1, self.alpha)

    def __str__(self) -> str:
        return f"K({self.alpha},{self.beta})"


def normalize(alpha: int, beta: int) -> TwoBridgeKnot:
    if alpha < 3 or alpha % 2 == 0:
        raise InvalidKnotError(f"alpha must be odd and >= 3, got {alpha}")
    if gcd(alpha, beta) != 1:
        raise InvalidKnotError(f"gcd({alpha}, {beta}) != 1")
    return TwoBridgeKnot(alpha, beta % alpha)


def is_equivalent(k1: TwoBridgeKnot, k2: TwoBridgeKnot) -> bool:
    if k1.alpha != k2.alpha:
        return False
    return k2.beta in (k1.beta, k1.beta_inverse)


def mirror(k: TwoBridgeKnot) -> TwoBridgeKnot:
    return TwoBridgeKnot(k.alpha, k.alpha - k.beta)


def canonical(k: TwoBridgeKnot) -> TwoBridgeKnot:
    """Representative with the smaller of beta, beta^-1 mod alpha."""
    return TwoBridgeKnot(k.alpha, min(k.beta, k.beta_inverse))


def classify(k: TwoBridgeKnot) -> str:
    return "torus" if k.beta in (1, k.alpha - 1) else "hyperbolic"


@dataclass(frozen=True)
class DoubleTwistKnot:
    """J(l, m): l vertical and m horizontal half twists, signed."""

    l: int
    m: int

    def __post_init__(self):
        if self.l == 0 or self.m == 0:
            raise InvalidKnotError(f"{self} is an unknot")
        if self.l % 2 and self.m % 2:
            raise InvalidKnotError(f"{self} is a two-component link")

    def __str__(self) -> str:
        return f"J({self.l},{self.m})"


@dataclass(frozen=True)
class DoubleTwistForm:
    """J(l, sign*m) with l, m > 0, plus whether a mirror was needed to reach it.

    ``sign == -1`` is the J(l, -m) family (alpha = l*m + 1),
    ``sign == +1`` is the J(l, m) family (alpha = l*m - 1), stored with l >= m.
    """

    l: int
    m: int
    sign: int
    mirrored: bool

    @property
    def alpha(self) -> int:
        return self.l * self.m - self.sign

    @property
    def twist(self) -> DoubleTwistKnot:
        return DoubleTwistKnot(self.l, self.sign * self.m)


def double_twist_normal_form(j: DoubleTwistKnot) -> DoubleTwistForm:
    """Reduce J(l, m) using J(l, m) = J(m, l) and mirror(J(l, m)) = J(-l, -m)."""
    l, m = j.l, j.m
    mirrored = False
    if l < 0 and m < 0:
        l, m, mirrored = -l, -m, True
    if l > 0 and m > 0:
        if l < m:
            l, m = m, l
        return DoubleTwistForm(l, m, +1, mirrored)
    if l < 0:
        l, m = m, l
    return DoubleTwistForm(l, -m, -1, mirrored)


def knot_of_form(form: DoubleTwistForm) -> TwoBridgeKnot:
    k = normalize(form.alpha, form.m)
    return mirror(k) if form.mirrored else k


def from_double_twist(j: DoubleTwistKnot) -> TwoBridgeKnot:
    form = double_twist_normal_form(j)
    if form.alpha < 3:
        raise InvalidKnotError(f"{j} is an unknot")
    return knot_of_form(form)


def double_twist_forms(k: TwoBridgeKnot) -> list[DoubleTwistForm]:
    """Every J(l, +-m) normal form with l, m >= 2 presenting ``k`` (up to J(l,m)=J(m,l)).

    Found by solving alpha = l*b +- 1 over the four representatives
    b in {beta, beta^-1, alpha - beta, alpha - beta^-1}.
    """
    a = k.alpha
    reps = {(k.beta, False), (k.beta_inverse, False),
            (a - k.beta, True), (a - k.beta_inverse, True)}
    forms = set()
    for b, mirrored in reps:
        for sign in (-1, +1):
            num = a + sign
            if b >= 2 and num % b == 0:
                l = num // b
                if l >= 2:
                    if sign == +1 and l < b:
                        # J(l, m) = J(m, l); keep l >= m
                        continue
                    forms.add(DoubleTwistForm(l, b, sign, mirrored))
    return sorted(forms, key=lambda f: (f.sign, f.l, f.m, f.mirrored))


_KNOT_RE = re.compile(r"^\s*([KJ])\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def parse_knot(text: str) -> Union[TwoBridgeKnot, DoubleTwistKnot]:
    """Parse ``K(alpha,beta)`` or ``J(l,m)``; K specs are normalized."""
    mt = _KNOT_RE.match(text.replace("−", "-"))
    if not mt:
        raise InvalidKnotError(f"cannot parse knot spec {text!r}")
    kind, x, y = mt.group(1), int(mt.group(2)), int(mt.group(3))
    if kind == "K":
        return normalize(x, y)
    return DoubleTwistKnot(x, y)


def as_two_bridge(knot: Union[TwoBridgeKnot, DoubleTwistKnot]) -> TwoBridgeKnot:
    if isinstance(knot, DoubleTwistKnot):
        return from_double_twist(knot)
    return knot


@dataclass(frozen=True)
class Slope:
    """Reduced slope p/q with q >= 0; the meridian is 1/0."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise SlopeParseError("q must be non-negative")
        if gcd(self.p, self.q) != 1:
            raise SlopeParseError(f"{self.p}/{self.q} is not reduced")

    @classmethod
    def of(cls, p: int, q: int = 1) -> "Slope":
        """Fold signs into p and reduce; 0/0 is rejected."""
        if q == 0:
            if p == 0:
                raise SlopeParseError("0/0 is not a slope")
            return cls(1, 0)
        if q < 0:
            p, q = -p, -q
        g = gcd(p, q)
        return cls(p // g, q // g)

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_slope(text: str) -> Slope:
    """Parse ``p/q`` or ``p``. Signs fold into p and the pair is reduced; q = 0 needs p = +-1."""
    mt = _SLOPE_RE.match(text.replace("−", "-"))
    if not mt:
        raise SlopeParseError(f"malformed slope {text!r}")
    p = int(mt.group(1))
    q = int(mt.group(2)) if mt.group(2) is not None else 1
    if q == 0 and abs(p) != 1:
        raise SlopeParseError(f"{text!r}: q = 0 requires p = +-1")
    return Slope.of(p, q)
