"""Alexander polynomial of K(alpha, beta) by Fox calculus on the one-relator presentation."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .exact import IntPoly, has_root_of_unity_root, has_any_root_of_unity_root
from .knots import Slope, TwoBridgeKnot


@dataclass(frozen=True)
class AlexanderData:
    delta: IntPoly
    is_monic: bool


def group_word(alpha: int, beta: int) -> list[tuple[str, int]]:
    """The word w = y^e1 x^e2 ... x^e_{alpha-1}, e_i = (-1)^floor(i*beta/alpha).

    ``beta`` must be odd (it may be negative) for <x, y | xw = wy> to present
    the knot group.
    """
    word = []
    for i in range(1, alpha):
        e = -1 if (i * beta // alpha) % 2 else 1
        word.append(("y" if i % 2 else "x", e))
    return word


def fox_dx_abelian(word) -> dict[int, int]:
    """Image of the Fox derivative d(word)/dx under x, y -> t, as {exponent: coeff}."""
    out: dict[int, int] = defaultdict(int)
    e = 0
    for letter, s in word:
        if letter == "x":
            if s == 1:
                out[e] += 1
            else:
                out[e - 1] -= 1
        e += s
    return out


def alexander(k: TwoBridgeKnot) -> AlexanderData:
    """Normalized Alexander polynomial.

    For the relator r = x w y^-1 w^-1 the abelianized derivative is
    dr/dx = 1 + (t - 1) * dw/dx, and this already generates the first
    elementary ideal of a deficiency-one presentation.
    """
    beta = k.beta if k.beta % 2 else k.beta - k.alpha
    dw = fox_dx_abelian(group_word(k.alpha, beta))
    lap: dict[int, int] = defaultdict(int)
    lap[0] += 1
    for e, c in dw.items():
        lap[e + 1] += c
        lap[e] -= c
    exps = [e for e, c in lap.items() if c]
    lo, hi = min(exps), max(exps)
    poly = IntPoly(tuple(lap.get(e, 0) for e in range(lo, hi + 1)))
    if poly.lc < 0:
        poly = -poly
    assert abs(poly(1)) == 1, f"{k}: Delta(1) = {poly(1)}"
    return AlexanderData(poly, abs(poly.lc) == 1)


def p_prime(p: int) -> int:
    p = abs(p)
    return p // 2 if p % 2 == 0 else p


def admissible_alexander(k: TwoBridgeKnot, s: Slope, data: AlexanderData | None = None) -> bool:
    """No p'-th root of unity is a root of Delta (p' = p, or p/2 for even p).

    p = 0 gives p' = 0, read as "no root of unity at all".
    """
    delta = (data or alexander(k)).delta
    pp = p_prime(s.p)
    if pp == 0:
        return not has_any_root_of_unity_root(delta)
    if pp == 1:
        return True
    return not has_root_of_unity_root(delta, pp)


def is_fibered(k: TwoBridgeKnot) -> bool:
    """Monic Alexander polynomial; a fiberedness criterion valid for alternating knots."""
    return alexander(k).is_monic
