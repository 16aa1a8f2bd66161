"""Continued-fraction expansions and the incompressible surfaces they index.

Every essential surface with boundary in the complement of K(alpha, beta)
corresponds to an expansion ``[n1, ..., nk]`` of beta/alpha or of
(beta - alpha)/alpha with all ``|ni| >= 2``. The boundary slope is read off
the sign pattern of the expansion relative to the all-even (Seifert)
expansion, and the weight from the product of ``|ni| - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, prod

from .exact import DomainError
from .knots import TwoBridgeKnot


class SeifertExpansionError(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class ContinuedFraction:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(n) for n in self.entries))
        if not self.entries:
            raise DomainError("empty continued fraction")
        if any(n == 0 for n in self.entries):
            raise DomainError(f"zero entry in {list(self.entries)}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_all_even(self) -> bool:
        return all(n % 2 == 0 for n in self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(n) for n in self.entries) + "]"


def cf_value(cf) -> Fraction:
    """Value of 1/(n1 + 1/(n2 + ... + 1/nk))."""
    entries = cf.entries if isinstance(cf, ContinuedFraction) else tuple(cf)
    x = Fraction(0)
    for n in reversed(entries):
        d = n + x
        if d == 0:
            raise DomainError(f"expansion {list(entries)} has a zero denominator")
        x = 1 / d
    return x


def enumerate_expansions(r: Fraction) -> list[ContinuedFraction]:
    """All expansions of r in (-1, 1) \\ {0} with every entry of magnitude >= 2.

    Writing r = 1/(n1 + s) with the tail s in (-1, 1) leaves only
    n1 in {floor(1/r), ceil(1/r)}; the tail has a strictly smaller
    denominator, so the search terminates.
    """
    r = Fraction(r)
    if r == 0 or not -1 < r < 1:
        raise DomainError(f"{r} is not in (-1, 1) \\ {{0}}")
    found: list[ContinuedFraction] = []
    stack = [(r, ())]
    while stack:
        x, prefix = stack.pop()
        inv = 1 / x
        for n in sorted({floor(inv), ceil(inv)}):
            if abs(n) < 2:
                continue
            tail = inv - n
            if tail == 0:
                found.append(ContinuedFraction(prefix + (n,)))
            elif abs(tail) < 1:
                stack.append((tail, prefix + (n,)))
    return sorted(found)


def _even_expansion(r: Fraction):
    # Greedy: the even candidate among floor/ceil of 1/r; None if it dead-ends.
    entries = []
    x = r
    while True:
        inv = 1 / x
        lo = floor(inv)
        n = lo if lo % 2 == 0 else lo + 1
        tail = inv - n
        if n == 0 or abs(tail) >= 1:
            return None
        entries.append(n)
        if tail == 0:
            return ContinuedFraction(tuple(entries))
        x = tail


def seifert_expansion(k: TwoBridgeKnot) -> ContinuedFraction:
    """The unique all-even expansion of beta/alpha or (beta - alpha)/alpha."""
    cands = []
    for r in (Fraction(k.beta, k.alpha), Fraction(k.beta - k.alpha, k.alpha)):
        e = _even_expansion(r)
        if e is not None:
            cands.append(e)
    if len(cands) != 1:
        raise SeifertExpansionError(f"{k}: expected one all-even expansion, found {cands}")
    return cands[0]


def sign_pattern_counts(cf: ContinuedFraction) -> tuple[int, int]:
    """(n_plus, n_minus): entries agreeing / disagreeing with the signs +, -, +, ..."""
    n_plus = sum(1 for i, n in enumerate(cf.entries) if (n > 0) == (i % 2 == 0))
    return n_plus, len(cf) - n_plus


def boundary_slope(cf: ContinuedFraction, seifert: ContinuedFraction) -> int:
    p, m = sign_pattern_counts(cf)
    p0, m0 = sign_pattern_counts(seifert)
    return 2 * ((p - m) - (p0 - m0))


@dataclass(frozen=True)
class SurfaceDatum:
    """One surface; ``doubled_weight`` is twice its weight in the seminorm."""

    expansion: ContinuedFraction
    boundary_slope: int
    doubled_weight: int
    is_seifert: bool

    @property
    def weight(self) -> Fraction:
        return Fraction(self.doubled_weight, 2)


def all_surfaces(k: TwoBridgeKnot) -> list[SurfaceDatum]:
    """Surfaces of K ordered by boundary slope, then expansion."""
    seifert = seifert_expansion(k)
    expansions = (enumerate_expansions(Fraction(k.beta, k.alpha))
                  + enumerate_expansions(Fraction(k.beta - k.alpha, k.alpha)))
    evens = [cf for cf in expansions if cf.is_all_even]
    if evens != [seifert]:
        raise SeifertExpansionError(f"{k}: all-even expansions {evens} != [{seifert}]")
    out = []
    for cf in expansions:
        w = prod(abs(n) - 1 for n in cf)
        is_seifert = cf == seifert
        out.append(SurfaceDatum(cf, boundary_slope(cf, seifert), w - is_seifert, is_seifert))
    out.sort(key=lambda s: (s.boundary_slope, s.expansion.entries))
    return out


def slope_weight_multiset(surfaces) -> list[tuple[int, int]]:
    """Sorted (boundary slope, doubled weight) pairs."""
    return sorted((s.boundary_slope, s.doubled_weight) for s in surfaces)
