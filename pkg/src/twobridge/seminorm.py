"""Total Culler-Shalen seminorm of a two-bridge knot.

``||p/q||_T = 1/2 * sum(w * |p - N*q|)`` over aggregated (slope N, doubled
weight w) terms. The Seifert surface enters with its product weight minus
one, which absorbs the ``-|p|`` term into the sum.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .knots import DoubleTwistForm, DoubleTwistKnot, Slope, TwoBridgeKnot, double_twist_normal_form
from .surfaces import all_surfaces


@dataclass(frozen=True)
class SeminormTable:
    knot: TwoBridgeKnot
    terms: tuple[tuple[int, int], ...]
    alpha: int

    def __post_init__(self):
        assert sum(w for _, w in self.terms) == self.alpha - 1, self
        assert all(n % 2 == 0 for n, _ in self.terms)
        assert len({n for n, _ in self.terms}) == len(self.terms)

    def effective_terms(self) -> list[tuple[int, Fraction]]:
        return [(n, Fraction(w, 2)) for n, w in self.terms]

    def __call__(self, p: int, q: int) -> Fraction:
        return lattice_seminorm(self, p, q)


def build_table(k: TwoBridgeKnot, surfaces=None) -> SeminormTable:
    surfaces = all_surfaces(k) if surfaces is None else surfaces
    acc: Counter = Counter()
    for s in surfaces:
        acc[s.boundary_slope] += s.doubled_weight
    return SeminormTable(k, tuple(sorted(acc.items())), k.alpha)


def lattice_seminorm(t: SeminormTable, p: int, q: int) -> Fraction:
    """Seminorm at the lattice point p*mu + q*lambda (p, q need not be coprime)."""
    return Fraction(sum(w * abs(p - n * q) for n, w in t.terms), 2)


def eval_seminorm(t: SeminormTable, s: Slope) -> Fraction:
    return lattice_seminorm(t, s.p, s.q)


def is_norm(t: SeminormTable) -> bool:
    return len({n for n, w in t.terms if w > 0}) >= 2


def double_twist_seminorm_terms(form: DoubleTwistForm) -> list[tuple[int, int]]:
    """(slope, coefficient) pairs of ``2*||p/q||_T`` from the closed forms for J(l, -+m).

    Slopes are in the frame of J(l, sign*m) itself, i.e. before any mirror
    recorded in ``form``.
    """
    l, m = form.l, form.m
    if form.sign == -1:
        if l % 2 == 0 and m % 2 == 0:
            return [(0, l * m - l - m), (2 * m, l), (-2 * l, m)]
        if l % 2:
            return [(-2 * m, (l - 1) * (m - 1)), (0, l - 1), (-2 * (l + m), m)]
        return [(2 * l, (l - 1) * (m - 1)), (2 * (l + m), l), (0, m - 1)]
    if l < 2 or m < 2:
        raise ValueError(f"J({l},{m}) closed form needs l, m >= 2")
    if l % 2 == 0 and m % 2 == 0:
        return [(0, l * m - l - m), (-2 * m, l - 2), (-2 * l, m - 2), (-2 * (l + m - 1), 2)]
    if l % 2:
        return [(2 * m, (l - 1) * (m - 1)), (0, l - 3), (-2 * (l - m), m - 2), (-2 * (l - 1), 2)]
    return [(2 * l, (l - 1) * (m - 1)), (-2 * (m - l), l - 2), (0, m - 3), (-2 * (m - 1), 2)]


def double_twist_seminorm(j: Union[DoubleTwistKnot, DoubleTwistForm], p: int, q: int) -> Fraction:
    """||p/q||_T from the double twist closed forms, in the frame of ``j`` as given."""
    form = j if isinstance(j, DoubleTwistForm) else double_twist_normal_form(j)
    if form.mirrored:
        p = -p
    twice = sum(c * abs(p - n * q) for n, c in double_twist_seminorm_terms(form))
    return Fraction(twice, 2)
