"""SL(2,C) Casson invariant of Dehn surgeries on two-bridge knots.

For an admissible slope,

    lambda(M_{p/q}) = ||p/q||_T / 2 - E_{p mod 2},  E_0 = 0,  E_1 = (alpha - 1)/4.

The functions here always return that formula value and attach an
admissibility report saying whether the surgery formula actually applies.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .alexander import AlexanderData, admissible_alexander, alexander
from .exact import DomainError
from .knots import (
    DoubleTwistForm,
    DoubleTwistKnot,
    Slope,
    TwoBridgeKnot,
    as_two_bridge,
    classify,
    double_twist_forms,
    double_twist_normal_form,
    from_double_twist,
)
from .seminorm import build_table, double_twist_seminorm, eval_seminorm, lattice_seminorm
from .surfaces import all_surfaces


@dataclass(frozen=True)
class AdmissibilityReport:
    is_boundary_slope: bool
    is_strict_boundary_slope: str  # "no" | "yes" | "unknown"
    alexander_ok: bool
    fibered: bool
    regular: bool = True
    notes: tuple[str, ...] = ()

    @property
    def admissible(self) -> bool:
        return self.alexander_ok and self.is_strict_boundary_slope == "no"


@dataclass(frozen=True)
class CassonResult:
    value: Fraction
    seminorm_value: Fraction
    correction: Fraction
    p_parity: str
    diagnostics: AdmissibilityReport

    def __post_init__(self):
        assert self.value == self.seminorm_value / 2 - self.correction

    @property
    def applicable(self) -> bool:
        return self.diagnostics.admissible


def correction_terms(k: TwoBridgeKnot) -> tuple[Fraction, Fraction]:
    return Fraction(0), Fraction(k.alpha - 1, 4)


def admissibility(k: TwoBridgeKnot, s: Slope, surfaces=None,
                  alex: AlexanderData | None = None) -> AdmissibilityReport:
    """Classify a slope against the hypotheses of the surgery formula.

    Strictness: a slope realized only by the Seifert surface of a fibered
    knot is the fiber's slope (not strict); any other boundary slope is
    strict, except that a fibered knot whose slope-0 is realized by both
    the fiber and another surface is reported as ``unknown``.
    """
    surfaces = all_surfaces(k) if surfaces is None else surfaces
    alex = alex or alexander(k)
    fibered = alex.is_monic
    realizing = [sf for sf in surfaces if s.q == 1 and sf.boundary_slope == s.p]
    notes = []
    if not realizing:
        strict = "no"
    elif not fibered:
        strict = "yes"
    else:
        has_fiber = any(sf.is_seifert for sf in realizing)
        others = any(not sf.is_seifert for sf in realizing)
        if has_fiber and others:
            strict = "unknown"
        elif has_fiber:
            strict = "no"
        else:
            strict = "yes"
        notes.append("fiberedness decided by monic Alexander polynomial")
    return AdmissibilityReport(
        is_boundary_slope=bool(realizing),
        is_strict_boundary_slope=strict,
        alexander_ok=admissible_alexander(k, s, alex),
        fibered=fibered,
        notes=tuple(notes),
    )


def surgery_formula(k: TwoBridgeKnot, p: int, q: int, table=None) -> Fraction:
    """Formula value at an arbitrary lattice point (p, q) != (0, 0)."""
    table = table or build_table(k)
    e0, e1 = correction_terms(k)
    return lattice_seminorm(table, p, q) / 2 - (e1 if p % 2 else e0)


def casson_invariant(k: TwoBridgeKnot, s: Slope, table=None, surfaces=None,
                     alex: AlexanderData | None = None) -> CassonResult:
    surfaces = all_surfaces(k) if surfaces is None else surfaces
    table = table or build_table(k, surfaces)
    norm = eval_seminorm(table, s)
    e0, e1 = correction_terms(k)
    odd = s.p % 2 == 1
    corr = e1 if odd else e0
    return CassonResult(
        value=norm / 2 - corr,
        seminorm_value=norm,
        correction=corr,
        p_parity="odd" if odd else "even",
        diagnostics=admissibility(k, s, surfaces, alex),
    )


def casson_double_twist(j: DoubleTwistKnot, s: Slope, surfaces=None,
                        alex: AlexanderData | None = None) -> CassonResult:
    """Casson invariant from the double twist closed forms.

    Diagnostics come from the two-bridge pipeline; the value does not.
    """
    form = double_twist_normal_form(j)
    norm = double_twist_seminorm(form, s.p, s.q)
    odd = s.p % 2 == 1
    corr = Fraction(form.l * form.m - form.sign - 1, 4) if odd else Fraction(0)
    k = from_double_twist(j)
    return CassonResult(norm / 2 - corr, norm, corr, "odd" if odd else "even",
                        admissibility(k, s, surfaces, alex))


def _form_exceptional(form: DoubleTwistForm) -> set[int]:
    # Exceptional slopes in the frame of J(l, sign*m), l, m >= 2.
    l, m, sign = form.l, form.m, form.sign
    if l == 2 and m == 2 and sign == -1:
        return {4, -4}
    if m == 2 and l % 2 == 0 and (sign == -1 or l > 2):
        # twist knots J(l, -+2), l even; J(2, 2) is the trefoil
        return {4} if sign == -1 else {-4}
    if l > 2 and m > 2:
        if l % 2 == 0 and m % 2 == 0:
            return {0}
        # the slope of the expansion [l, -+m]: -2m for J(l,-m), 2m for J(l,m)
        if l % 2:
            return {2 * sign * m}
        return {2 * l}
    return set()


def exceptional_slopes(knot: Union[TwoBridgeKnot, DoubleTwistKnot]) -> set[Slope]:
    """The set E_K of excluded integral slopes (empty for non double twist knots)."""
    k = as_two_bridge(knot)
    forms = double_twist_forms(k)
    if not forms:
        return set()

    def rank(f: DoubleTwistForm):
        # figure-eight first, then twist knots with the even partner, then l, m > 2
        if f.l == 2 and f.m == 2 and f.sign == -1:
            return 0
        if f.m == 2 and f.l % 2 == 0 and (f.sign == -1 or f.l > 2):
            return 1
        if f.l > 2 and f.m > 2:
            return 2
        return 3

    best = min(forms, key=lambda f: (rank(f), f.sign, f.l, f.m, f.mirrored))
    slopes = _form_exceptional(best)
    if best.mirrored:
        slopes = {-n for n in slopes}
    return {Slope.of(n) for n in slopes}


def nontriviality(k: TwoBridgeKnot, s: Slope) -> str:
    """'meridian', 'excluded_slope' or 'positive' for a hyperbolic two-bridge knot."""
    if classify(k) != "hyperbolic":
        raise DomainError(f"{k} is a torus knot")
    if s.is_meridian:
        return "meridian"
    if s in exceptional_slopes(k):
        return "excluded_slope"
    res = casson_invariant(k, s)
    if res.applicable:
        assert res.value > 0, (k, s, res)
    return "positive"


def lambda_prime(k: TwoBridgeKnot) -> Fraction:
    """lambda'(K) = ||0/1||_T / 2."""
    return eval_seminorm(build_table(k), Slope(0, 1)) / 2
