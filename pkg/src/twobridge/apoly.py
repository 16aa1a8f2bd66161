"""L- and M-degrees of the A-hat polynomial (A-polynomial counted with multiplicity)."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .knots import DoubleTwistKnot, Slope, TwoBridgeKnot, double_twist_normal_form
from .seminorm import build_table, eval_seminorm


@dataclass(frozen=True)
class AhatDegrees:
    deg_M: int
    deg_L: int


def ahat_degrees(k: TwoBridgeKnot, table=None) -> AhatDegrees:
    """(||0/1||_T, ||1/0||_T); both are integers since boundary slopes are even."""
    table = table or build_table(k)
    m = eval_seminorm(table, Slope(0, 1))
    l = eval_seminorm(table, Slope(1, 0))
    assert m.denominator == 1 and l.denominator == 1
    assert l == (k.alpha - 1) // 2
    return AhatDegrees(int(m), int(l))


def double_twist_degM(j: DoubleTwistKnot) -> int:
    form = double_twist_normal_form(j)
    l, m = form.l, form.m
    if form.sign == -1:
        if l % 2 == 0 and m % 2 == 0:
            return 2 * l * m
        if l % 2:
            return m * (l * m + 1)
        return l * (l * m + 1)
    if m < 2:
        raise ValueError(f"{j}: the closed form needs 2 <= m <= l")
    if l % 2 == 0 and m % 2 == 0:
        return 2 * l * m - 2
    if l % 2:
        return m * m * (l - 1) - (m - 1) * (m - 2)
    return m * (l - 1) ** 2 - (l - m) + 2 * (m - 1)


def torus_ahat_degrees(p: int, q: int) -> AhatDegrees:
    """Degrees of A-hat for the (p, q) torus knot, p, q >= 2 coprime.

    A-hat is a product of (1 +- L M^{pq}) factors whose exponents sum to
    (p - 1)(q - 1)/2 in both parity cases.
    """
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) is not a torus knot type")
    if p % 2 == 1 and q % 2 == 1:
        exps = [(p - 1) * (q - 1) // 4] * 2
    else:
        if p % 2:
            p, q = q, p
        exps = [p * (q - 1) // 4, (p - 2) * (q - 1) // 4]
    deg_l = sum(exps)
    return AhatDegrees(p * q * deg_l, deg_l)


@dataclass
class DegreeReport:
    computed: AhatDegrees
    expected: AhatDegrees
    source: str  # "Ahat" or "A"
    mismatches: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return not self.mismatches


def degree_consistency(k: TwoBridgeKnot, row: tuple[int, int, Optional[int], Optional[int]],
                       table=None) -> DegreeReport:
    """Compare computed A-hat degrees with a table row (degM_A, degL_A, degM_Ahat, degL_Ahat).

    Without A-hat columns the row asserts A = A-hat, so the A columns are used.
    """
    degM_A, degL_A, degM_H, degL_H = row
    computed = ahat_degrees(k, table)
    if degM_H is None and degL_H is None:
        expected, source = AhatDegrees(degM_A, degL_A), "A"
    else:
        expected, source = AhatDegrees(degM_H, degL_H), "Ahat"
    mism = {}
    if computed.deg_M != expected.deg_M:
        mism["deg_M"] = (expected.deg_M, computed.deg_M)
    if computed.deg_L != expected.deg_L:
        mism["deg_L"] = (expected.deg_L, computed.deg_L)
    return DegreeReport(computed, expected, source, mism)
