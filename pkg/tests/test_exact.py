from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twobridge.exact import (
    DomainError,
    IntPoly,
    has_any_root_of_unity_root,
    has_root_of_unity_root,
    poly_gcd,
    poly_resultant,
    rat,
    totient,
)

P = IntPoly.from_coeffs


def tn_minus_1(n):
    return IntPoly.monomial(n) - P([1])


@pytest.mark.parametrize("num,den,want", [(4, 11, Fraction(4, 11)), (-7, 11, Fraction(-7, 11)),
                                          (6, -4, Fraction(-3, 2))])
def test_rat(num, den, want):
    r = rat(num, den)
    assert r == want and r.denominator > 0


def test_rat_zero_denominator():
    with pytest.raises(DomainError):
        rat(1, 0)


def test_poly_basics():
    p = P([1, -3, 1])
    assert p.degree == 2 and p.lc == 1
    assert str(p) == "t^2 - 3*t + 1"
    assert p(1) == -1 and p(-1) == 5
    assert P([0, 0]).is_zero() and P([]).degree == -1
    assert P([2, 4, -6]).primitive() == P([-1, -2, 3])
    q, r = (P([-1, 0, 1])).divmod_exact(P([-1, 1]))
    assert q == P([1, 1]) and r.is_zero()


def test_gcd_examples():
    assert poly_gcd(P([-1, 0, 1]), P([-1, 1])) == P([-1, 1])
    assert poly_gcd(P([1, -1, 1]), tn_minus_1(6)) == P([1, -1, 1])
    for n in range(1, 61):
        assert poly_gcd(P([1, -3, 1]), tn_minus_1(n)) == P([1])


def test_gcd_zero_zero():
    with pytest.raises(DomainError):
        poly_gcd(P([]), P([]))


def test_root_of_unity_examples():
    assert has_root_of_unity_root(P([1, -1, 1]), 6)
    assert not has_root_of_unity_root(P([1, -1, 1]), 5)
    assert not has_root_of_unity_root(P([1, -3, 1]), 12)


def test_any_root_of_unity_covers_high_orders():
    # Phi_12 = t^4 - t^2 + 1 has degree 4 but only order-12 roots
    phi12 = P([1, 0, -1, 0, 1])
    assert has_any_root_of_unity_root(phi12)
    assert not has_any_root_of_unity_root(P([1, -3, 1]))


def test_totient():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_resultant():
    # Res(t - a, t - b) = b - a up to sign; Res(t^2+1, t^2-1) = 4
    assert abs(poly_resultant(P([-2, 1]), P([-5, 1]))) == 3
    assert abs(poly_resultant(P([1, 0, 1]), P([-1, 0, 1]))) == 4
    assert poly_resultant(P([1, -1]), P([1, -1])) == 0


small_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=5).map(P).filter(lambda p: not p.is_zero())


@given(small_polys, small_polys, small_polys)
def test_gcd_divides_and_is_maximal(a, b, c):
    g = poly_gcd(a * c, b * c)
    for x in (a * c, b * c):
        _, r = _rat_divmod(x, g)
        assert r == 0
    # c's primitive part divides the gcd
    _, r = _rat_divmod(g, c.primitive())
    assert r == 0


def _rat_divmod(a, b):
    # division over Q as an independent oracle; returns remainder "is zero" as 0 or 1
    rem = [Fraction(x) for x in a.coeffs]
    db = b.degree
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        c = rem[-1] / b.lc
        shift = len(rem) - 1 - db
        for i, bc in enumerate(b.coeffs):
            rem[shift + i] -= c * bc
        rem.pop()
    return None, 0 if not any(rem) else 1


@given(small_polys, st.integers(1, 12), st.integers(2, 5))
def test_root_of_unity_monotone_in_divisibility(p, n, k):
    if has_root_of_unity_root(p, n):
        assert has_root_of_unity_root(p, n * k)


@given(small_polys, small_polys)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
    for x in (-2, 0, 3):
        assert (a * b)(x) == a(x) * b(x)
