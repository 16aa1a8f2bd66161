
from hypothesis import given, settings

from twobridge.alexander import admissible_alexander, alexander, is_fibered, p_prime
from twobridge.exact import IntPoly
from twobridge.knots import Slope, TwoBridgeKnot, mirror
from twobridge.surfaces import seifert_expansion

from conftest import all_knots, knots

K = TwoBridgeKnot
P = IntPoly.from_coeffs


def seifert_matrix_alexander(k):
    """det(V - t V^T) for the plumbing of twisted bands read off the even expansion.

    V is upper bidiagonal (diagonal +-n_i/2, superdiagonal 1), so V - t V^T is
    tridiagonal and its determinant follows the three-term recurrence.
    """
    c = [n // 2 for n in seifert_expansion(k).entries]
    t = P([0, 1])
    prev, cur = P([1]), P([1])
    for i, ci in enumerate(c):
        d = ci if i % 2 == 0 else -ci
        diag = P([d]) - t * d
        # off-diagonal product: 1 * (-t)
        prev, cur = cur, diag * cur + (t * prev if i else P([]))
    return cur


def normalized(p):
    c = list(p.coeffs)
    while c and c[0] == 0:
        c.pop(0)
    q = P(c)
    return -q if q.lc < 0 else q


def test_examples():
    assert alexander(K(3, 1)).delta == P([1, -1, 1])
    assert alexander(K(5, 2)).delta == P([1, -3, 1])
    assert alexander(K(5, 1)).delta == P([1, -1, 1, -1, 1])


def test_matches_seifert_matrix_oracle():
    for k in all_knots(99):
        assert alexander(k).delta == normalized(seifert_matrix_alexander(k)), k


def test_fibered_examples():
    assert is_fibered(K(5, 2))
    assert not is_fibered(K(7, 2))
    assert alexander(K(7, 2)).delta == P([2, -3, 2])
    assert is_fibered(K(3, 1))


def test_admissible_examples():
    assert admissible_alexander(K(3, 1), Slope(5, 1))
    assert not admissible_alexander(K(3, 1), Slope(12, 1))
    assert admissible_alexander(K(5, 2), Slope(100, 1))


def test_p_prime():
    assert [p_prime(p) for p in (0, 1, -3, 4, -12, 7)] == [0, 1, 3, 2, 6, 7]


def test_trefoil_rejects_exactly_multiples_of_six():
    rejected = [p for p in range(-60, 61) if not admissible_alexander(K(3, 1), Slope.of(p, 1))]
    assert rejected == [p for p in range(-60, 61) if p_prime(p) % 6 == 0]


def test_p_zero_means_any_root_of_unity():
    # trefoil roots are 6th roots of unity; figure-eight has none on the unit circle
    assert not admissible_alexander(K(3, 1), Slope(0, 1))
    assert admissible_alexander(K(5, 2), Slope(0, 1))


@settings(max_examples=100, deadline=None)
@given(knots())
def test_structure(k):
    d = alexander(k).delta
    assert abs(d(1)) == 1
    assert abs(d(-1)) == k.alpha
    assert d.coeffs[0] != 0 and d.lc > 0
    assert d.coeffs == d.coeffs[::-1]
    assert alexander(mirror(k)).delta == d
    assert alexander(K(k.alpha, k.beta_inverse)).delta == d
