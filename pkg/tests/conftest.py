from math import gcd

from hypothesis import strategies as st

from twobridge.knots import TwoBridgeKnot


def all_knots(max_alpha):
    return [TwoBridgeKnot(a, b) for a in range(3, max_alpha + 1, 2)
            for b in range(1, a) if gcd(a, b) == 1]


@st.composite
def knots(draw, max_alpha=99):
    a = draw(st.integers(1, (max_alpha - 1) // 2)) * 2 + 1
    b = draw(st.integers(1, a - 1).filter(lambda b: gcd(a, b) == 1))
    return TwoBridgeKnot(a, b)


@st.composite
def slopes(draw, bound=30):
    from twobridge.knots import Slope

    p = draw(st.integers(-bound, bound))
    q = draw(st.integers(0, bound))
    if q == 0:
        return Slope(1, 0)
    return Slope.of(p, q)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
