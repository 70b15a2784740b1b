import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cqsext.divisors import WeilDivisor
from cqsext.lattice import coprime_pairs

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_PAIRS = coprime_pairs(12)


@st.composite
def nq(draw, max_n=12):
    return draw(st.sampled_from([p for p in SMALL_PAIRS if p[0] <= max_n]))


@st.composite
def nq_and_divisor(draw, max_n=12, spread=3):
    n, q = draw(nq(max_n))
    a = st.integers(-spread * n, spread * n)
    return n, q, WeilDivisor(draw(a), draw(a))


@st.composite
def nq_and_two_divisors(draw, max_n=12, spread=2):
    n, q = draw(nq(max_n))
    a = st.integers(-spread * n, spread * n)
    return n, q, WeilDivisor(draw(a), draw(a)), WeilDivisor(draw(a), draw(a))


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
