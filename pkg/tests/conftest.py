from fractions import Fraction

from hypothesis import strategies as st

from eulerchi.exact_arith import CycloRational, euler_phi

ORDERS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)

small_fractions = st.builds(
    Fraction, st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=12)
)


@st.composite
def cyclo(draw, order=None):
    m = draw(st.sampled_from(ORDERS)) if order is None else order
    coeffs = draw(st.lists(small_fractions, min_size=euler_phi(m), max_size=euler_phi(m)))
    return CycloRational(m, coeffs)


# one line per acceptance criterion, filled by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
