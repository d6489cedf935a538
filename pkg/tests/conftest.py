from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from conformalk.scalar import GaussScalar

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def gauss(draw, nonzero=False):
    re = draw(fractions)
    im = draw(fractions)
    if nonzero and re == 0 and im == 0:
        re = Fraction(1)
    return GaussScalar(re, im)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(RESULTS):
        title, ok, detail = RESULTS[num]
        tr.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
