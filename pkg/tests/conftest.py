from fractions import Fraction

from hypothesis import strategies as st

from chebsum.exactnum import GaussianRational

small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=60)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(lambda g: not g.is_zero())


def as_complex_fractions(g):
    return (Fraction(g.re), Fraction(g.im))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
