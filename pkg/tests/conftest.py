import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lambdanbe.gen import GenConfig, gen_normal, gen_strict_cps, gen_term

settings.register_profile(
    "default", max_examples=150, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1000, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


class DrawChooser:
    def __init__(self, draw):
        self.draw = draw

    def below(self, n):
        return self.draw(st.integers(0, n - 1))


@st.composite
def terms(draw, max_size=16):
    return gen_term(DrawChooser(draw), GenConfig(max_size=max_size))


@st.composite
def normal_terms(draw, max_size=16):
    return gen_normal(DrawChooser(draw), GenConfig(max_size=max_size))


@st.composite
def cps_terms(draw, max_size=16):
    return gen_strict_cps(DrawChooser(draw), GenConfig(max_size=max_size))


# Acceptance criteria report: test_acceptance.py appends (name, ok, detail).
ACCEPTANCE = []


def record(name, ok, detail=""):
    ACCEPTANCE.append((name, bool(ok), detail))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
