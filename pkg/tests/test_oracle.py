import pytest
from hypothesis import assume, given

from lambdanbe.church import church_encode
from lambdanbe.oracle import (
    Budget, Diverged, Fresh, Normalized, OutOfFuel, beta_step_normal_order,
    oracle_normalize, oracle_normalize_stepwise, oracle_whnf, subst,
)
from lambdanbe.syntax import App, Lam, Var, alpha_eq, free_vars, is_normal, parse

from conftest import terms

OMEGA = parse(r"(\x.x x)(\x.x x)")


def test_budget_counts_and_stops():
    b = Budget(2)
    b.spend()
    b.spend()
    with pytest.raises(OutOfFuel):
        b.spend()
    assert b.used == 2


def test_subst_renames_capturing_binder():
    out = subst(parse(r"\y.x"), "x", Var("y"))
    assert alpha_eq(out, parse(r"\z.y"))
    assert out.binder.startswith("_")


def test_subst_duplicates():
    assert subst(parse("x x"), "x", parse(r"\y.y")) == parse(r"(\y.y) (\y.y)")


def test_subst_respects_shadowing():
    assert subst(parse(r"\x.x"), "x", Var("z")) == parse(r"\x.x")


def test_fresh_skips_names_in_use():
    fresh = Fresh(parse(r"\_3. _3", allow_reserved=True))
    assert fresh() == "_4"


@pytest.mark.parametrize("text, expected", [
    (r"(\x.x) y", "y"),
    (r"(\x.\y.x) ((\z.z) w)", r"\y.(\z.z) w"),
])
def test_beta_step(text, expected):
    assert alpha_eq(beta_step_normal_order(parse(text)), parse(expected))


def test_beta_step_no_redex():
    assert beta_step_normal_order(parse(r"\x.x")) is None


def test_oracle_normalize_identity():
    assert oracle_normalize(parse(r"(\x.x) y"), Budget(100)) == Normalized(Var("y"), 1)


def test_oracle_normalize_omega():
    assert oracle_normalize(OMEGA, Budget(1000)) == Diverged(1000)


def test_oracle_church_plus():
    plus = parse(r"\m.\n.\f.\x. m f (n f x)")
    t = App(App(plus, church_encode(2)), church_encode(3))
    out = oracle_normalize(t, Budget(10_000))
    assert isinstance(out, Normalized)
    assert alpha_eq(out.result, church_encode(5))


def test_oracle_whnf_leaves_body():
    out = oracle_whnf(parse(r"(\x.x) (\y.(\z.z) y)"), Budget(100))
    assert out == Normalized(parse(r"\y.(\z.z) y"), 1)


def test_oracle_whnf_leaves_argument():
    t = parse(r"x ((\y.y) z)")
    assert oracle_whnf(t, Budget(100)) == Normalized(t, 0)


def test_oracle_whnf_omega():
    assert oracle_whnf(OMEGA, Budget(50)) == Diverged(50)


def test_exact_fuel_is_enough():
    t = parse(r"(\x.x) ((\x.x) y)")
    assert oracle_normalize(t, 2) == Normalized(Var("y"), 2)
    assert oracle_normalize(t, 1) == Diverged(1)


@given(terms())
def test_spine_machine_matches_stepwise_iteration(t):
    fast = oracle_normalize(t, 500)
    slow = oracle_normalize_stepwise(t, 500)
    assert type(fast) is type(slow)
    assert fast.steps == slow.steps
    if isinstance(fast, Normalized):
        assert alpha_eq(fast.result, slow.result)


@given(terms())
def test_normal_form_is_normal_and_fixed(t):
    out = oracle_normalize(t, 2000)
    assume(isinstance(out, Normalized))
    assert is_normal(out.result)
    again = oracle_normalize(out.result, 2000)
    assert again.steps == 0 and alpha_eq(again.result, out.result)


@given(terms())
def test_fuel_monotonicity(t):
    out = oracle_normalize(t, 2000)
    assume(isinstance(out, Normalized))
    for fuel in (out.steps, out.steps + 1, 10 * out.steps + 7):
        more = oracle_normalize(t, fuel)
        assert isinstance(more, Normalized) and alpha_eq(more.result, out.result)
    if out.steps:
        assert isinstance(oracle_normalize(t, out.steps - 1), Diverged)


def one_step_reducts(t):
    """Every term obtained by contracting exactly one redex of ``t``."""
    if isinstance(t, Var):
        return
    if isinstance(t, Lam):
        for r in one_step_reducts(t.body):
            yield Lam(t.binder, r)
        return
    if isinstance(t.fun, Lam):
        yield subst(t.fun.body, t.fun.binder, t.arg)
    for r in one_step_reducts(t.fun):
        yield App(r, t.arg)
    for r in one_step_reducts(t.arg):
        yield App(t.fun, r)


@given(terms(max_size=12))
def test_confluence(t):
    out = oracle_normalize(t, 2000)
    assume(isinstance(out, Normalized))
    for reduct in one_step_reducts(t):
        other = oracle_normalize(reduct, 4000)
        if isinstance(other, Normalized):
            assert alpha_eq(other.result, out.result)


@given(terms(), terms(max_size=6))
def test_subst_round_trip(t, s):
    z = "zz"
    assert z not in free_vars(t)
    assert alpha_eq(subst(subst(t, "x", Var(z)), z, Var("x")), t)


@given(terms(), terms(max_size=6))
def test_subst_free_vars(t, s):
    out = subst(t, "a", s)
    expected = free_vars(t) - {"a"}
    if "a" in free_vars(t):
        expected |= free_vars(s)
    assert free_vars(out) == expected
