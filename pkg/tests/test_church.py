import pytest

from lambdanbe.church import (
    CHURCH_ENV, NotNumeral, church_case, church_decode, church_encode, church_suite,
)
from lambdanbe.normalizers import nbe
from lambdanbe.oracle import oracle_normalize
from lambdanbe.syntax import alpha_eq, parse


def test_encode_zero():
    assert church_encode(0) == parse(r"\f.\x.x")


@pytest.mark.parametrize("n", [0, 1, 7, 100])
def test_round_trip(n):
    assert church_decode(church_encode(n)) == n


def test_decode_alpha_renamed():
    assert church_decode(parse(r"\s.\z. s (s z)")) == 2


@pytest.mark.parametrize("text", [r"\x.x", r"\f.\f.f f", r"\f.\x.f x x", "y", r"\f.\x.x f"])
def test_decode_rejects(text):
    with pytest.raises(NotNumeral):
        church_decode(parse(text))


def test_exp_2_3_via_nbe():
    t = church_case("exp", 2, 3)
    out = nbe(t, 10_000)
    assert church_decode(out.result) == 8
    assert alpha_eq(out.result, oracle_normalize(t, 10_000).result)


def test_env_definitions_are_closed():
    assert set(CHURCH_ENV) >= {"plus", "mul", "exp"}


def test_suite_cases():
    labels = [label for label, _, _ in church_suite(2)]
    assert labels == ["plus 1 1", "mul 1 1", "exp 2 1", "plus 2 2", "mul 2 2", "exp 2 2"]
