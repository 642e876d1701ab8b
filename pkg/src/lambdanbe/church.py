"""Church numerals and the arithmetic corpus used by ``bench`` and the tests."""

from ._deep import deep
from .syntax import App, Lam, Var, parse_env

CHURCH_ENV_TEXT = """\
# Church arithmetic
zero = \\f.\\x. x
succ = \\n.\\f.\\x. f (n f x)
plus = \\m.\\n.\\f.\\x. m f (n f x)
mul = \\m.\\n.\\f. m (n f)
exp = \\m.\\n. n m
"""

CHURCH_ENV = dict(parse_env(CHURCH_ENV_TEXT))

OPERATIONS = ("plus", "mul", "exp")


class NotNumeral(ValueError):
    pass


@deep
def church_encode(n):
    if n < 0:
        raise ValueError("Church numerals are natural numbers")
    body = Var("x")
    for _ in range(n):
        body = App(Var("f"), body)
    return Lam("f", Lam("x", body))


def church_decode(t):
    """Inverse of :func:`church_encode` up to alpha; ``t`` must be normal."""
    if not (isinstance(t, Lam) and isinstance(t.body, Lam)):
        raise NotNumeral("expected two leading abstractions")
    f, x = t.binder, t.body.binder
    if f == x:
        raise NotNumeral("successor and zero binders coincide")
    n = 0
    body = t.body.body
    while isinstance(body, App):
        if body.fun != Var(f):
            raise NotNumeral("spine head is not the successor binder")
        n += 1
        body = body.arg
    if body != Var(x):
        raise NotNumeral("numeral does not end in the zero binder")
    return n


def church_case(op, a, b):
    """``op a b`` over literal numerals, e.g. ``church_case("exp", 2, 10)``."""
    return App(App(CHURCH_ENV[op], church_encode(a)), church_encode(b))


def expected_value(op, a, b):
    return {"plus": a + b, "mul": a * b, "exp": a ** b}[op]


def church_suite(max_n):
    """Cases ``plus n n``, ``mul n n``, ``exp 2 n`` for ``n`` in ``1..max_n``.

    Yields ``(label, term, expected)``.
    """
    for n in range(1, max_n + 1):
        for op, a, b in (("plus", n, n), ("mul", n, n), ("exp", 2, n)):
            yield f"{op} {a} {b}", church_case(op, a, b), expected_value(op, a, b)
