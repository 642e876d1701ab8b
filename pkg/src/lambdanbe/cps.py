"""Plotkin-style CPS transforms (call-by-name and call-by-value).

Continuation and value names are drawn from one counter per call, in the
reserved namespace: ``_k<i>``, ``_m<i>``, ``_n<i>``.  The output contains
administrative redexes; the normalizers remove them.
"""

from __future__ import annotations

import enum
import re

from ._deep import deep
from .oracle import as_budget, oracle_normalize
from .syntax import App, Lam, Var, all_names

_CPS_NAME = re.compile(r"_[kmn](\d+)\Z")

IDENTITY = Lam("a", Var("a"))


class CpsVariant(enum.Enum):
    BY_NAME = "cbn"
    BY_VALUE = "cbv"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        aliases = {"cbn": cls.BY_NAME, "byname": cls.BY_NAME, "name": cls.BY_NAME,
                   "cbv": cls.BY_VALUE, "byvalue": cls.BY_VALUE, "value": cls.BY_VALUE}
        try:
            return aliases[s.lower().replace("_", "")]
        except KeyError:
            raise ValueError(f"unknown CPS variant {s!r}; choose cbn or cbv") from None


class _Names:
    def __init__(self, t):
        start = 0
        for name in all_names(t):
            m = _CPS_NAME.match(name)
            if m:
                start = max(start, int(m.group(1)) + 1)
        self.counter = start

    def __call__(self, prefix):
        name = f"_{prefix}{self.counter}"
        self.counter += 1
        return name


@deep
def cps_cbn(t):
    fresh = _Names(t)

    def c(t):
        if isinstance(t, Var):
            return t
        if isinstance(t, Lam):
            k = fresh("k")
            return Lam(k, App(Var(k), Lam(t.binder, c(t.body))))
        k = fresh("k")
        fun = c(t.fun)
        m = fresh("m")
        arg = c(t.arg)
        return Lam(k, App(fun, Lam(m, App(App(Var(m), arg), Var(k)))))

    return c(t)


@deep
def cps_cbv(t):
    fresh = _Names(t)

    def c(t):
        if isinstance(t, Var):
            k = fresh("k")
            return Lam(k, App(Var(k), t))
        if isinstance(t, Lam):
            k = fresh("k")
            return Lam(k, App(Var(k), Lam(t.binder, c(t.body))))
        k = fresh("k")
        fun = c(t.fun)
        m = fresh("m")
        arg = c(t.arg)
        n = fresh("n")
        inner = Lam(n, App(App(Var(m), Var(n)), Var(k)))
        return Lam(k, App(fun, Lam(m, App(arg, inner))))

    return c(t)


def cps(t, variant=CpsVariant.BY_NAME):
    variant = CpsVariant.parse(variant)
    return cps_cbn(t) if variant is CpsVariant.BY_NAME else cps_cbv(t)


def observe_cps(t, variant, fuel):
    """Apply the CPS image of ``t`` to the identity continuation and normalize it."""
    return oracle_normalize(App(cps(t, variant), IDENTITY), as_budget(fuel))
