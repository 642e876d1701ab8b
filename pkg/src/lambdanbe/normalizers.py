"""Evaluators and normalizers over the higher-order representation.

Five algorithms, each a direct transcription over :mod:`representation`:

* ``eval_whnf``: call-by-name evaluator; abstractions are values.
* ``norm_cbn``: the same evaluator with the recursive call moved under the
  binder, which makes it a normalizer (the self-reducer).
* ``norm_cbv``: normalizes the argument before applying an abstraction.
* ``norm_cps``: specialization to strict-CPS terms, with application
  factored out into ``app_cps``.
* ``nbe``: ``interp`` performs semantic application while building the
  representation; ``norm_residual`` only walks the remaining neutral nodes.

Work under an ``RLam`` is deferred until the body is applied, usually by
:func:`readback`, so a Budget stays live until readback finishes.
"""

from __future__ import annotations

import enum

from ._deep import deep
from .oracle import Diverged, Normalized, OutOfFuel, as_budget
from .representation import Free, RApp, RLam, RVar, quote, readback
from .syntax import App, Lam, Var


class Strategy(enum.Enum):
    WHNF = "whnf"
    CBN = "cbn"
    CBV = "cbv"
    CPS = "cps"
    NBE = "nbe"

    @classmethod
    def parse(cls, s):
        if isinstance(s, cls):
            return s
        try:
            return cls(s.lower())
        except ValueError:
            raise ValueError(
                f"unknown strategy {s!r}; choose from "
                + ", ".join(m.value for m in cls)) from None


class NotCPS(Exception):
    """An application node whose operator is itself an application.

    ``path`` lists the moves (``"body"``, ``"arg"``) from the root of the
    term being normalized, as it stands after the reductions performed so
    far, down to the offending node.
    """

    def __init__(self, path=()):
        self.path = tuple(path)
        where = "/".join(self.path) or "root"
        super().__init__(f"application in operator position at {where}")


@deep
def eval_whnf(r, fuel):
    fuel = as_budget(fuel)

    def ev(r):
        if isinstance(r, RApp):
            f = ev(r.fun)
            if isinstance(f, RLam):
                fuel.spend()
                return ev(f.body(r.arg))
            # the neutral case evaluates the argument too
            return RApp(f, ev(r.arg))
        return r

    return ev(r)


@deep
def norm_cbn(r, fuel):
    fuel = as_budget(fuel)

    def norm(r):
        if isinstance(r, RVar):
            return r
        if isinstance(r, RLam):
            f = r.body
            return RLam(lambda x: norm(f(x)))
        t0 = norm(r.fun)
        if isinstance(t0, RLam):
            fuel.spend()
            # t0's body already normalizes its result
            return t0.body(r.arg)
        return RApp(t0, norm(r.arg))

    return norm(r)


@deep
def norm_cbv(r, fuel):
    fuel = as_budget(fuel)

    def norm(r):
        if isinstance(r, RVar):
            return r
        if isinstance(r, RLam):
            # Normalized arguments get substituted into unnormalized bodies;
            # rewrapping them would nest one more layer per beta step.
            if r.tag is norm:
                return r
            f = r.body
            return RLam(lambda x: norm(f(x)), tag=norm)
        t0 = norm(r.fun)
        if isinstance(t0, RLam):
            arg = norm(r.arg)
            fuel.spend()
            return t0.body(arg)
        return RApp(t0, norm(r.arg))

    return norm(r)


def app_cps(f, a, path=()):
    """Application restricted to strict-CPS operators.  Fuel is the caller's."""
    if isinstance(f, RLam):
        return f.body(a)
    if isinstance(f, RVar):
        return RApp(f, a)
    raise NotCPS(path)


@deep
def norm_cps(r, fuel):
    fuel = as_budget(fuel)

    def norm(r, path):
        if isinstance(r, RVar):
            return r
        if isinstance(r, RLam):
            f = r.body
            inner = path + ("body",)
            return RLam(lambda x: norm(f(x), inner))
        if isinstance(r.fun, RLam):
            fuel.spend()
            return norm(app_cps(r.fun, r.arg, path), path)
        # A variable head leaves a neutral node; normalizing it again would
        # loop, so use App (Var x) (norm t1) in place of norm (App (Var x) t1).
        neutral = app_cps(r.fun, r.arg, path)
        return RApp(neutral.fun, norm(neutral.arg, path + ("arg",)))

    return norm(r, ())


def app_sem(f, a, fuel):
    """Semantic application: beta when ``f`` is an abstraction, else a neutral node."""
    if isinstance(f, RLam):
        fuel.spend()
        return f.body(a)
    return RApp(f, a)


def _interp(t, env, fuel):
    if isinstance(t, Var):
        r = env.get(t.name)
        return RVar(Free(t.name)) if r is None else r
    if isinstance(t, Lam):
        binder, body = t.binder, t.body
        return RLam(lambda r: _interp(body, {**env, binder: r}, fuel))
    return app_sem(_interp(t.fun, env, fuel), _interp(t.arg, env, fuel), fuel)


@deep
def interp(t, env=None, fuel=100_000):
    """Interpret ``t`` with applications collapsed by :func:`app_sem`."""
    return _interp(t, env or {}, as_budget(fuel))


@deep
def norm_residual(r, fuel=None):
    """Residual normalizer for representations built by :func:`interp`.

    Descends into both sides of an application: direct-style terms leave
    neutral spines ``x a b`` whose inner arguments still need the walk.
    ``fuel`` is accepted for symmetry; the beta steps are charged by the
    ``interp`` closures being forced.
    """

    def norm(r):
        if isinstance(r, RVar):
            return r
        if isinstance(r, RLam):
            f = r.body
            return RLam(lambda x: norm(f(x)))
        return RApp(norm(r.fun), norm(r.arg))

    return norm(r)


@deep
def nbe(t, fuel):
    fuel = as_budget(fuel)
    try:
        return Normalized(readback(norm_residual(interp(t, {}, fuel), fuel), 0),
                          fuel.used)
    except OutOfFuel:
        return Diverged(fuel.used)


_REP_PIPELINES = {
    Strategy.WHNF: eval_whnf,
    Strategy.CBN: norm_cbn,
    Strategy.CBV: norm_cbv,
    Strategy.CPS: norm_cps,
}


@deep
def normalize(t, strategy, fuel):
    """Run one strategy on ``t``.  Raises :class:`NotCPS` for the CPS strategy only."""
    strategy = Strategy.parse(strategy)
    fuel = as_budget(fuel)
    if strategy is Strategy.NBE:
        return nbe(t, fuel)
    run = _REP_PIPELINES[strategy]
    try:
        return Normalized(readback(run(quote(t), fuel), 0), fuel.used)
    except OutOfFuel:
        return Diverged(fuel.used)
