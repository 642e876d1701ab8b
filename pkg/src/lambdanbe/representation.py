"""Higher-order representation of terms: quote into HOAS, read back to syntax.

Abstractions are represented by Python callables ``Rep -> Rep``.  Reading a
representation back applies each such callable to a fresh variable named by
its de Bruijn level, which is how the trivial self-interpreter is realized
as a first-order function here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from ._deep import deep
from .oracle import Diverged, Normalized, OutOfFuel, as_budget
from .syntax import App, Lam, Var


@dataclass(frozen=True, slots=True)
class Free:
    name: str


@dataclass(frozen=True, slots=True)
class Bound:
    level: int


VarId = Union[Free, Bound]


@dataclass(frozen=True, slots=True)
class RVar:
    id: VarId


@dataclass(frozen=True, slots=True, eq=False)
class RLam:
    body: Callable[["Rep"], "Rep"]
    # set by a normalizer to recognize abstractions it already wrapped
    tag: object = None


@dataclass(frozen=True, slots=True)
class RApp:
    fun: Rep
    arg: Rep


Rep = Union[RVar, RLam, RApp]


def _quote(t, env):
    if isinstance(t, Var):
        r = env.get(t.name)
        return RVar(Free(t.name)) if r is None else r
    if isinstance(t, Lam):
        binder, body = t.binder, t.body
        return RLam(lambda r: _quote(body, {**env, binder: r}))
    return RApp(_quote(t.fun, env), _quote(t.arg, env))


@deep
def quote(t, env=None):
    """Structural image of ``t``; performs no reduction.

    Free variables not mapped by ``env`` become ``RVar(Free(name))``.
    """
    return _quote(t, env or {})


def bound_name(level):
    return f"_{level}"


def _readback(r, depth):
    if isinstance(r, RVar):
        if isinstance(r.id, Free):
            return Var(r.id.name)
        return Var(bound_name(r.id.level))
    if isinstance(r, RLam):
        body = r.body(RVar(Bound(depth)))
        return Lam(bound_name(depth), _readback(body, depth + 1))
    return App(_readback(r.fun, depth), _readback(r.arg, depth))


@deep
def readback(r, depth=0):
    """Residualize ``r`` into a named term with binders ``_<level>``.

    ``depth`` must be at least the number of bound levels already in scope.
    Any fuel-charging work deferred inside ``RLam`` bodies happens here, so
    :class:`OutOfFuel` may escape.
    """
    return _readback(r, depth)


@deep
def has_rep_redex(r, depth=0):
    """True if some ``RApp`` has an ``RLam`` operator, opening binders as readback does."""
    if isinstance(r, RVar):
        return False
    if isinstance(r, RLam):
        return has_rep_redex(r.body(RVar(Bound(depth))), depth + 1)
    if isinstance(r.fun, RLam):
        return True
    return has_rep_redex(r.fun, depth) or has_rep_redex(r.arg, depth)


@deep
def e_nf(t, fuel):
    """Self-interpreter composed with the call-by-name self-reducer."""
    from .normalizers import norm_cbn

    fuel = as_budget(fuel)
    try:
        return Normalized(readback(norm_cbn(quote(t), fuel), 0), fuel.used)
    except OutOfFuel:
        return Diverged(fuel.used)
