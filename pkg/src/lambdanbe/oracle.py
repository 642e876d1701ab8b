"""First-order reference semantics: capture-avoiding substitution and normal order.

Everything else in the package is checked against :func:`oracle_normalize`.
It is deliberately naive: no sharing, no environments, no de Bruijn tricks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ._deep import deep
from .syntax import App, Lam, Term, Var, all_names, free_vars

_GENERATED = re.compile(r"_(\d+)\Z")


class OutOfFuel(Exception):
    """Raised by :meth:`Budget.spend` when the beta-step limit is reached."""

    def __init__(self, steps):
        super().__init__(f"fuel exhausted after {steps} beta steps")
        self.steps = steps


@dataclass
class Budget:
    """Beta-step fuel.  One instance per normalization call."""

    limit: int
    used: int = 0

    def spend(self):
        if self.used >= self.limit:
            raise OutOfFuel(self.used)
        self.used += 1

    @property
    def remaining(self):
        return self.limit - self.used


def as_budget(fuel):
    if isinstance(fuel, Budget):
        return fuel
    return Budget(int(fuel))


@dataclass(frozen=True)
class Normalized:
    result: Term
    steps: int


@dataclass(frozen=True)
class Diverged:
    steps: int


NormOutcome = Union[Normalized, Diverged]


class Fresh:
    """Supply of ``_n`` names that never clash with names already in play."""

    def __init__(self, *terms):
        start = 0
        for t in terms:
            for name in all_names(t):
                m = _GENERATED.match(name)
                if m:
                    start = max(start, int(m.group(1)) + 1)
        self.counter = start

    def __call__(self):
        name = f"_{self.counter}"
        self.counter += 1
        return name


def _subst(t, x, s, fv_s, fresh):
    if isinstance(t, Var):
        return s if t.name == x else t
    if isinstance(t, App):
        return App(_subst(t.fun, x, s, fv_s, fresh), _subst(t.arg, x, s, fv_s, fresh))
    if t.binder == x:
        return t
    if t.binder in fv_s:
        z = fresh()
        body = _subst(t.body, t.binder, Var(z), {z}, fresh)
        return Lam(z, _subst(body, x, s, fv_s, fresh))
    return Lam(t.binder, _subst(t.body, x, s, fv_s, fresh))


@deep
def subst(t, x, s, fresh=None):
    """``t[x := s]``, renaming binders of ``t`` that would capture free names of ``s``."""
    if fresh is None:
        fresh = Fresh(t, s, Var(x))
    return _subst(t, x, s, free_vars(s), fresh)


def _contract(redex, fresh):
    lam = redex.fun
    return _subst(lam.body, lam.binder, redex.arg, free_vars(redex.arg), fresh)


def _step(t, fresh):
    if isinstance(t, App):
        if isinstance(t.fun, Lam):
            return _contract(t, fresh)
        reduced = _step(t.fun, fresh)
        if reduced is not None:
            return App(reduced, t.arg)
        reduced = _step(t.arg, fresh)
        if reduced is not None:
            return App(t.fun, reduced)
        return None
    if isinstance(t, Lam):
        reduced = _step(t.body, fresh)
        return None if reduced is None else Lam(t.binder, reduced)
    return None


@deep
def beta_step_normal_order(t, fresh=None):
    """Contract the leftmost-outermost redex once; ``None`` if ``t`` is normal."""
    if fresh is None:
        fresh = Fresh(t)
    return _step(t, fresh)


@deep
def oracle_normalize_stepwise(t, fuel):
    """Normal form by literally iterating :func:`beta_step_normal_order`.

    Quadratic in practice; kept as the reference that
    :func:`oracle_normalize` is tested against.
    """
    fuel = as_budget(fuel)
    fresh = Fresh(t)
    while True:
        nxt = _step(t, fresh)
        if nxt is None:
            return Normalized(t, fuel.used)
        try:
            fuel.spend()
        except OutOfFuel:
            return Diverged(fuel.used)
        t = nxt


def _head_reduce(t, fuel, fresh):
    # Leftmost-outermost contraction restricted to the head: unwind the
    # application spine, contract while the head is an abstraction with a
    # pending argument.  Returns (head, args) with args[-1] the first argument.
    args = []
    while True:
        if isinstance(t, App):
            args.append(t.arg)
            t = t.fun
        elif isinstance(t, Lam) and args:
            fuel.spend()
            arg = args.pop()
            t = _subst(t.body, t.binder, arg, free_vars(arg), fresh)
        else:
            return t, args


def _normal_order(t, fuel, fresh):
    head, args = _head_reduce(t, fuel, fresh)
    if isinstance(head, Lam):
        return Lam(head.binder, _normal_order(head.body, fuel, fresh))
    for arg in reversed(args):
        head = App(head, _normal_order(arg, fuel, fresh))
    return head


@deep
def oracle_normalize(t, fuel):
    """Normal-order normal form of ``t``, or :class:`Diverged` when fuel runs out.

    Performs the same contractions, in the same order, as iterating
    :func:`beta_step_normal_order`: head redexes first, then the body of a
    head abstraction, or the arguments of a head variable left to right.
    The spine is kept on a list so a step does not re-walk the term.
    """
    fuel = as_budget(fuel)
    try:
        return Normalized(_normal_order(t, fuel, Fresh(t)), fuel.used)
    except OutOfFuel:
        return Diverged(fuel.used)


@deep
def oracle_whnf(t, fuel):
    """Contract head redexes only; never under a binder or inside an argument."""
    fuel = as_budget(fuel)
    try:
        head, args = _head_reduce(t, fuel, Fresh(t))
    except OutOfFuel:
        return Diverged(fuel.used)
    for arg in reversed(args):
        head = App(head, arg)
    return Normalized(head, fuel.used)
