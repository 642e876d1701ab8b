"""Size-bounded random term generators.

Generators take a *chooser*: any object with ``below(n) -> int`` returning
a value in ``range(n)``.  :class:`RandomChooser` wraps :mod:`random` for
seeded corpora; the test suite supplies one backed by hypothesis ``draw``
so that shrinking works on the same code path.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .syntax import App, Lam, Var


@dataclass(frozen=True)
class GenConfig:
    max_size: int = 30
    min_size: int = 1
    free_names: tuple = ("a", "b", "c")
    binder_names: tuple = ("x", "y", "z", "w")
    # variables may refer to at most this many innermost binders
    scope_depth: int = 3


class RandomChooser:
    def __init__(self, seed=0):
        self.rng = random.Random(seed)

    def below(self, n):
        return self.rng.randrange(n)


def _draw_size(chooser, cfg):
    low = min(cfg.min_size, cfg.max_size)
    return low + chooser.below(cfg.max_size - low + 1)


def _pick(chooser, items):
    return items[chooser.below(len(items))]


def _variable(chooser, scope, cfg):
    visible = []
    for name in reversed(scope):
        if name not in visible:
            visible.append(name)
        if len(visible) == cfg.scope_depth:
            break
    # bound occurrences are what make reduction interesting
    if visible and chooser.below(4) != 0:
        return Var(_pick(chooser, visible))
    return Var(_pick(chooser, cfg.free_names))


def gen_term(chooser, cfg=GenConfig(), size=None, scope=()):
    """Arbitrary term with exactly ``size`` nodes (drawn from min_size..max_size if omitted)."""
    if size is None:
        size = _draw_size(chooser, cfg)
    if size == 1:
        return _variable(chooser, scope, cfg)
    if size == 2 or chooser.below(3) == 0:
        return _gen_lam(chooser, cfg, size, scope)
    left = 1 + chooser.below(size - 2)
    if left >= 2 and chooser.below(2) == 0:
        # plant a redex
        fun = _gen_lam(chooser, cfg, left, scope)
    else:
        fun = gen_term(chooser, cfg, left, scope)
    return App(fun, gen_term(chooser, cfg, size - 1 - left, scope))


def _gen_lam(chooser, cfg, size, scope):
    x = _pick(chooser, cfg.binder_names)
    return Lam(x, gen_term(chooser, cfg, size - 1, scope + (x,)))


def gen_normal(chooser, cfg=GenConfig(), size=None, scope=()):
    """Beta-normal term of at most ``size`` nodes, following the Term_NF grammar."""
    if size is None:
        size = _draw_size(chooser, cfg)
    if size >= 2 and chooser.below(2) == 0:
        x = _pick(chooser, cfg.binder_names)
        return Lam(x, gen_normal(chooser, cfg, size - 1, scope + (x,)))
    return _gen_neutral(chooser, cfg, size, scope)


def _gen_neutral(chooser, cfg, size, scope):
    if size < 3 or chooser.below(3) == 0:
        return _variable(chooser, scope, cfg)
    left = 1 + chooser.below(size - 2)
    return App(_gen_neutral(chooser, cfg, left, scope),
               gen_normal(chooser, cfg, size - 1 - left, scope))


def gen_strict_cps(chooser, cfg=GenConfig(), size=None, scope=()):
    """Term of at most ``size`` nodes generated by ``t ::= v | v v``, ``v ::= x | λx.t``."""
    if size is None:
        size = _draw_size(chooser, cfg)
    if size >= 3 and chooser.below(3) != 0:
        left = 1 + chooser.below(size - 2)
        return App(_gen_value(chooser, cfg, left, scope),
                   _gen_value(chooser, cfg, size - 1 - left, scope))
    return _gen_value(chooser, cfg, size, scope)


def _gen_value(chooser, cfg, size, scope):
    if size >= 2 and chooser.below(4) != 0:
        x = _pick(chooser, cfg.binder_names)
        return Lam(x, gen_strict_cps(chooser, cfg, size - 1, scope + (x,)))
    return _variable(chooser, scope, cfg)


def corpus(kind, count, seed=0, cfg=GenConfig()):
    """``count`` seeded terms from generator ``kind`` (``term``, ``normal``, ``cps``)."""
    gen = {"term": gen_term, "normal": gen_normal, "cps": gen_strict_cps}[kind]
    chooser = RandomChooser(seed)
    return [gen(chooser, cfg) for _ in range(count)]
