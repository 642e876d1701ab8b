"""Named lambda terms: parsing, printing, alpha-equivalence and grammar predicates.

Concrete syntax::

    term ::= \\x. term | λx. term | atom+ [\\x. term]
    atom ::= name | ( term )

Application is left-associative and binds tighter than an abstraction body,
which extends as far right as possible.  ``#`` starts a comment running to
the end of the line.  Identifiers starting with ``_`` are reserved for
machine-generated names (readback binders, CPS continuations, renamed
binders) and are rejected unless ``allow_reserved`` is set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ._deep import deep

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
USER_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Lam:
    binder: str
    body: Term


@dataclass(frozen=True, slots=True)
class App:
    fun: Term
    arg: Term


Term = Union[Var, Lam, App]


# Nameless terms, used only as a canonical form for alpha-equivalence.

@dataclass(frozen=True, slots=True)
class BVar:
    index: int


@dataclass(frozen=True, slots=True)
class FVar:
    name: str


@dataclass(frozen=True, slots=True)
class DLam:
    body: DbTerm


@dataclass(frozen=True, slots=True)
class DApp:
    fun: DbTerm
    arg: DbTerm


DbTerm = Union[BVar, FVar, DLam, DApp]


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownName(ParseError):
    pass


def is_reserved(name):
    return name.startswith("_")


# ---------------------------------------------------------------------------
# Parsing

_LAMBDAS = ("\\", "λ")
_PUNCT = {"(": "LPAREN", ")": "RPAREN", ".": "DOT"}


def _tokenize(text, line=1, column=1):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in _LAMBDAS:
            tokens.append(("LAMBDA", ch, line, column))
            i += 1
            column += 1
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, line, column))
            i += 1
            column += 1
            continue
        m = NAME_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {ch!r}", line, column)
        tokens.append(("NAME", m.group(), line, column))
        column += m.end() - i
        i = m.end()
    tokens.append(("EOF", "", line, column))
    return tokens


class _Parser:
    def __init__(self, text, allow_reserved, line=1, column=1):
        self.tokens = _tokenize(text, line, column)
        self.pos = 0
        self.allow_reserved = allow_reserved

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.advance()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {what}, found {found}", tok[2], tok[3])
        return tok

    def name(self):
        tok = self.expect("NAME", "identifier")
        if is_reserved(tok[1]) and not self.allow_reserved:
            raise ParseError(
                f"identifier {tok[1]!r} is reserved (leading '_')", tok[2], tok[3])
        return tok[1]

    def term(self):
        if self.peek()[0] == "LAMBDA":
            return self.lam()
        return self.application()

    def lam(self):
        self.advance()
        binder = self.name()
        self.expect("DOT", "'.' after binder")
        return Lam(binder, self.term())

    def application(self):
        head = self.atom()
        while True:
            kind = self.peek()[0]
            if kind in ("NAME", "LPAREN"):
                head = App(head, self.atom())
            elif kind == "LAMBDA":
                return App(head, self.lam())
            else:
                return head

    def atom(self):
        tok = self.peek()
        if tok[0] == "NAME":
            return Var(self.name())
        if tok[0] == "LPAREN":
            self.advance()
            inner = self.term()
            self.expect("RPAREN", "')'")
            return inner
        found = "end of input" if tok[0] == "EOF" else repr(tok[1])
        raise ParseError(f"expected a term, found {found}", tok[2], tok[3])

    def finish(self, t):
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(f"unexpected {tok[1]!r} after term", tok[2], tok[3])
        return t


@deep
def parse(text, *, allow_reserved=False, line=1, column=1):
    """Parse a single term.

    ``line``/``column`` offset the positions reported in :class:`ParseError`,
    for callers that parse a fragment of a larger file.
    """
    p = _Parser(text, allow_reserved, line, column)
    return p.finish(p.term())


def parse_env(text, *, strict=False, allow_reserved=False):
    """Parse ``name = term`` bindings, one per line.

    Each right-hand side has the earlier bindings inlined, so a
    self-contained file yields closed definitions.  Returns a list of
    ``(name, term)`` pairs in file order.
    """
    from .oracle import subst

    bindings = []
    defined = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            raise ParseError("expected 'name = term'", lineno, 1)
        lhs, rhs = line.split("=", 1)
        name = lhs.strip()
        if not USER_NAME_RE.match(name) and not (
                allow_reserved and NAME_RE.fullmatch(name)):
            raise ParseError(f"invalid binding name {name!r}", lineno,
                             len(lhs) - len(lhs.lstrip()) + 1)
        if name in defined:
            raise ParseError(f"duplicate binding {name!r}", lineno, 1)
        term = parse(rhs, allow_reserved=allow_reserved, line=lineno,
                     column=len(lhs) + 2)
        for ref in sorted(free_vars(term)):
            if ref in defined:
                term = subst(term, ref, defined[ref])
            elif strict:
                raise UnknownName(f"unknown name {ref!r} in binding {name!r}",
                                  lineno, len(lhs) + 2)
        defined[name] = term
        bindings.append((name, term))
    return bindings


def inline_env(t, bindings):
    """Substitute env definitions for the matching free names of ``t``."""
    from .oracle import subst

    for name, defn in reversed(bindings):
        if name in free_vars(t):
            t = subst(t, name, defn)
    return t


# ---------------------------------------------------------------------------
# Printing

@deep
def pretty(t, ascii=True):
    lam = "\\" if ascii else "λ"
    out = []

    def emit(t):
        if isinstance(t, Var):
            out.append(t.name)
        elif isinstance(t, Lam):
            out.append(f"{lam}{t.binder}. ")
            emit(t.body)
        else:
            if isinstance(t.fun, Lam):
                out.append("(")
                emit(t.fun)
                out.append(")")
            else:
                emit(t.fun)
            out.append(" ")
            if isinstance(t.arg, Var):
                emit(t.arg)
            else:
                out.append("(")
                emit(t.arg)
                out.append(")")

    emit(t)
    return "".join(out)


# ---------------------------------------------------------------------------
# Structural queries

@deep
def free_vars(t):
    out = set()

    def walk(t, bound):
        if isinstance(t, Var):
            if t.name not in bound:
                out.add(t.name)
        elif isinstance(t, Lam):
            walk(t.body, bound | {t.binder})
        else:
            walk(t.fun, bound)
            walk(t.arg, bound)

    walk(t, frozenset())
    return out


@deep
def all_names(t):
    """Every name occurring in ``t``, bound or free."""
    out = set()

    def walk(t):
        if isinstance(t, Var):
            out.add(t.name)
        elif isinstance(t, Lam):
            out.add(t.binder)
            walk(t.body)
        else:
            walk(t.fun)
            walk(t.arg)

    walk(t)
    return out


@deep
def size(t):
    """Node count."""
    if isinstance(t, Var):
        return 1
    if isinstance(t, Lam):
        return 1 + size(t.body)
    return 1 + size(t.fun) + size(t.arg)


@deep
def to_debruijn(t):
    def conv(t, scope):
        # scope: binder names, innermost last
        if isinstance(t, Var):
            for i in range(len(scope) - 1, -1, -1):
                if scope[i] == t.name:
                    return BVar(len(scope) - 1 - i)
            return FVar(t.name)
        if isinstance(t, Lam):
            scope.append(t.binder)
            body = conv(t.body, scope)
            scope.pop()
            return DLam(body)
        return DApp(conv(t.fun, scope), conv(t.arg, scope))

    return conv(t, [])


@deep
def alpha_eq(a, b):
    return to_debruijn(a) == to_debruijn(b)


@deep
def is_normal(t):
    while isinstance(t, Lam):
        t = t.body
    return is_neutral(t)


@deep
def is_neutral(t):
    while isinstance(t, App):
        if not is_normal(t.arg):
            return False
        t = t.fun
    return isinstance(t, Var)


@deep
def is_strict_cps(t):
    def value(v):
        return isinstance(v, Var) or (isinstance(v, Lam) and serious(v.body))

    def serious(t):
        if isinstance(t, App):
            return value(t.fun) and value(t.arg)
        return value(t)

    return serious(t)
