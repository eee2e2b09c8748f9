"""Named surface syntax: parsing, resolution to de Bruijn form, and printing.

Grammar (whitespace-insensitive)::

    term ::= lam | app
    lam  ::= ('\\' | 'λ') [IDENT] '.' term
    app  ::= atom+ [lam]          left-associative
    atom ::= IDENT | INDEX | '(' term ')'

A bare number is a de Bruijn index (0 is the innermost binder). A λ without
a binder name can only be referred to by index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import count
from typing import Iterator, Sequence, Union

from ..errors import ParseError, UnboundName
from ..relev import Bind, Relev, RPair, UnitLeaf
from ..universe import Con, Hash, TagB
from .syntax import app, lam, var, view

# -- named terms ----------------------------------------------------------------


@dataclass(frozen=True)
class NVar:
    name: str


@dataclass(frozen=True)
class NApp:
    fun: "NamedTerm"
    arg: "NamedTerm"


@dataclass(frozen=True)
class NLam:
    name: str | None
    body: "NamedTerm"


NamedTerm = Union[NVar, NApp, NLam]

# -- parsing ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<lam>[\\λ])|(?P<dot>\.)|(?P<open>\()|(?P<close>\))"
                    r"|(?P<index>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*))")


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            out.append(("end", "", pos))
            return out
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str) -> str:
        k, v, pos = self.toks[self.i]
        if k != kind:
            what = "end of input" if k == "end" else repr(v)
            raise ParseError(f"expected {kind}, found {what}", pos)
        self.i += 1
        return v

    def term(self) -> NamedTerm:
        if self.peek() == "lam":
            return self.lam()
        return self.app()

    def lam(self) -> NamedTerm:
        self.take("lam")
        name = self.take("ident") if self.peek() == "ident" else None
        self.take("dot")
        return NLam(name, self.term())

    def app(self) -> NamedTerm:
        t = self.atom()
        while self.peek() in ("ident", "index", "open", "lam"):
            if self.peek() == "lam":
                return NApp(t, self.lam())
            t = NApp(t, self.atom())
        return t

    def atom(self) -> NamedTerm:
        match self.peek():
            case "ident":
                return NVar(self.take("ident"))
            case "index":
                return NVar(self.take("index"))
            case "open":
                self.take("open")
                t = self.term()
                self.take("close")
                return t
        k, v, pos = self.toks[self.i]
        raise ParseError("expected a term, found " + ("end of input" if k == "end" else repr(v)), pos)


def parse(text: str) -> NamedTerm:
    p = _Parser(text)
    t = p.term()
    p.take("end")
    return t


def resolve(t: NamedTerm, env: Sequence[str] = ()):
    """De Bruijn form over a scope of ``len(env)`` variables named oldest first."""

    def go(t, names: list[str | None]):
        n = len(names)
        match t:
            case NVar(name) if name.isdigit():
                i = int(name)
                if i >= n:
                    raise UnboundName(name)
                return var(n - 1 - i)
            case NVar(name):
                for x in range(n - 1, -1, -1):
                    if names[x] == name:
                        return var(x)
                raise UnboundName(name)
            case NApp(f, a):
                return app(go(f, names), go(a, names))
            case NLam(name, b):
                return lam(go(b, names + [name]))

    return go(t, list(env))


def parse_term(text: str, env: Sequence[str] = ()):
    return resolve(parse(text), env)


# -- printing -----------------------------------------------------------------------


def fresh_names() -> Iterator[str]:
    """``a`` … ``z``, then ``a1`` … ``z1``, and so on."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    yield from letters
    for n in count(1):
        for c in letters:
            yield f"{c}{n}"


def binder_names(env: Sequence[str]) -> Iterator[str]:
    taken = set(env)
    return (x for x in fresh_names() if x not in taken)


def pretty_named(t, env: Sequence[str] = ()) -> str:
    """Binders are named by depth, so no name is ever captured."""
    supply = binder_names(env)
    names_by_depth: list[str] = []

    def name_at(depth: int) -> str:
        while len(names_by_depth) <= depth:
            names_by_depth.append(next(supply))
        return names_by_depth[depth]

    def go(t, names: list[str]) -> str:
        match view(t):
            case ("var", x):
                return names[x]
            case ("lam", b):
                x = name_at(len(names) - len(env))
                return f"\\{x}." + go(b, names + [x])
            case ("app", f, a):
                return _app_text(go(f, names), view(f)[0], go(a, names), view(a)[0])

    return go(t, list(env))


def pretty_index(t, scope_size: int = 0) -> str:
    def go(t, n: int) -> str:
        match view(t):
            case ("var", x):
                return str(n - 1 - x)
            case ("lam", b):
                return "λ. " + go(b, n + 1)
            case ("app", f, a):
                return _app_text(go(f, n), view(f)[0], go(a, n), view(a)[0])

    return go(t, scope_size)


def _app_text(f: str, f_kind: str, a: str, a_kind: str) -> str:
    if f_kind == "lam":
        f = f"({f})"
    if a_kind != "var":
        a = f"({a})"
    return f"{f} {a}"


_TAG_GLYPH = {"lam": "λ"}


def _bits(th) -> str:
    return th.bitstring or "ε"


def pretty_codebruijn(r: Relev) -> str:
    """The display notation: ``λ (1\\ …)`` for binders, ``# only`` for variables,
    ``pair l r LRB`` for relevant pairs, ``t ↑ bits`` for things with thinnings."""

    def term(t) -> str:
        match t:
            case Hash(RPair(_, Relev(spine, _), _)):
                if isinstance(spine, UnitLeaf):
                    return "# only"
                return f"# (only {body(spine)})"
            case Con(TagB(tag, b)):
                return f"{_TAG_GLYPH.get(tag, tag)} {body(b)}"
        raise ValueError(f"not a λ-term: {t!r}")

    def body(b) -> str:
        match b:
            case Bind(usage, t) if usage.target:
                return f"({usage.bitstring}\\ {term(t)})"
            case Bind(_, t):
                return term(t)
            case RPair(left, right, cover):
                return f"(pair {up(left)} {up(right)} {cover.shape})"
            case UnitLeaf():
                return "⟨⟩"
        raise ValueError(f"not a λ body: {b!r}")

    def up(r: Relev) -> str:
        return f"({body(r.thing)} ↑ {_bits(r.thinning)})"

    return f"{term(r.thing)} ↑ {_bits(r.thinning)}"
