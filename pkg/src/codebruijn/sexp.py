"""S-expression interchange for de Bruijn and co-de-Bruijn terms.

De Bruijn::

    term ::= (var I BODY) | (con BODY)
    BODY ::= unit | (tag NAME BODY) | (pair BODY BODY) | (rec TERM)

Co-de-Bruijn (``I`` and bit strings are oldest first)::

    root ::= (up TERM thin:BITS)
    TERM ::= (hash (pair (up only thin:BITS) (up BODY thin:BITS) cover:SHAPE)) | (con BODY)
    BODY ::= unit | (tag NAME BODY) | (pair (up BODY thin:BITS) (up BODY thin:BITS) cover:SHAPE)
           | (bind usage:BITS TERM)

Reading is directed by the syntax description, so mistakes are reported
with the path where they occur. ``;`` starts a comment.
"""

from __future__ import annotations

import re
from typing import Any

from .cover import Cover
from .errors import ParseError, RelevanceError, ScopeMismatch, ShapeError
from .relev import ONLY, UNIT, Bind, Relev, RPair, UnitLeaf, VarLeaf
from .scope import Scope, concat
from .thin import Thinning
from .universe import (
    Con,
    Desc,
    Hash,
    One,
    PairB,
    Rec,
    RecB,
    Sg,
    Syntax,
    TagB,
    Times,
    VarApp,
    default_sort,
    spine_desc,
)

SExp = Any  # str | list[SExp]

# -- reading raw s-expressions ----------------------------------------------------

_TOKEN = re.compile(r"\s+|;[^\n]*|(\()|(\))|([^\s();]+)")


def read_sexp(text: str) -> SExp:
    stack: list[list] = [[]]
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) == 1:
                raise ParseError("unbalanced ')'", pos)
            done = stack.pop()
            stack[-1].append(done)
        elif m.group(3):
            stack[-1].append(m.group(3))
        pos = m.end()
    if len(stack) != 1:
        raise ParseError("unclosed '('", len(text))
    if len(stack[0]) != 1:
        raise ParseError(f"expected one expression, found {len(stack[0])}", 0)
    return stack[0][0]


def show_sexp(x: SExp) -> str:
    if isinstance(x, str):
        return x
    return "(" + " ".join(map(show_sexp, x)) + ")"


# -- writing ----------------------------------------------------------------------------


def _thin_atom(th: Thinning) -> str:
    return "thin:" + th.bitstring


def db_to_sexp(t) -> SExp:
    match t:
        case VarApp(x, spine):
            return ["var", str(x), _db_body(spine)]
        case Con(body):
            return ["con", _db_body(body)]
    raise ValueError(f"not a de Bruijn term: {t!r}")


def _db_body(b) -> SExp:
    match b:
        case UnitLeaf():
            return "unit"
        case TagB(tag, body):
            return ["tag", tag, _db_body(body)]
        case PairB(l, r):
            return ["pair", _db_body(l), _db_body(r)]
        case RecB(t):
            return ["rec", db_to_sexp(t)]
    raise ValueError(f"not a de Bruijn body: {b!r}")


def r_to_sexp(r: Relev) -> SExp:
    return ["up", _r_node(r.thing), _thin_atom(r.thinning)]


def _r_node(t) -> SExp:
    match t:
        case Hash(p):
            return ["hash", _r_node(p)]
        case Con(body):
            return ["con", _r_node(body)]
        case UnitLeaf():
            return "unit"
        case VarLeaf():
            return "only"
        case TagB(tag, body):
            return ["tag", tag, _r_node(body)]
        case RPair(l, r, c):
            return ["pair", r_to_sexp(l), r_to_sexp(r), "cover:" + c.shape]
        case Bind(usage, body):
            return ["bind", "usage:" + usage.bitstring, _r_node(body)]
    raise ValueError(f"not a co-de-Bruijn node: {t!r}")


def dump(t) -> str:
    """One-line s-expression for a de Bruijn term or a co-de-Bruijn ``Relev``."""
    return show_sexp(r_to_sexp(t) if isinstance(t, Relev) else db_to_sexp(t))


# -- description-directed reading -------------------------------------------------------


def _form(x: SExp, head: str, arity: int, path) -> list:
    if isinstance(x, list) and x and x[0] == head and len(x) == arity + 1:
        return x[1:]
    raise ShapeError(path, f"expected ({head} …) with {arity} argument(s), found {show_sexp(x)}")


def _tagged(x: SExp, prefix: str, path) -> str:
    if isinstance(x, str) and x.startswith(prefix):
        bits = x[len(prefix):]
        if set(bits) <= {"0", "1", "L", "R", "B"}:
            return bits
    raise ShapeError(path, f"expected {prefix}…, found {show_sexp(x)}")


def _thinning(bits: str, target: Scope, path) -> Thinning:
    if set(bits) - {"0", "1"}:
        raise ShapeError(path, f"bad thinning {bits!r}")
    if len(bits) != len(target):
        raise RelevanceError(path, f"thinning {bits or 'ε'} into a scope of length {len(target)}")
    return Thinning(tuple(target), tuple(c == "1" for c in bits))


def _cover(shape: str, covered: Scope, path) -> Cover:
    try:
        return Cover(True, shape, tuple(covered))
    except ScopeMismatch:
        raise RelevanceError(path, f"cover {shape or 'ε'} over a scope of length {len(covered)}") from None
    except ValueError as e:
        raise ShapeError(path, str(e)) from None


class _Reader:
    def __init__(self, D: Syntax):
        self.D = D

    def root(self, x: SExp, kz: Scope, i: str) -> Relev:
        return self.up(x, kz, ("up",), lambda y, sup, p: self.term(y, sup, i, p))

    def up(self, x, target: Scope, path, inner) -> Relev:
        thing, bits = _form(x, "up", 2, path)
        th = _thinning(_tagged(bits, "thin:", path), target, path)
        return Relev(inner(thing, th.source, path), th)

    def pair(self, x, sup: Scope, path, on_left, on_right) -> RPair:
        l, r, shape = _form(x, "pair", 3, path)
        c = _cover(_tagged(shape, "cover:", path), sup, path)
        return RPair(
            self.up(l, sup, path + ("pair.left",), on_left),
            self.up(r, sup, path + ("pair.right",), on_right),
            c,
        )

    @staticmethod
    def only(x, sup: Scope, path) -> VarLeaf:
        if x != "only":
            raise ShapeError(path, f"expected only, found {show_sexp(x)}")
        return ONLY

    def term(self, x, sup: Scope, i: str, path):
        match x:
            case ["hash", p]:
                l, r, shape = _form(p, "pair", 3, path)
                c = _cover(_tagged(shape, "cover:", path), sup, path)
                left = self.up(l, sup, path + ("pair.left",), self.only)
                if len(left.support) != 1:
                    raise ShapeError(path + ("var",), "variable position must select exactly one variable")
                S = spine_desc(left.support[0].scope)
                right = self.up(r, sup, path + ("pair.right",), lambda y, s, pt: self.body(S, y, s, pt))
                return Hash(RPair(left, right, c))
            case ["con", b]:
                try:
                    S = self.D[i]
                except KeyError:
                    raise ShapeError(path, f"no description for sort {i!r}") from None
                return Con(self.body(S, b, sup, path + ("con",)))
        raise ShapeError(path, f"expected a term, found {show_sexp(x)}")

    def body(self, S: Desc, x, sup: Scope, path):
        match S, x:
            case Rec(k), ["bind", usage, t]:
                u = _tagged(usage, "usage:", path)
                if len(u) != len(k.scope):
                    raise ShapeError(path, f"binder usage {u or 'ε'} for {len(k.scope)} declared binder(s)")
                th = _thinning(u, k.scope, path)
                return Bind(th, self.term(t, concat(sup, th.source), k.sort, path + ("bind",)))
            case Sg(tags, _), ["tag", name, b]:
                if name not in tags:
                    raise ShapeError(path, f"{name!r} is not a {tags.name} tag")
                return TagB(name, self.body(S.arm(name), b, sup, path + (name,)))
            case One(), "unit":
                return UNIT
            case Times(l, r), ["pair", *_]:
                return self.pair(
                    x, sup, path,
                    lambda y, s, pt: self.body(l, y, s, pt),
                    lambda y, s, pt: self.body(r, y, s, pt),
                )
        raise ShapeError(path, f"{show_sexp(x)} where {type(S).__name__} is described")

    def db(self, x, kz: Scope, i: str, path):
        match x:
            case ["var", idx, spine] if isinstance(idx, str) and idx.isdigit():
                n = int(idx)
                if n >= len(kz):
                    raise ShapeError(path, f"variable {n} out of range in a scope of length {len(kz)}")
                return VarApp(n, self.db_body(spine_desc(kz[n].scope), spine, kz, path + ("spine",)))
            case ["con", b]:
                return Con(self.db_body(self.D[i], b, kz, path + ("con",)))
        raise ShapeError(path, f"expected a term, found {show_sexp(x)}")

    def db_body(self, S: Desc, x, kz: Scope, path):
        match S, x:
            case Rec(k), ["rec", t]:
                return RecB(self.db(t, concat(kz, k.scope), k.sort, path + ("rec",)))
            case Sg(tags, _), ["tag", name, b]:
                if name not in tags:
                    raise ShapeError(path, f"{name!r} is not a {tags.name} tag")
                return TagB(name, self.db_body(S.arm(name), b, kz, path + (name,)))
            case One(), "unit":
                return UNIT
            case Times(l, r), ["pair", bl, br]:
                return PairB(
                    self.db_body(l, bl, kz, path + ("pair.left",)),
                    self.db_body(r, br, kz, path + ("pair.right",)),
                )
        raise ShapeError(path, f"{show_sexp(x)} where {type(S).__name__} is described")


def load(D: Syntax, text: str, kz: Scope, i: str | None = None):
    """Read either representation; a top-level ``up`` form means co-de-Bruijn."""
    i = default_sort(D) if i is None else i
    x = read_sexp(text)
    reader = _Reader(D)
    if isinstance(x, list) and x and x[0] == "up":
        return reader.root(x, tuple(kz), i)
    return reader.db(x, tuple(kz), i, ())
