"""Syntax descriptions and their de Bruijn and co-de-Bruijn interpretations.

A syntax maps each sort to a :class:`Desc`. Terms of either representation
are either a variable applied to a spine of actual parameters or a node of
the described syntax. The de Bruijn form picks variables at the leaves by
position; the co-de-Bruijn form keeps every subterm at its exact support and
records at pairs and binders where each variable goes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Union

from .errors import RelevanceError, ScopeMismatch, ShapeError
from .relev import (
    ONLY,
    UNIT,
    Bind,
    Relev,
    RPair,
    UnitLeaf,
    VarLeaf,
    bind,
    map_relev,
    rpair,
    runit,
    rvar,
)
from .scope import Kind, Scope, concat, show_scope
from .thin import Thinning, compose, concat_thin, empty, identity, point, split

# -- descriptions -----------------------------------------------------------


@dataclass(frozen=True)
class Datoid:
    """A finite set of tags with decidable equality."""

    name: str
    values: tuple[str, ...]

    def __contains__(self, x: str) -> bool:
        return x in self.values

    def decide(self, x: str, y: str) -> bool:
        return x == y


@dataclass(frozen=True)
class Rec:
    kind: Kind


@dataclass(frozen=True)
class Sg:
    tags: Datoid
    arms: tuple[tuple[str, "Desc"], ...]

    def __post_init__(self):
        if tuple(t for t, _ in self.arms) != self.tags.values:
            raise ValueError(f"arms of {self.tags.name} must follow its values in order")

    def arm(self, tag: str) -> "Desc":
        for t, d in self.arms:
            if self.tags.decide(t, tag):
                return d
        raise KeyError(tag)


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Times:
    left: "Desc"
    right: "Desc"


Desc = Union[Rec, Sg, One, Times]
Syntax = Mapping[str, Desc]


def spine_desc(kz: Scope) -> Desc:
    """Description of the actual parameters for a variable binding ``kz``."""
    d: Desc = One()
    for k in kz:
        d = Times(d, Rec(k))
    return d


# -- term nodes ---------------------------------------------------------------
#
# Con and TagB are shared by both representations; the payload decides which.


@dataclass(frozen=True)
class Con:
    body: Any


@dataclass(frozen=True)
class TagB:
    tag: str
    body: Any


@dataclass(frozen=True)
class VarApp:
    """De Bruijn variable use: ``x`` is a position in the scope, oldest first."""

    x: int
    spine: Any


@dataclass(frozen=True)
class PairB:
    left: Any
    right: Any


@dataclass(frozen=True)
class RecB:
    term: Any


@dataclass(frozen=True)
class Hash:
    """Co-de-Bruijn variable use: a relevant pair of the variable and its spine."""

    pair: RPair


TermDB = Union[VarApp, Con]
TermR = Union[Hash, Con]


def _desc_for(D: Syntax, i: str, path) -> Desc:
    try:
        return D[i]
    except KeyError:
        raise ShapeError(path, f"no description for sort {i!r}") from None


def default_sort(D: Syntax) -> str:
    if len(D) != 1:
        raise ValueError("syntax has several sorts; name one")
    return next(iter(D))


# -- de Bruijn validation -------------------------------------------------------


def validate_db(D: Syntax, t: TermDB, kz: Scope, i: str | None = None) -> None:
    """Raise :class:`ShapeError` unless ``t`` is a term of sort ``i`` in scope ``kz``."""
    _check_db(D, t, tuple(kz), default_sort(D) if i is None else i, ())


def _check_db(D, t, kz, i, path):
    match t:
        case VarApp(x, spine):
            if not (isinstance(x, int) and 0 <= x < len(kz)):
                raise ShapeError(path, f"variable {x} out of range in {show_scope(kz)}")
            k = kz[x]
            if k.sort != i:
                raise ShapeError(path, f"variable of sort {k.sort!r} where {i!r} is wanted")
            _check_body_db(D, spine_desc(k.scope), spine, kz, path + ("spine",))
        case Con(body):
            _check_body_db(D, _desc_for(D, i, path), body, kz, path + ("con",))
        case _:
            raise ShapeError(path, f"expected a term, found {type(t).__name__}")


def _check_body_db(D, S, b, kz, path):
    match S, b:
        case Rec(k), RecB(t):
            _check_db(D, t, concat(kz, k.scope), k.sort, path + ("rec",))
        case Sg(tags, _), TagB(tag, body):
            if tag not in tags:
                raise ShapeError(path, f"{tag!r} is not a {tags.name} tag")
            _check_body_db(D, S.arm(tag), body, kz, path + (tag,))
        case One(), UnitLeaf():
            pass
        case Times(l, r), PairB(bl, br):
            _check_body_db(D, l, bl, kz, path + ("pair.left",))
            _check_body_db(D, r, br, kz, path + ("pair.right",))
        case _:
            raise ShapeError(path, f"{type(b).__name__} where {type(S).__name__} is described")


# -- co-de-Bruijn validation ----------------------------------------------------


class _SupportCheck:
    """Recompute supports bottom-up; with ``strict`` set, also demand relevance."""

    def __init__(self, D: Syntax, strict: bool):
        self.D = D
        self.strict = strict

    def relevant(self, sup: Thinning, path, what: str) -> None:
        if self.strict and not sup.is_identity:
            raise RelevanceError(path, f"{what} does not use its whole support ({sup})")

    def term(self, t, kz: Scope, i: str, path) -> Thinning:
        match t:
            case Hash(p):
                if not isinstance(p, RPair):
                    raise ShapeError(path, "a variable use must hold a relevant pair")
                left = p.left
                if not isinstance(left.thing, VarLeaf) or len(left.support) != 1:
                    raise ShapeError(path + ("var",), "variable position must select exactly one variable")
                k = left.support[0]
                if k.sort != i:
                    raise ShapeError(path, f"variable of sort {k.sort!r} where {i!r} is wanted")
                S = spine_desc(k.scope)
                return self.pair(
                    p, kz, path,
                    lambda th, jz, pt: identity(jz),
                    lambda th, jz, pt: self.body(S, th, jz, pt),
                )
            case Con(body):
                return self.body(_desc_for(self.D, i, path), body, kz, path + ("con",))
            case _:
                raise ShapeError(path, f"expected a term, found {type(t).__name__}")

    def pair(self, p, kz, path, on_left, on_right) -> Thinning:
        c = p.cover
        if tuple(c.covered) != tuple(kz):
            raise RelevanceError(path, f"cover over {show_scope(c.covered)} in scope {show_scope(kz)}")
        if not c.overlap_ok:
            raise ShapeError(path, "pair cover must allow overlap")
        if p.left.thinning != c.left or p.right.thinning != c.right:
            raise RelevanceError(path, f"component thinnings disagree with {c}")
        sl = on_left(p.left.thing, p.left.support, path + ("pair.left",))
        self.relevant(sl, path + ("pair.left",), "left component")
        sr = on_right(p.right.thing, p.right.support, path + ("pair.right",))
        self.relevant(sr, path + ("pair.right",), "right component")
        l, r = compose(sl, p.left.thinning), compose(sr, p.right.thinning)
        return Thinning(tuple(kz), tuple(a or b for a, b in zip(l.bits, r.bits)))

    def body(self, S: Desc, b, kz: Scope, path) -> Thinning:
        match S, b:
            case Rec(k), Bind(usage, t):
                if tuple(usage.target) != tuple(k.scope):
                    raise ShapeError(path, f"binder usage over {show_scope(usage.target)}, "
                                           f"expected {show_scope(k.scope)}")
                inner = concat(kz, usage.source)
                sup = self.term(t, inner, k.sort, path + ("bind",))
                outer, local = split(usage.source, sup)
                self.relevant(local, path + ("bind",), "binder marked as used")
                return outer
            case Sg(tags, _), TagB(tag, body):
                if tag not in tags:
                    raise ShapeError(path, f"{tag!r} is not a {tags.name} tag")
                return self.body(S.arm(tag), body, kz, path + (tag,))
            case One(), UnitLeaf():
                if kz:
                    raise RelevanceError(path, f"unit claims support {show_scope(kz)}")
                return empty(kz)
            case Times(l, r), RPair():
                return self.pair(
                    b, kz, path,
                    lambda th, jz, pt: self.body(l, th, jz, pt),
                    lambda th, jz, pt: self.body(r, th, jz, pt),
                )
            case _:
                raise ShapeError(path, f"{type(b).__name__} where {type(S).__name__} is described")


def _check_root(r, kz, path) -> None:
    if not isinstance(r, Relev):
        raise ShapeError(path, "expected a thing with a thinning")
    if tuple(r.thinning.target) != tuple(kz):
        raise ShapeError(path, f"thinning into {show_scope(r.thinning.target)}, "
                               f"expected {show_scope(kz)}")


def validate_r(D: Syntax, r: Relev, kz: Scope, i: str | None = None) -> None:
    """Raise unless ``r`` is a well-shaped, relevant co-de-Bruijn term over ``kz``."""
    i = default_sort(D) if i is None else i
    _check_root(r, kz, ())
    chk = _SupportCheck(D, strict=True)
    sup = chk.term(r.thing, r.support, i, ("up",))
    chk.relevant(sup, ("up",), "term")


def validate_body_r(D: Syntax, S: Desc, r: Relev, kz: Scope) -> None:
    """As :func:`validate_r`, for a thing described by ``S`` rather than a sort."""
    _check_root(r, kz, ())
    chk = _SupportCheck(D, strict=True)
    sup = chk.body(S, r.thing, r.support, ("up",))
    chk.relevant(sup, ("up",), "body")


def recompute_support(D: Syntax, t: TermR, kz: Scope, i: str | None = None) -> Thinning:
    """The variables of ``kz`` that ``t`` actually uses, recomputed from scratch."""
    i = default_sort(D) if i is None else i
    return _SupportCheck(D, strict=False).term(t, tuple(kz), i, ())


# -- translations ---------------------------------------------------------------


def code(D: Syntax, t: TermDB, kz: Scope, i: str | None = None) -> Relev:
    """De Bruijn to co-de-Bruijn."""
    i = default_sort(D) if i is None else i
    return _code(D, t, tuple(kz), i)


def _code(D, t, kz, i) -> Relev:
    match t:
        case VarApp(x, spine):
            k = kz[x]
            return map_relev(Hash, rpair(rvar(point(kz, x)), _codes(D, spine_desc(k.scope), spine, kz)))
        case Con(body):
            return map_relev(Con, _codes(D, D[i], body, kz))
    raise ShapeError((), f"cannot code {t!r}")


def _codes(D, S, b, kz) -> Relev:
    match S, b:
        case Rec(k), RecB(t):
            return bind(k.scope, _code(D, t, concat(kz, k.scope), k.sort))
        case Sg(), TagB(tag, body):
            return map_relev(lambda x: TagB(tag, x), _codes(D, S.arm(tag), body, kz))
        case One(), _:
            return runit(kz)
        case Times(l, r), PairB(bl, br):
            return rpair(_codes(D, l, bl, kz), _codes(D, r, br, kz))
    raise ShapeError((), f"cannot code {b!r} against {S!r}")


def code_body(D: Syntax, S: Desc, b, kz: Scope) -> Relev:
    return _codes(D, S, b, tuple(kz))


def decode(D: Syntax, r: Relev, kz: Scope, i: str | None = None) -> TermDB:
    """Co-de-Bruijn to de Bruijn: push the thinnings down to the variable leaves."""
    i = default_sort(D) if i is None else i
    if tuple(r.thinning.target) != tuple(kz):
        raise ScopeMismatch("decode: term does not live in the given scope")
    return _decode(D, r.thing, r.thinning, i)


def _decode(D, t, theta: Thinning, i) -> TermDB:
    match t:
        case Hash(RPair(left, right, _)):
            x = compose(left.thinning, theta)
            (pos,) = x.positions()
            k = x.target[pos]
            return VarApp(pos, _decodes(D, spine_desc(k.scope), right.thing, compose(right.thinning, theta)))
        case Con(body):
            return Con(_decodes(D, D[i], body, theta))
    raise ShapeError((), f"cannot decode {t!r}")


def _decodes(D, S, b, theta: Thinning):
    match S, b:
        case Rec(k), Bind(usage, t):
            return RecB(_decode(D, t, concat_thin(theta, usage), k.sort))
        case Sg(), TagB(tag, body):
            return TagB(tag, _decodes(D, S.arm(tag), body, theta))
        case One(), _:
            return UNIT
        case Times(l, r), RPair(bl, br, _):
            return PairB(
                _decodes(D, l, bl.thing, compose(bl.thinning, theta)),
                _decodes(D, r, br.thing, compose(br.thinning, theta)),
            )
    raise ShapeError((), f"cannot decode {b!r} against {S!r}")


def free_positions(t: TermDB, n: int) -> set[int]:
    """Positions of the outer ``n`` variables that occur anywhere in ``t``."""
    out: set[int] = set()

    def go(node):
        match node:
            case VarApp(x, spine):
                if x < n:
                    out.add(x)
                go(spine)
            case Con(b) | TagB(_, b) | RecB(b):
                go(b)
            case PairB(l, r):
                go(l)
                go(r)

    go(t)
    return out


__all__ = [
    "Bind", "Con", "Datoid", "Desc", "Hash", "ONLY", "One", "PairB", "RPair", "Rec", "RecB",
    "Relev", "Sg", "Syntax", "TagB", "TermDB", "TermR", "Times", "UNIT", "VarApp",
    "code", "code_body", "decode", "default_sort", "free_positions", "recompute_support",
    "spine_desc", "validate_body_r", "validate_db", "validate_r",
]
