"""Things with thinnings, relevant pairs, binders and leaves.

A :class:`Relev` packs a value that lives exactly at its support with the
thinning embedding that support into an ambient scope. Moving a value to a
bigger scope only touches the thinning; the value itself is shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

from .cover import Cover, coproduct
from .errors import NotSingleton, ScopeMismatch
from .scope import Scope
from .thin import Thinning, compose, concat_thin, empty, identity, split

S = TypeVar("S")
T = TypeVar("T")


@dataclass(frozen=True)
class Relev(Generic[T]):
    thing: T
    thinning: Thinning

    @property
    def support(self) -> Scope:
        return self.thinning.source

    @property
    def scope(self) -> Scope:
        return self.thinning.target


@dataclass(frozen=True)
class UnitLeaf:
    """The unit, which lives only at the empty scope."""

    def __repr__(self) -> str:
        return "UNIT"


@dataclass(frozen=True)
class VarLeaf:
    """A variable use, which lives only at the singleton scope of that variable."""

    def __repr__(self) -> str:
        return "ONLY"


UNIT = UnitLeaf()
ONLY = VarLeaf()


@dataclass(frozen=True)
class RPair:
    """A relevant pair: two things whose supports jointly cover the pair's scope."""

    left: Relev[Any]
    right: Relev[Any]
    cover: Cover


@dataclass(frozen=True)
class Bind:
    """A binding site. ``usage`` selects the declared binders the body really uses;
    the body lives in the outer support extended by just those binders."""

    usage: Thinning
    body: Any


def map_relev(f: Callable[[S], T], r: Relev[S]) -> Relev[T]:
    """Apply a support-preserving ``f`` underneath the thinning."""
    return Relev(f(r.thing), r.thinning)


def unit_relev(t: T, kz: Scope) -> Relev[T]:
    return Relev(t, identity(kz))


def mult_relev(rr: Relev[Relev[T]]) -> Relev[T]:
    return Relev(rr.thing.thing, compose(rr.thing.thinning, rr.thinning))


def thin_relev(psi: Thinning, r: Relev[T]) -> Relev[T]:
    """Shift ``r`` along ``psi`` without looking inside it."""
    return Relev(r.thing, compose(r.thinning, psi))


def rpair(s: Relev[Any], t: Relev[Any]) -> Relev[RPair]:
    if s.scope != t.scope:
        raise ScopeMismatch("pair components live in different scopes")
    union, left_in, right_in, c = coproduct(s.thinning, t.thinning)
    return Relev(RPair(Relev(s.thing, left_in), Relev(t.thing, right_in), c), union)


def outl(p: Relev[RPair]) -> Relev[Any]:
    return thin_relev(p.thinning, p.thing.left)


def outr(p: Relev[RPair]) -> Relev[Any]:
    return thin_relev(p.thinning, p.thing.right)


def bind(jz: Scope, t: Relev[Any]) -> Relev[Bind]:
    """Abstract the suffix ``jz`` of ``t``'s scope, recording which binders are used."""
    theta, phi = split(jz, t.thinning)
    return Relev(Bind(phi, t.thing), theta)


def unbind(b: Relev[Bind]) -> Relev[Any]:
    return Relev(b.thing.body, concat_thin(b.thinning, b.thing.usage))


def runit(kz: Scope) -> Relev[UnitLeaf]:
    return Relev(UNIT, empty(kz))


def rvar(x: Thinning) -> Relev[VarLeaf]:
    if len(x.source) != 1:
        raise NotSingleton(f"{x} does not select exactly one variable")
    return Relev(ONLY, x)
