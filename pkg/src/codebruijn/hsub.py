"""Simultaneous hereditary substitution on co-de-Bruijn terms.

An :class:`HSub` partitions a source scope into passive variables, which are
renamed into the target scope, and active ones, which receive images. Images
are stored as one spine over the target. Substituting an active variable of
higher kind re-enters substitution with that variable's parameters as the new
active scope, so the recursion is structural on the active scope.

Terms are handled curried: a thing at its own support together with a
thinning from that support into the source scope.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any

from . import instrument
from .cover import Cover, all_left, concat_cover, left_right_cover, refine
from .errors import ScopeMismatch, Unreachable
from .relev import Bind, Relev, RPair, bind, map_relev, outl, outr, rpair, runit, rvar, thin_relev
from .scope import Scope, concat, show_scope
from .thin import Thinning, compose, concat_thin, drop_last, empty, identity, point
from .universe import (
    Con,
    Desc,
    Hash,
    One,
    Rec,
    Sg,
    Syntax,
    TagB,
    Times,
    spine_desc,
    validate_r,
)

_debug = [os.environ.get("CODEBRUIJN_DEBUG", "") not in ("", "0")]


def set_debug(on: bool) -> None:
    """Re-validate the result of every substitution call. Slow; for tests and diagnosis."""
    _debug[0] = on


@dataclass(frozen=True)
class HSub:
    """The fate of every variable of ``parti.covered`` (the source scope).

    ``parti`` is a partition (no overlap): ``L`` marks passive variables and
    ``R`` active ones. ``pass_trg`` renames the passive variables into
    ``trg``; ``images`` is a spine over ``trg`` with one entry per active
    variable, oldest first.
    """

    syntax: Syntax = field(repr=False)
    trg: Scope
    parti: Cover
    pass_trg: Thinning
    images: Relev

    def __post_init__(self):
        if self.pass_trg.source != self.passive.source:
            raise ScopeMismatch("renaming does not start at the passive variables")
        if tuple(self.pass_trg.target) != tuple(self.trg):
            raise ScopeMismatch("renaming does not land in the target scope")
        if tuple(self.images.thinning.target) != tuple(self.trg):
            raise ScopeMismatch("images do not live in the target scope")

    @property
    def src(self) -> Scope:
        return self.parti.covered

    @property
    def passive(self) -> Thinning:
        return self.parti.left

    @property
    def active(self) -> Thinning:
        return self.parti.right

    @property
    def pass_(self) -> Scope:
        return self.passive.source

    @property
    def act(self) -> Scope:
        return self.active.source

    @property
    def measure(self) -> int:
        """Sum of the kind sizes of the active variables; drops at each hereditary step."""
        return sum(k.size for k in self.act)

    def __str__(self) -> str:
        return (f"[pass:{show_scope(self.pass_)}|act:{show_scope(self.act)}] "
                f"parti:{self.parti.shape} images:({self.images.thinning.bitstring})")


def renaming(D: Syntax, src: Scope, theta: Thinning) -> HSub:
    """The substitution that only renames, along ``theta : src ⊑ trg``."""
    trg = theta.target
    parti = Cover(False, "L" * len(src), tuple(src))
    return HSub(D, trg, parti, theta, runit(trg))


def wk_hsub(h: HSub, jz: Scope) -> HSub:
    """Push ``h`` under binders ``jz``: they become passive, the images are shifted wholesale."""
    _, _, extra = left_right_cover(jz, (), overlap_ok=False)
    return HSub(
        h.syntax,
        concat(h.trg, jz),
        concat_cover(h.parti, extra),
        concat_thin(h.pass_trg, identity(jz)),
        thin_relev(concat_thin(identity(h.trg), empty(jz)), h.images),
    )


def h_sub(h: HSub, t: Any, psi: Thinning, sort: str, *, fast: bool = True) -> Relev:
    """Substitute into ``t`` (living at ``psi``'s source) and land in ``h.trg``.

    With ``fast`` (the default) a term whose support holds no active variable
    is thinned across untouched. ``fast=False`` forces the structural route,
    which must give the same answer.
    """
    out = _h_sub(h, t, psi, sort, fast)
    if _debug[0]:
        validate_r(h.syntax, out, h.trg, sort)
    return out


def _h_sub(h: HSub, t: Any, psi: Thinning, sort: str, fast: bool) -> Relev:
    if tuple(psi.target) != tuple(h.src):
        raise ScopeMismatch("term does not embed in the substitution's source")
    ref = refine(psi, h.parti)
    if fast and ref.phi.is_empty:
        all_left(ref.cover)
        return Relev(t, compose(ref.psi0, h.pass_trg))
    instrument.visit(t)
    match t:
        case Con(body):
            return map_relev(Con, h_subs(h.syntax[sort], h, body, psi, fast=fast))
        case Hash(RPair(Relev(_, x), Relev(ss, theta), _)):
            jz = x.source[0].scope
            spine = h_subs(spine_desc(jz), h, ss, compose(theta, psi), fast=fast)
            return hered(compose(x, psi), h, spine, fast=fast)
    raise ScopeMismatch(f"not a term: {t!r}")


def h_subs(S: Desc, h: HSub, b: Any, psi: Thinning, *, fast: bool = True) -> Relev:
    """Substitute structurally through a body described by ``S``."""
    instrument.visit(b)
    match S, b:
        case Rec(k), Bind(theta, t):
            jz = k.scope
            return bind(jz, h_sub(wk_hsub(h, jz), t, concat_thin(psi, theta), k.sort, fast=fast))
        case Sg(), TagB(tag, body):
            return map_relev(lambda x: TagB(tag, x), h_subs(S.arm(tag), h, body, psi, fast=fast))
        case One(), _:
            return runit(h.trg)
        case Times(l, r), RPair(Relev(s, theta), Relev(u, phi), _):
            return rpair(
                h_subs(l, h, s, compose(theta, psi), fast=fast),
                h_subs(r, h, u, compose(phi, psi), fast=fast),
            )
    raise ScopeMismatch(f"{b!r} does not match {S!r}")


def hered(x: Thinning, h: HSub, ss: Relev, *, fast: bool = True) -> Relev:
    """The variable case: rename a passive variable, or substitute an active one hereditarily.

    ``x`` selects one variable of ``h.src``; ``ss`` is its already-substituted
    spine over ``h.trg``.
    """
    if len(x.source) != 1:
        raise ScopeMismatch(f"{x} is not a single variable")
    before = h.measure
    shape = h.parti.shape
    pass_trg = h.pass_trg
    images = h.images
    # Walk in from the newest end, discarding variables until we reach x.
    while not x.bits[-1]:
        top = shape[-1]
        if top == "L":
            pass_trg = _drop_newest_passive(pass_trg)
        elif top == "R":
            images = outl(images)
        else:
            raise Unreachable("BothActivePassive: a variable is both passive and active")
        x = drop_last(x)
        shape = shape[:-1]
    top = shape[-1]
    if top == "B":
        raise Unreachable("BothActivePassive: a variable is both passive and active")
    if top == "L":
        newest = point(pass_trg.source, len(pass_trg.source) - 1)
        return map_relev(Hash, rpair(rvar(compose(newest, pass_trg)), ss))
    kind = x.source[0]
    jz = kind.scope
    image = outr(images)
    usage, t = image.thing.usage, image.thing.body
    _, _, p2 = left_right_cover(h.trg, jz, overlap_ok=False)
    h2 = HSub(h.syntax, h.trg, p2, identity(h.trg), ss)
    instrument.descent(before, h2.measure)
    return h_sub(h2, t, concat_thin(image.thinning, usage), kind.sort, fast=fast)


def _drop_newest_passive(pass_trg: Thinning) -> Thinning:
    """Restrict a renaming to all but its newest passive variable."""
    n = len(pass_trg.source)
    return compose(Thinning(pass_trg.source, (True,) * (n - 1) + (False,)), pass_trg)



def substitute(h: HSub, r: Relev, sort: str, *, fast: bool = True) -> Relev:
    """Apply ``h`` to a term over ``h.src``."""
    return h_sub(h, r.thing, r.thinning, sort, fast=fast)
