"""Covers: pairs of thinnings into one scope that between them select every position.

A cover is stored as its shape, one letter per covered position:
``L`` (left only), ``R`` (right only) or ``B`` (both, only when overlap is
allowed). Nothing can be omitted, so the two derived thinnings are jointly
surjective by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import FlagMismatch, ScopeMismatch
from .scope import Scope, concat
from .thin import SliceArrow, Thinning, compose, concat_thin, empty, factor_through, identity


@dataclass(frozen=True)
class Cover:
    overlap_ok: bool
    shape: str
    covered: Scope

    def __post_init__(self):
        if len(self.shape) != len(self.covered):
            raise ScopeMismatch(
                f"cover shape {self.shape!r} for a scope of length {len(self.covered)}"
            )
        letters = set(self.shape)
        if letters - {"L", "R", "B"}:
            raise ValueError(f"bad cover shape {self.shape!r}")
        if "B" in letters and not self.overlap_ok:
            raise ValueError("a partition cannot share a position between both sides")

    @cached_property
    def left(self) -> Thinning:
        return Thinning(self.covered, tuple(c != "R" for c in self.shape))

    @cached_property
    def right(self) -> Thinning:
        return Thinning(self.covered, tuple(c != "L" for c in self.shape))

    def __str__(self) -> str:
        return "cover:" + self.shape


def cover_of(left: Thinning, right: Thinning, overlap_ok: bool = True) -> Cover:
    """The cover whose derived thinnings are ``left`` and ``right``.

    Raises ``ValueError`` if some position is selected by neither.
    """
    if left.target != right.target:
        raise ScopeMismatch("cover sides disagree on their target")
    shape = []
    for a, b in zip(left.bits, right.bits):
        if a and b:
            shape.append("B")
        elif a:
            shape.append("L")
        elif b:
            shape.append("R")
        else:
            raise ValueError("a position is covered by neither side")
    return Cover(overlap_ok, "".join(shape), left.target)


class CoproductResult(NamedTuple):
    union: Thinning
    left_in: Thinning
    right_in: Thinning
    cover: Cover

    @property
    def left_total(self) -> Thinning:
        return compose(self.left_in, self.union)

    @property
    def right_total(self) -> Thinning:
        return compose(self.right_in, self.union)


def coproduct(theta: Thinning, phi: Thinning) -> CoproductResult:
    """Smallest subscope containing both selections, with the two residual embeddings."""
    if theta.target != phi.target:
        raise ScopeMismatch("coproduct of thinnings with different targets")
    union, shape = [], []
    for a, b in zip(theta.bits, phi.bits):
        union.append(a or b)
        if a and b:
            shape.append("B")
        elif a:
            shape.append("L")
        elif b:
            shape.append("R")
    psi = Thinning(theta.target, tuple(union))
    c = Cover(True, "".join(shape), psi.source)
    return CoproductResult(psi, c.left, c.right, c)


def coproduct_factor(r: CoproductResult, f: SliceArrow, g: SliceArrow) -> SliceArrow:
    """Universal property: the unique arrow from the union to any common upper bound.

    ``f`` must exhibit the left total thinning factoring through some ``psi'``
    and ``g`` the right one through the same ``psi'``.
    """
    if f.base != g.base:
        raise ScopeMismatch("the two factorizations go through different thinnings")
    if f.total != r.left_total or g.total != r.right_total:
        raise ScopeMismatch("factorizations do not start at the coproduct's summands")
    h = factor_through(r.union, f.base)
    # The triangles through h must agree with the given mediators.
    assert compose(r.left_in, h.mediator) == f.mediator
    assert compose(r.right_in, h.mediator) == g.mediator
    return h


class Refinement(NamedTuple):
    cover: Cover
    psi0: Thinning
    psi1: Thinning

    @property
    def theta(self) -> Thinning:
        return self.cover.left

    @property
    def phi(self) -> Thinning:
        return self.cover.right


def refine(psi: Thinning, c: Cover) -> Refinement:
    """Restrict ``c`` to the positions ``psi`` selects.

    ``psi0`` embeds the refined left side into ``c``'s left side, ``psi1``
    likewise on the right.
    """
    if psi.target != c.covered:
        raise ScopeMismatch("refining thinning does not land in the covered scope")
    shape, b0, b1 = [], [], []
    for s, keep in zip(c.shape, psi.bits):
        if keep:
            shape.append(s)
        if s != "R":
            b0.append(keep)
        if s != "L":
            b1.append(keep)
    c2 = Cover(c.overlap_ok, "".join(shape), psi.source)
    return Refinement(
        c2,
        Thinning(c.left.source, tuple(b0)),
        Thinning(c.right.source, tuple(b1)),
    )


def concat_cover(c: Cover, d: Cover) -> Cover:
    if c.overlap_ok != d.overlap_ok:
        raise FlagMismatch("cannot concatenate covers with different overlap flags")
    return Cover(c.overlap_ok, c.shape + d.shape, concat(c.covered, d.covered))


def left_right_cover(
    iz: Scope, jz: Scope, overlap_ok: bool = True
) -> tuple[Thinning, Thinning, Cover]:
    """Two scopes cover their concatenation."""
    theta = concat_thin(identity(iz), empty(jz))
    phi = concat_thin(empty(iz), identity(jz))
    return theta, phi, Cover(overlap_ok, "L" * len(iz) + "R" * len(jz), concat(iz, jz))


def all_left(c: Cover) -> bool:
    """With nothing on the right, the left side is everything."""
    if not c.right.is_empty:
        raise ScopeMismatch(f"{c} has a non-empty right side")
    assert c.left == identity(c.covered)
    return True
