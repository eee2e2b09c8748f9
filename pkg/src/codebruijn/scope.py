"""Scopes and kinds.

A scope is a plain tuple of :class:`Kind`, oldest variable first. The
recursive kind structure gives variables parameters of their own, which is
how metavariables (and binders in descriptions) arise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

#: The one sort of the untyped λ-calculus.
IOTA = "ι"


@dataclass(frozen=True)
class Kind:
    """A variable interface: the scope of parameters it binds and a result sort."""

    scope: tuple["Kind", ...] = ()
    sort: str = IOTA

    def __str__(self) -> str:
        if not self.scope and self.sort == IOTA:
            return "*"
        return "[" + ",".join(map(str, self.scope)) + "]⇒" + self.sort

    @cached_property
    def size(self) -> int:
        return 1 + sum(k.size for k in self.scope)


Scope = tuple[Kind, ...]

#: The sort-only kind ``[]⇒ι``, shared so that scope comparisons hit the identity fast path.
STAR = Kind()


def snoc(kz: Scope, k: Kind) -> Scope:
    return (*kz, k)


def concat(kz: Scope, jz: Scope) -> Scope:
    return kz + jz if jz else kz


def kind_size(k: Kind) -> int:
    """Termination measure: one plus the sizes of the parameter kinds."""
    return k.size


def stars(n: int) -> Scope:
    """A scope of ``n`` ordinary variables."""
    return (STAR,) * n


def show_scope(kz: Scope) -> str:
    return "[" + ",".join(map(str, kz)) + "]"
