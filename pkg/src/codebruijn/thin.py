"""Order-preserving embeddings ("thinnings") between scopes.

A thinning stores its target scope and one bit per target position, oldest
first; a set bit means the position is selected. The source scope is always
derived from the bits, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import IndexOutOfRange, NoFactor, ScopeMismatch
from .scope import Scope, concat, show_scope, stars


@dataclass(frozen=True)
class Thinning:
    target: Scope
    bits: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.target):
            raise ScopeMismatch(
                f"{len(self.bits)} bits for a target scope of length {len(self.target)}"
            )

    @classmethod
    def of(cls, bits: str, target: Scope | None = None) -> "Thinning":
        """Build from a ``"0101"`` string; the target defaults to ordinary variables."""
        if target is None:
            target = stars(len(bits))
        if set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        return cls(tuple(target), tuple(b == "1" for b in bits))

    @cached_property
    def source(self) -> Scope:
        return tuple(k for k, b in zip(self.target, self.bits) if b)

    @property
    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @property
    def is_identity(self) -> bool:
        return all(self.bits)

    @property
    def is_empty(self) -> bool:
        return not any(self.bits)

    def positions(self) -> list[int]:
        """Target positions of the selected variables, oldest first."""
        return [i for i, b in enumerate(self.bits) if b]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "⊑:" + self.bitstring


def identity(kz: Scope) -> Thinning:
    return Thinning(tuple(kz), (True,) * len(kz))


def empty(kz: Scope) -> Thinning:
    return Thinning(tuple(kz), (False,) * len(kz))


def _require(ok: bool, what: str, left: Scope, right: Scope) -> None:
    if not ok:
        raise ScopeMismatch(f"{what}: {show_scope(left)} vs {show_scope(right)}")


def compose(theta: Thinning, phi: Thinning) -> Thinning:
    """``theta`` then ``phi``: select, among ``phi``'s selections, those ``theta`` selects."""
    _require(phi.source == theta.target, "compose", theta.target, phi.source)
    it = iter(theta.bits)
    bits = tuple(next(it) if b else False for b in phi.bits)
    return Thinning(phi.target, bits)


def is_triangle(theta: Thinning, phi: Thinning, psi: Thinning) -> bool:
    _require(phi.source == theta.target, "triangle edge", theta.target, phi.source)
    _require(phi.target == psi.target, "triangle target", phi.target, psi.target)
    _require(theta.source == psi.source, "triangle source", theta.source, psi.source)
    return compose(theta, phi) == psi


@dataclass(frozen=True)
class SliceArrow:
    """A morphism ``total → base`` in the slice over a common target.

    ``mediator`` is the thinning with ``compose(mediator, base) == total``;
    the equation is checked when the arrow is built.
    """

    mediator: Thinning
    base: Thinning
    total: Thinning

    def __post_init__(self):
        if compose(self.mediator, self.base) != self.total:
            raise NoFactor(
                f"{self.mediator} ; {self.base} is not {self.total}"
            )


def factor_through(psi: Thinning, phi: Thinning) -> SliceArrow:
    """The unique ``theta`` with ``compose(theta, phi) == psi``, if there is one."""
    _require(psi.target == phi.target, "factor_through", psi.target, phi.target)
    bits = []
    for p, f in zip(psi.bits, phi.bits):
        if f:
            bits.append(p)
        elif p:
            raise NoFactor(f"{psi} selects a position {phi} omits")
    return SliceArrow(Thinning(phi.source, tuple(bits)), phi, psi)


def antisym(theta: Thinning, phi: Thinning) -> bool:
    """For opposed thinnings ``iz ⊑ jz`` and ``jz ⊑ iz``: both must be identities."""
    _require(phi.source == theta.target, "antisym", theta.target, phi.source)
    _require(theta.source == phi.target, "antisym", theta.source, phi.target)
    return theta.is_identity and phi.is_identity and theta.target == phi.target


def point(kz: Scope, i: int) -> Thinning:
    """The singleton thinning selecting position ``i`` (oldest first)."""
    if not 0 <= i < len(kz):
        raise IndexOutOfRange(f"position {i} in a scope of length {len(kz)}")
    return Thinning(tuple(kz), tuple(j == i for j in range(len(kz))))


def concat_thin(theta: Thinning, phi: Thinning) -> Thinning:
    return Thinning(concat(theta.target, phi.target), theta.bits + phi.bits)


def split(jz: Scope, psi: Thinning) -> tuple[Thinning, Thinning]:
    """Split ``psi`` into global and local parts at the suffix ``jz`` of its target."""
    n = len(psi.target) - len(jz)
    if n < 0 or tuple(psi.target[n:]) != tuple(jz):
        raise ScopeMismatch(
            f"split: {show_scope(jz)} is not a suffix of {show_scope(psi.target)}"
        )
    return (
        Thinning(psi.target[:n], psi.bits[:n]),
        Thinning(psi.target[n:], psi.bits[n:]),
    )


def drop_last(theta: Thinning) -> Thinning:
    """Forget the newest target position (which ``theta`` must not select)."""
    assert theta.bits and not theta.bits[-1]
    return Thinning(theta.target[:-1], theta.bits[:-1])


def thinnings_into(kz: Scope) -> Iterator[Thinning]:
    """Every thinning with target ``kz``, in binary counting order."""
    n = len(kz)
    for code in range(1 << n):
        yield Thinning(tuple(kz), tuple(bool(code >> (n - 1 - i) & 1) for i in range(n)))
