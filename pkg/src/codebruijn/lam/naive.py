"""Textbook de Bruijn substitution with shifting: the reference normalizer.

Kept deliberately independent of the kernel: terms are converted once into
plain tuples with de Bruijn indices, and reduction uses the classic
shift/substitute equations.
"""

from __future__ import annotations

from .. import instrument
from ..errors import OutOfFuel
from .syntax import app, lam, var, view

# Index terms: ("var", i) | ("lam", body) | ("app", f, a); index 0 is the innermost binder.


def to_index(t, scope_size: int):
    match view(t):
        case ("var", x):
            return ("var", scope_size - 1 - x)
        case ("lam", b):
            return ("lam", to_index(b, scope_size + 1))
        case ("app", f, a):
            return ("app", to_index(f, scope_size), to_index(a, scope_size))


def from_index(t, scope_size: int):
    match t:
        case ("var", i):
            return var(scope_size - 1 - i)
        case ("lam", b):
            return lam(from_index(b, scope_size + 1))
        case ("app", f, a):
            return app(from_index(f, scope_size), from_index(a, scope_size))


def shift(d: int, cutoff: int, t):
    """Add ``d`` to every index at or above ``cutoff``."""
    instrument.visit(t)
    match t:
        case ("var", i):
            return ("var", i + d if i >= cutoff else i)
        case ("lam", b):
            return ("lam", shift(d, cutoff + 1, b))
        case ("app", f, a):
            return ("app", shift(d, cutoff, f), shift(d, cutoff, a))


def subst(j: int, s, t):
    """Replace index ``j`` by ``s`` in ``t``."""
    instrument.visit(t)
    match t:
        case ("var", i):
            return s if i == j else t
        case ("lam", b):
            return ("lam", subst(j + 1, shift(1, 0, s), b))
        case ("app", f, a):
            return ("app", subst(j, s, f), subst(j, s, a))


def beta(body, arg):
    return shift(-1, 0, subst(0, shift(1, 0, arg), body))


def step(t):
    """One leftmost-outermost step, or ``None`` on a normal form."""
    match t:
        case ("var", _):
            return None
        case ("lam", b):
            r = step(b)
            return None if r is None else ("lam", r)
        case ("app", ("lam", b), a):
            return beta(b, a)
        case ("app", f, a):
            r = step(f)
            if r is not None:
                return ("app", r, a)
            r = step(a)
            return None if r is None else ("app", f, r)


def naive_subst(t, j: int, s, scope_size: int):
    """Substitute de Bruijn index ``j`` of ``t`` by ``s`` (both over ``scope_size`` variables)."""
    return from_index(subst(j, to_index(s, scope_size), to_index(t, scope_size)), scope_size)


def naive_normalize(t, fuel: int, scope_size: int = 0):
    """Returns ``(normal form, steps)``; raises :class:`OutOfFuel` with the partial term."""
    u = to_index(t, scope_size)
    for steps in range(fuel):
        r = step(u)
        if r is None:
            return from_index(u, scope_size), steps
        u = r
    if step(u) is not None:
        raise OutOfFuel(from_index(u, scope_size), fuel)
    return from_index(u, scope_size), fuel
