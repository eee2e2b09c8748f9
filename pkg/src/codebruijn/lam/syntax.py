"""The untyped λ-calculus as an instance of the generic universe."""

from __future__ import annotations

from typing import Iterator

from ..errors import ScopeMismatch, ShapeError
from ..relev import UNIT, Relev, bind, map_relev, rpair
from ..scope import IOTA, STAR, Kind
from ..thin import Thinning
from ..universe import Con, Datoid, PairB, Rec, RecB, Sg, TagB, Times, VarApp

LAM_TAG = Datoid("LamTag", ("app", "lam"))

#: The kind of a λ's bound variable, seen from the binder: one ordinary variable.
BINDER = Kind((STAR,), IOTA)

LAM_DESC = Sg(LAM_TAG, (
    ("app", Times(Rec(STAR), Rec(STAR))),
    ("lam", Rec(BINDER)),
))
LAM = {IOTA: LAM_DESC}


# -- de Bruijn builders ---------------------------------------------------------


def var(x: int) -> VarApp:
    """Variable at scope position ``x`` (oldest first)."""
    return VarApp(x, UNIT)


def lam(body) -> Con:
    return Con(TagB("lam", RecB(body)))


def app(f, a) -> Con:
    return Con(TagB("app", PairB(RecB(f), RecB(a))))


def apps(f, *args) -> Con:
    for a in args:
        f = app(f, a)
    return f


def view(t):
    """Flatten a de Bruijn λ node: ``("var", x)``, ``("lam", body)`` or ``("app", f, a)``."""
    match t:
        case VarApp(x, _):
            return ("var", x)
        case Con(TagB("lam", RecB(b))):
            return ("lam", b)
        case Con(TagB("app", PairB(RecB(f), RecB(a)))):
            return ("app", f, a)
    raise ShapeError((), f"not a λ-term: {t!r}")


def size(t) -> int:
    match view(t):
        case ("var", _):
            return 1
        case ("lam", b):
            return 1 + size(b)
        case ("app", f, a):
            return 1 + size(f) + size(a)


# -- co-de-Bruijn builders ------------------------------------------------------


def lam_r(body: Relev) -> Relev:
    """Abstract the newest variable of ``body``'s scope."""
    return map_relev(lambda b: Con(TagB("lam", b)), bind((STAR,), body))


def app_r(f: Relev, a: Relev) -> Relev:
    return map_relev(lambda p: Con(TagB("app", p)), rpair(bind((), f), bind((), a)))


# -- the de Bruijn functorial action --------------------------------------------


def thin_db(t, theta: Thinning):
    """Move ``t`` from ``theta``'s source scope to its target, rewriting every leaf."""
    n = len(theta.source)
    sel = theta.positions()

    def go(t, depth):
        match view(t):
            case ("var", x):
                if x >= n + depth:
                    raise ScopeMismatch(f"variable {x} outside the thinning's source")
                return var(sel[x] if x < n else x - n + len(theta.target))
            case ("lam", b):
                return lam(go(b, depth + 1))
            case ("app", f, a):
                return app(go(f, depth), go(a, depth))

    return go(t, 0)


# -- enumeration ----------------------------------------------------------------


def terms_of_size(nodes: int, scope_size: int) -> Iterator:
    """Every λ-term with exactly ``nodes`` constructors: variables, then λs, then applications."""
    if nodes < 1:
        return
    if nodes == 1:
        for x in range(scope_size):
            yield var(x)
        return
    for b in terms_of_size(nodes - 1, scope_size + 1):
        yield lam(b)
    for left in range(1, nodes - 1):
        for f in terms_of_size(left, scope_size):
            for a in terms_of_size(nodes - 1 - left, scope_size):
                yield app(f, a)


def enumerate_terms(max_nodes: int, scope_size: int) -> Iterator:
    """Every λ-term with at most ``max_nodes`` constructors, smallest first."""
    for n in range(1, max_nodes + 1):
        yield from terms_of_size(n, scope_size)


__all__ = [
    "BINDER", "LAM", "LAM_DESC", "LAM_TAG", "app", "app_r", "apps", "enumerate_terms", "lam",
    "lam_r", "size", "terms_of_size", "thin_db", "var", "view",
]
