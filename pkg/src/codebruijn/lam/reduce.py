"""Normal-order β-reduction on co-de-Bruijn λ-terms, driven by hereditary substitution."""

from __future__ import annotations

from ..cover import Cover
from ..errors import NoRedex, OutOfFuel, ShapeError
from ..hsub import HSub, h_sub
from ..relev import Bind, Relev, RPair, bind, rpair, runit
from ..scope import IOTA, STAR
from ..thin import Thinning, compose, concat_thin, identity
from ..universe import Con, Hash, TagB
from .syntax import LAM, app_r, lam_r


def contract(fun: Relev, arg: Relev, *, fast: bool = True) -> Relev:
    """Contract ``fun arg`` where ``fun`` is a λ; both live in the same ambient scope."""
    match fun.thing:
        case Con(TagB("lam", Bind(usage, body))):
            pass
        case _:
            raise ShapeError((), "only a λ can be applied")
    if not usage.bits[0]:
        # Vacuous binder: the body already lives at the λ's support.
        return Relev(body, fun.thinning)
    kz = fun.scope
    h = HSub(
        LAM,
        kz,
        Cover(False, "L" * len(kz) + "R", kz + (STAR,)),
        identity(kz),
        rpair(runit(kz), bind((), arg)),
    )
    return h_sub(h, body, concat_thin(fun.thinning, usage), IOTA, fast=fast)


def _step(t, theta: Thinning, fast: bool) -> Relev | None:
    """Contract the leftmost-outermost redex of ``t ↑ theta``, or return ``None``."""
    match t:
        case Hash():
            return None
        case Con(TagB("lam", Bind(usage, body))):
            r = _step(body, concat_thin(theta, usage), fast)
            return None if r is None else lam_r(r)
        case Con(TagB("app", RPair(Relev(Bind(_, f), th_f), Relev(Bind(_, a), th_a), _))):
            fun = Relev(f, compose(th_f, theta))
            arg = Relev(a, compose(th_a, theta))
            if isinstance(f, Con) and f.body.tag == "lam":
                return contract(fun, arg, fast=fast)
            r = _step(f, fun.thinning, fast)
            if r is not None:
                return app_r(r, arg)
            r = _step(a, arg.thinning, fast)
            if r is not None:
                return app_r(fun, r)
            return None
    raise ShapeError((), f"not a λ-term: {t!r}")


def has_redex(t) -> bool:
    match t:
        case Hash():
            return False
        case Con(TagB("lam", Bind(_, body))):
            return has_redex(body)
        case Con(TagB("app", RPair(Relev(Bind(_, f), _), Relev(Bind(_, a), _), _))):
            return (isinstance(f, Con) and f.body.tag == "lam") or has_redex(f) or has_redex(a)
    raise ShapeError((), f"not a λ-term: {t!r}")


def beta_step(r: Relev, *, fast: bool = True) -> Relev:
    """One normal-order step. Raises :class:`NoRedex` on a normal form."""
    out = _step(r.thing, r.thinning, fast)
    if out is None:
        raise NoRedex("term is in normal form")
    return out


def normalize(r: Relev, fuel: int = 1000, *, fast: bool = True) -> tuple[Relev, int]:
    """Reduce to normal form within ``fuel`` steps; returns the result and the step count."""
    for steps in range(fuel):
        try:
            r = beta_step(r, fast=fast)
        except NoRedex:
            return r, steps
    if has_redex(r.thing):
        raise OutOfFuel(r, fuel)
    return r, fuel
