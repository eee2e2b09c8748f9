import itertools

import pytest

from codebruijn import instrument
from codebruijn.errors import NotSingleton, ScopeMismatch
from codebruijn.lam import LAM, lam, var
from codebruijn.relev import (
    ONLY,
    UNIT,
    Bind,
    Relev,
    RPair,
    bind,
    map_relev,
    mult_relev,
    outl,
    outr,
    rpair,
    runit,
    rvar,
    thin_relev,
    unbind,
    unit_relev,
)
from codebruijn.scope import stars
from codebruijn.thin import Thinning, compose, identity, point, thinnings_into
from codebruijn.universe import Con, code, recompute_support

T = Thinning.of


def relevs(n):
    """Leaves at every support, thinned every way into scopes of length ``n``."""
    for th in thinnings_into(stars(n)):
        yield Relev(("leaf", th.bitstring), th)


def test_map_relev_laws():
    r = Relev("x", T("10"))
    assert map_relev(lambda x: x, r) == r
    f, g = (lambda x: x + "!"), (lambda x: x * 2)
    assert map_relev(lambda x: g(f(x)), r) == map_relev(g, map_relev(f, r))
    assert map_relev(Con, Relev("body", T("10"))) == Relev(Con("body"), T("10"))


def test_monad_laws():
    for n in range(5):
        for r in relevs(n):
            assert mult_relev(unit_relev(r, r.scope)) == r
            assert mult_relev(map_relev(lambda t: unit_relev(t, r.support), r)) == r
            assert unit_relev("t", r.scope).thinning == identity(r.scope)


def test_thin_relev_laws_and_sharing():
    for n in range(4):
        for r in relevs(n):
            for psi1 in thinnings_into(stars(n)):
                pass
            up = [th for th in thinnings_into(stars(n + 1)) if len(th.source) == n]
            for p1 in up:
                once = thin_relev(p1, r)
                assert once.thing is r.thing
                assert thin_relev(identity(r.scope), r) == r
                for p2 in [th for th in thinnings_into(stars(n + 2)) if len(th.source) == n + 1]:
                    assert thin_relev(p2, once) == thin_relev(compose(p1, p2), r)


def test_thin_relev_example():
    assert thin_relev(T("110"), Relev("t", T("10"))) == Relev("t", T("100"))
    with pytest.raises(ScopeMismatch):
        thin_relev(T("11"), Relev("t", T("100")))


def test_thin_relev_visits_nothing():
    r = code(LAM, lam(lam(var(0))), stars(1))
    with instrument.recording() as rec:
        out = thin_relev(T("01"), r)
    assert rec.visits == 0 and out.thing is r.thing


def test_rpair_examples():
    p = rpair(Relev("x", T("10")), Relev("y", T("01")))
    assert p == Relev(RPair(Relev("x", T("10")), Relev("y", T("01")), p.thing.cover), T("11"))
    assert p.thing.cover.shape == "LR"
    q = rpair(Relev("x", T("10")), Relev("y", T("10")))
    assert q.thinning == T("10") and q.thing.cover.shape == "B"
    assert q.thing.left == Relev("x", T("1"))
    with pytest.raises(ScopeMismatch):
        rpair(Relev("x", T("1")), Relev("y", T("10")))


def test_projections_undo_pairing():
    for n in range(4):
        for s, t in itertools.product(list(relevs(n)), repeat=2):
            p = rpair(s, t)
            assert outl(p) == s and outr(p) == t
            assert p.thing.cover.left == p.thing.left.thinning
            assert p.thing.cover.right == p.thing.right.thinning


def test_outl_example():
    p = Relev(RPair(Relev("x", T("10")), Relev("y", T("01")), None), T("110"))
    assert outl(p) == Relev("x", T("100"))


def test_bind_examples():
    assert bind(stars(1), Relev("b", T("101"))) == Relev(Bind(T("1"), "b"), T("10"))
    assert bind(stars(1), Relev("b", T("100"))) == Relev(Bind(T("0"), "b"), T("10"))
    with pytest.raises(ScopeMismatch):
        bind(stars(3), Relev("b", T("10")))


def test_bind_then_unbind():
    for n in range(5):
        for r in relevs(n):
            for j in range(n + 1):
                assert unbind(bind(stars(j), r)) == r


def test_runit_and_rvar():
    assert runit(()) == Relev(UNIT, T(""))
    assert runit(stars(2)).thinning == T("00")
    assert rvar(point(stars(2), 1)) == Relev(ONLY, T("01"))
    assert rvar(point(stars(1), 0)) == Relev(ONLY, T("1"))
    with pytest.raises(NotSingleton):
        rvar(T("11"))


def test_coded_terms_are_relevant():
    for t in [lam(var(0)), lam(lam(var(1))), var(1)]:
        r = code(LAM, t, stars(2))
        assert recompute_support(LAM, r.thing, r.support).is_identity
