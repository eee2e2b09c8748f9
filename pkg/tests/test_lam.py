import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codebruijn import instrument
from codebruijn.errors import NoRedex, OutOfFuel, ParseError, ScopeMismatch, UnboundName
from codebruijn.lam import (
    LAM,
    LAM_DESC,
    NApp,
    NLam,
    NVar,
    app,
    app_r,
    apps,
    beta_step,
    enumerate_terms,
    lam,
    lam_r,
    naive_normalize,
    naive_subst,
    normalize,
    parse,
    parse_term,
    pretty_codebruijn,
    pretty_index,
    pretty_named,
    resolve,
    thin_db,
    var,
)
from codebruijn.relev import thin_relev
from codebruijn.scope import IOTA, STAR, Kind, stars
from codebruijn.thin import Thinning, thinnings_into
from codebruijn.universe import One, Rec, Times, code, decode, validate_r
from strategies import lam_terms

T = Thinning.of
K = r"\c.\e.c"
S = r"\f.\s.\e.(f e)(s e)"


def test_description_shape():
    assert LAM_DESC.arm("app") == Times(Rec(STAR), Rec(STAR))
    assert LAM_DESC.arm("lam") == Rec(Kind((STAR,), IOTA))
    assert One() != LAM_DESC


# -- parsing and resolution -------------------------------------------------------------


def test_parse_examples():
    assert parse(K) == NLam("c", NLam("e", NVar("c")))
    assert parse(S) == NLam("f", NLam("s", NLam("e", NApp(
        NApp(NVar("f"), NVar("e")), NApp(NVar("s"), NVar("e"))))))
    assert parse("λx. f x y") == NLam("x", NApp(NApp(NVar("f"), NVar("x")), NVar("y")))
    assert parse("f \\x.x") == NApp(NVar("f"), NLam("x", NVar("x")))


@pytest.mark.parametrize("text,pos", [("\\x.", 3), ("(x", 2), ("x)", 1), ("\\.x.", 3), ("x $", 2)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.position == pos


def test_resolve():
    assert resolve(parse(K)) == lam(lam(var(0)))
    assert resolve(parse("\\x.x")) == lam(var(0))
    assert resolve(parse("λ. λ. 1")) == lam(lam(var(0)))
    assert resolve(parse("\\x.\\x.x")) == lam(lam(var(1)))
    assert resolve(parse("a b"), ["a", "b"]) == app(var(0), var(1))
    with pytest.raises(UnboundName):
        resolve(parse("\\x.y"))
    with pytest.raises(UnboundName):
        resolve(parse("\\x.1"))


# -- printing -----------------------------------------------------------------------------


def test_pretty_styles():
    assert pretty_index(lam(var(0))) == "λ. 0"
    assert pretty_named(lam(var(0))) == "\\a.a"
    assert pretty_named(app(lam(var(1)), var(0)), ["a"]) == "(\\b.b) a"
    assert pretty_named(app(lam(var(0)), var(0)), ["a"]) == "(\\b.a) a"
    assert pretty_codebruijn(code(LAM, parse_term(K), ())) == "λ (1\\ λ (0\\ # only)) ↑ ε"
    assert pretty_codebruijn(code(LAM, lam(var(0)), ())) == "λ (1\\ # only) ↑ ε"
    assert pretty_codebruijn(code(LAM, parse_term(S), ())) == (
        "λ (1\\ λ (1\\ λ (1\\ app (pair (app (pair (# only ↑ 10) (# only ↑ 01) LR) ↑ 101) "
        "(app (pair (# only ↑ 10) (# only ↑ 01) LR) ↑ 011) LRB)))) ↑ ε"
    )


def test_named_round_trip_on_corpus():
    for k, env in [(0, []), (1, ["x"]), (2, ["x", "y"])]:
        for t in enumerate_terms(6, k):
            assert parse_term(pretty_named(t, env), env) == t
            assert parse_term(pretty_index(t, k), env) == t


def test_fresh_names_avoid_the_environment():
    assert pretty_named(lam(var(1)), ["a"]) == "\\b.b"
    deep = var(27)
    for _ in range(28):
        deep = lam(deep)
    assert pretty_named(deep).startswith("\\a.\\b.") and pretty_named(deep).endswith(".b1")


# -- the de Bruijn action -----------------------------------------------------------------


def test_thin_db_examples():
    assert thin_db(lam(var(0)), Thinning((), ())) == lam(var(0))
    assert thin_db(var(0), T("01")) == var(1)
    f, a = var(0), lam(var(1))
    assert thin_db(app(f, a), T("01")) == app(thin_db(f, T("01")), thin_db(a, T("01")))
    with pytest.raises(ScopeMismatch):
        thin_db(var(1), T("01"))


def test_thinning_commutes_with_coding():
    for k in range(3):
        for t in enumerate_terms(5, k):
            r = code(LAM, t, stars(k))
            for theta in thinnings_into(stars(k + 1)):
                if len(theta.source) == k:
                    assert decode(LAM, thin_relev(theta, r), theta.target) == thin_db(t, theta)


# -- enumeration ----------------------------------------------------------------------------


def test_enumeration_examples(frozen):
    assert list(enumerate_terms(1, 1)) == [var(0)]
    assert [pretty_index(t) for t in enumerate_terms(2, 0)] == frozen["closed_two_node_terms"]
    assert list(enumerate_terms(3, 0)) == [lam(var(0)), lam(lam(var(0))), lam(lam(var(1)))]


def test_enumeration_is_duplicate_free_and_deterministic():
    a = list(enumerate_terms(6, 1))
    assert len(set(a)) == len(a)
    assert a == list(enumerate_terms(6, 1))


# -- reduction ------------------------------------------------------------------------------------


def cb(text, env=()):
    return code(LAM, parse_term(text, env), stars(len(env)))


def test_beta_examples():
    r = beta_step(cb("(\\x.x) y", ["y"]))
    assert decode(LAM, r, stars(1)) == var(0)
    r = beta_step(cb("(\\x.z) w", ["z", "w"]))
    assert decode(LAM, r, stars(2)) == var(0)
    with pytest.raises(NoRedex):
        beta_step(cb("\\x.x"))


def test_worked_example_single_step():
    before = cb("\\x.(\\y. y x (\\z. z (y z))) (x (\\v.v))")
    after = parse_term("λ. (0 (λ.0)) 0 (λ. 0 ((1 (λ.0)) 0))")
    assert decode(LAM, beta_step(before), ()) == after


def test_vacuous_binder_discards_without_visiting():
    big = "((\\q.q q) (\\q.q (q q)))"
    r = cb(f"(\\x.z) {big}", ["z"])
    with instrument.recording() as rec:
        out = beta_step(r)
    assert rec.visits == 0
    assert decode(LAM, out, stars(1)) == var(0)


def test_normalize_examples():
    a = ["a", "b"]
    nf, steps = normalize(cb(f"({K}) a b", a), 10)
    assert decode(LAM, nf, stars(2)) == var(0) and steps == 2
    with pytest.raises(OutOfFuel) as e:
        normalize(cb("(\\x.x x)(\\x.x x)"), 100)
    assert e.value.steps == 100
    validate_r(LAM, e.value.partial, ())
    done = cb(S)
    assert normalize(done, 5) == (done, 0)


def test_fuel_exactly_sufficient():
    r = cb("(\\x.x) (\\y.y)")
    assert normalize(r, 1)[1] == 1
    with pytest.raises(OutOfFuel):
        normalize(r, 0)


def test_builders_agree_with_coding():
    body = code(LAM, var(1), stars(2))
    assert lam_r(body) == code(LAM, lam(var(1)), stars(1))
    f, a = code(LAM, var(0), stars(2)), code(LAM, var(1), stars(2))
    assert app_r(f, a) == code(LAM, app(var(0), var(1)), stars(2))
    assert apps(var(0), var(1), var(0)) == app(app(var(0), var(1)), var(0))


# -- the naive reference ---------------------------------------------------------------------------


def test_naive_examples():
    t = parse_term("\\x.(\\y. y x (\\z. z (y z))) (x (\\v.v))")
    out, steps = naive_normalize(t, 1)
    assert out == parse_term("λ. (0 (λ.0)) 0 (λ. 0 ((1 (λ.0)) 0))") and steps == 1
    closed = lam(lam(var(0)))
    assert naive_subst(closed, 0, var(1), 2) == closed
    # (λ.1)[0 ↦ s] in scope [*]: s is shifted under the binder.
    s = lam(var(0))
    assert naive_subst(lam(var(0)), 0, app(var(0), s), 1) == lam(app(var(0), s))


@settings(max_examples=150, deadline=None)
@given(lam_terms(2), st.integers(0, 30))
def test_engines_agree(t, fuel):
    kz = stars(2)
    try:
        expect = naive_normalize(t, fuel, 2)
    except OutOfFuel as e:
        expect = ("out of fuel", e.steps, e.partial)
    try:
        nf, steps = normalize(code(LAM, t, kz), fuel)
        validate_r(LAM, nf, kz)
        got = (decode(LAM, nf, kz), steps)
    except OutOfFuel as e:
        got = ("out of fuel", e.steps, decode(LAM, e.partial, kz))
    assert got == expect
