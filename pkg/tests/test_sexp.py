from pathlib import Path

import pytest

from codebruijn.errors import ParseError, RelevanceError, ShapeError
from codebruijn.lam import LAM, enumerate_terms, parse_term
from codebruijn.scope import IOTA, STAR, Kind, stars
from codebruijn.sexp import dump, load, read_sexp, show_sexp
from codebruijn.universe import PairB, RecB, UNIT, VarApp, code, validate_r

GOLDEN = Path(__file__).parent / "golden"


def test_reader_basics():
    assert read_sexp("(a (b c) ; note\n d)") == ["a", ["b", "c"], "d"]
    assert show_sexp(["a", ["b"], "c"]) == "(a (b) c)"
    for bad in ["(a", "a)", "a b", ""]:
        with pytest.raises(ParseError):
            read_sexp(bad)


def test_round_trip_both_representations():
    for k in range(3):
        kz = stars(k)
        for t in enumerate_terms(5, k):
            assert load(LAM, dump(t), kz) == t
            r = code(LAM, t, kz)
            assert load(LAM, dump(r), kz) == r


def test_round_trip_with_metavariables():
    kz = (Kind((STAR,), IOTA), STAR)
    t = VarApp(0, PairB(UNIT, RecB(VarApp(1, UNIT))))
    r = code(LAM, t, kz)
    assert load(LAM, dump(t), kz) == t
    assert load(LAM, dump(r), kz) == r


@pytest.mark.parametrize("name,text", [("K", r"\c.\e.c"), ("S", r"\f.\s.\e.(f e)(s e)")])
def test_golden_files(name, text):
    r = load(LAM, (GOLDEN / f"{name}.sexp").read_text(encoding="utf-8"), ())
    validate_r(LAM, r, ())
    assert r == code(LAM, parse_term(text), ())


def test_errors_name_their_path():
    s = (GOLDEN / "S.sexp").read_text(encoding="utf-8")
    with pytest.raises(RelevanceError) as e:
        load(LAM, s.replace("cover:LRB", "cover:LR"), ())
    assert e.value.where.endswith("con/app")
    with pytest.raises(ShapeError):
        load(LAM, s.replace("(tag app", "(tag apq", 1), ())
    with pytest.raises(ShapeError):
        load(LAM, "(up (con (tag lam (bind usage:11 (hash x)))) thin:)", ())
    with pytest.raises(ShapeError):
        load(LAM, "(var 3 unit)", stars(1))
    with pytest.raises(RelevanceError):
        load(LAM, "(up (con (tag lam (bind usage:1 (hash (pair (up only thin:1) (up unit thin:0) cover:L))))) thin:1)", ())
