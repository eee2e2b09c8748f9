import json
import subprocess
import sys
from pathlib import Path

import pytest

from codebruijn.cli import build_parser, main

CLI = Path(__file__).parent / "cli"
CASES = json.loads((CLI / "cases.json").read_text(encoding="utf-8"))


def run(args):
    return subprocess.run([sys.executable, "-m", "codebruijn", *args], cwd=CLI,
                          capture_output=True, text=True, encoding="utf-8")


def expected(name):
    base = CLI / "expected" / name
    return (base.with_suffix(".out").read_text(encoding="utf-8"),
            base.with_suffix(".err").read_text(encoding="utf-8"),
            int(base.with_suffix(".code").read_text()))


def test_corpus_has_twenty_inputs():
    assert len(list((CLI / "inputs").iterdir())) == 20
    assert len(CASES) == 20


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden_case(case):
    out, err, code = expected(case["name"])
    p = run(case["args"])
    assert (p.stdout, p.stderr, p.returncode) == (out, err, code)


def test_inline_and_in_process(capsys):
    assert main(["normalize", "-e", "(\\x.x) (\\y.y)"]) == 0
    assert capsys.readouterr().out == "\\a.a\nsteps: 1\n"
    assert main(["show", "-e", "(con (tag lam (rec (var 0 unit))))", "--format", "index"]) == 0
    assert capsys.readouterr().out == "λ. 0\n"
    assert main(["check", "-e", "(up (con (tag lam (bind usage:1 (con (tag app (pair "
                 "(up (bind usage: (hash (pair (up only thin:1) (up unit thin:0) cover:L))) thin:1) "
                 "(up (bind usage: (hash (pair (up only thin:1) (up unit thin:0) cover:L))) thin:1) "
                 "cover:LR)))))) thin:)"]) == 2
    assert "RelevanceError" in capsys.readouterr().err


def test_argument_validation():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["show"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["normalize", "-e", "x", "--fuel", "-1"])


def test_output_is_reproducible():
    args = ["show", "inputs/S.lam", "--format", "sexp"]
    assert run(args).stdout == run(args).stdout
