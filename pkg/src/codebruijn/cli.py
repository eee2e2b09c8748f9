"""Command-line front end: show, normalize, check, bench.

Exit status: 0 success, 1 parse or unbound-name error, 2 validation failure,
3 out of fuel. When several terms are processed the worst status wins.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from . import bench, hsub
from .errors import KernelError, OutOfFuel, ParseError, PathError, UnboundName
from .lam import LAM, normalize, parse_term, pretty_codebruijn, pretty_index, pretty_named
from .relev import Bind, Relev, RPair
from .scope import stars
from .sexp import dump, load
from .universe import Con, Hash, TagB, code, decode, recompute_support, validate_db, validate_r

FORMATS = ("named", "index", "codebruijn", "sexp")
EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_FUEL = 0, 1, 2, 3

_SEXP_START = re.compile(r"\(\s*(up|var|con)\b")


@dataclass(frozen=True)
class Source:
    """One input term with where it came from, for diagnostics."""

    text: str
    origin: str
    is_sexp: bool


@dataclass
class Context:
    env: tuple[str, ...]
    formats: tuple[str, ...]
    fuel: int
    debug: bool

    @property
    def scope(self):
        return stars(len(self.env))


def _sources(args) -> Iterator[Source]:
    if args.expr is not None:
        fmt = args.source_format
        is_sexp = fmt == "sexp" or (fmt == "auto" and bool(_SEXP_START.match(args.expr.strip())))
        yield Source(args.expr, "<-e>", is_sexp)
        return
    path = Path(args.file)
    text = path.read_text(encoding="utf-8")
    if args.source_format == "sexp" or (args.source_format == "auto" and path.suffix == ".sexp"):
        yield Source(text, str(path), True)
        return
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield Source(line, f"{path}:{n}", False)


def _load(src: Source, ctx: Context) -> Relev:
    """Read a term as a co-de-Bruijn ``Relev``, validating s-expression input."""
    if not src.is_sexp:
        return code(LAM, parse_term(src.text, ctx.env), ctx.scope)
    t = load(LAM, src.text, ctx.scope)
    if isinstance(t, Relev):
        validate_r(LAM, t, ctx.scope)
        return t
    validate_db(LAM, t, ctx.scope)
    return code(LAM, t, ctx.scope)


def render(r: Relev, fmt: str, ctx: Context) -> str:
    match fmt:
        case "named":
            return pretty_named(decode(LAM, r, ctx.scope), ctx.env)
        case "index":
            return pretty_index(decode(LAM, r, ctx.scope), len(ctx.env))
        case "codebruijn":
            return pretty_codebruijn(r)
        case "sexp":
            return dump(r)
    raise ValueError(fmt)


def _emit(r: Relev, ctx: Context, out) -> None:
    for fmt in ctx.formats:
        text = render(r, fmt, ctx)
        print(f"{fmt}: {text}" if len(ctx.formats) > 1 else text, file=out)


def _covers(t) -> Iterator[str]:
    """Every cover in a term, outermost first, left to right."""
    match t:
        case Relev(thing, _):
            yield from _covers(thing)
        case Hash(p) | Con(p) | TagB(_, p) | Bind(_, p):
            yield from _covers(p)
        case RPair(left, right, cover):
            yield str(cover)
            yield from _covers(left)
            yield from _covers(right)


def _debug_lines(r: Relev, ctx: Context, out) -> None:
    print(f"  support: {r.thinning}", file=out)
    print("  covers: " + (" ".join(_covers(r)) or "none"), file=out)


def cmd_show(src: Source, ctx: Context, out) -> int:
    r = _load(src, ctx)
    _emit(r, ctx, out)
    if ctx.debug:
        _debug_lines(r, ctx, out)
    return EXIT_OK


def cmd_normalize(src: Source, ctx: Context, out) -> int:
    r = _load(src, ctx)
    try:
        nf, steps = normalize(r, ctx.fuel)
    except OutOfFuel as e:
        _emit(e.partial, ctx, out)
        print(f"steps: {e.steps} (out of fuel)", file=out)
        print(f"error: {src.origin}: out of fuel after {e.steps} steps", file=sys.stderr)
        return EXIT_FUEL
    if ctx.debug:
        validate_r(LAM, nf, ctx.scope)
    _emit(nf, ctx, out)
    print(f"steps: {steps}", file=out)
    return EXIT_OK


def cmd_check(src: Source, ctx: Context, out) -> int:
    r = _load(src, ctx)
    sup = recompute_support(LAM, r.thing, r.support)
    assert sup.is_identity
    validate_db(LAM, decode(LAM, r, ctx.scope), ctx.scope)
    print(f"ok {src.origin}", file=out)
    return EXIT_OK


def _run_terms(args, action: Callable[[Source, Context, object], int]) -> int:
    ctx = Context(
        env=tuple(x for x in (args.env or "").split(",") if x),
        formats=tuple(args.format or ["named"]),
        fuel=args.fuel,
        debug=args.debug,
    )
    hsub.set_debug(ctx.debug)
    status = EXIT_OK
    for src in _sources(args):
        try:
            code_ = action(src, ctx, sys.stdout)
        except (ParseError, UnboundName) as e:
            print(f"error: {src.origin}: {type(e).__name__}: {e}", file=sys.stderr)
            code_ = EXIT_PARSE
        except PathError as e:
            print(f"error: {src.origin}: {type(e).__name__} at {e.where}: {e.message}", file=sys.stderr)
            code_ = EXIT_INVALID
        except KernelError as e:
            print(f"error: {src.origin}: {type(e).__name__}: {e}", file=sys.stderr)
            code_ = EXIT_INVALID
        status = max(status, code_)
    return status


def cmd_bench(args) -> int:
    names = list(bench.WORKLOADS) if args.workload == "all" else [args.workload]
    sizes = [int(n) for n in args.sizes.split(",")]
    rows = bench.run(names, sizes, args.fuel)
    print(bench.Row.HEADER)
    for row in rows:
        print(row.tsv())
    if args.figure:
        bench.plot(rows, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return EXIT_OK


def _term_options(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-e", "--expr", help="term given inline")
    src.add_argument("file", nargs="?", help="file with one term per line (# comments), or a .sexp file")
    p.add_argument("--env", help="free variable names, oldest first, comma separated")
    p.add_argument("--fuel", type=_natural, default=1000, help="maximum β-steps (default 1000)")
    p.add_argument("--format", action="append", choices=FORMATS,
                   help="output format; repeat for several (default named)")
    p.add_argument("--from", dest="source_format", choices=("auto", "lambda", "sexp"), default="auto",
                   help="input syntax (default: by file extension or leading form)")
    p.add_argument("--debug", action="store_true", help="re-validate every substitution and show covers")


def _natural(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="codebruijn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("show", "print terms in the chosen formats"),
        ("normalize", "β-normalize (normal order) and report the step count"),
        ("check", "validate shape and relevance"),
    ]:
        _term_options(sub.add_parser(name, help=text))
    b = sub.add_parser("bench", help="compare substitution engines on generated workloads")
    b.add_argument("--workload", choices=("all", *bench.WORKLOADS), default="all")
    b.add_argument("--sizes", default="1,2,4,8", help="comma-separated workload sizes")
    b.add_argument("--fuel", type=_natural, default=10000)
    b.add_argument("--figure", help="also plot visit counts to this image file")
    return parser


def main(argv: list[str] | None = None) -> int:
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    args = build_parser().parse_args(argv)
    match args.command:
        case "bench":
            return cmd_bench(args)
        case "show":
            return _run_terms(args, cmd_show)
        case "normalize":
            return _run_terms(args, cmd_normalize)
        case "check":
            return _run_terms(args, cmd_check)
    return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
