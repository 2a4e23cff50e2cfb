"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 unparseable or
invalid input, 3 a word outside the convergent (admissible) range.
Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import formulas as F
from .algebra import DomainError, pattern_count, product
from .numeval import EvalConfig, apply_Z
from .syntax import ParseError, format_latex, format_text, parse_word, to_json
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_ADMISSIBLE = 0, 1, 2, 3
DEFAULT_MAX_TERMS = 10**6


class UsageError(Exception):
    pass


def max_terms() -> int:
    raw = os.environ.get("STUFFLE_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"STUFFLE_MAX_TERMS must be an integer, got {raw!r}")


def term_bound(len1: int, len2: int) -> int:
    """Upper bound on the number of distinct words in a product of two words."""
    return sum(pattern_count(len1, len2, i) for i in range(min(len1, len2) + 1))


def _guard(len1: int, len2: int) -> None:
    cap = max_terms()
    bound = term_bound(len1, len2)
    if bound > cap:
        raise UsageError(
            f"product of words of lengths {len1} and {len2} may have up to {bound} terms, "
            f"above STUFFLE_MAX_TERMS={cap}"
        )


def _emit(result, op: str, fmt: str, zeta: bool = False, star: bool = False) -> None:
    if len(result) > max_terms():
        raise UsageError(f"result has {len(result)} terms, above STUFFLE_MAX_TERMS")
    if fmt == "json":
        print(to_json(result, op))
    elif fmt == "latex":
        print(format_latex(result, zeta=zeta, star=star))
    else:
        print(format_text(result, zeta=zeta, star=star))


def _word_arg(text: str):
    try:
        return parse_word(text)
    except ParseError as exc:
        raise UsageError(str(exc))


def cmd_product(args) -> int:
    u, v = _word_arg(args.w1), _word_arg(args.w2)
    _guard(len(u), len(v))
    result = product(u, v, signed=args.op == "stuffle-star")
    _emit(result, args.op, args.format)
    return EXIT_OK


def _blocks(text: str):
    # "2:1,3:0" -> ((2, 1), (3, 0))
    if text.strip() in ("", "()"):
        return ()
    out = []
    for col, item in _items(text):
        try:
            letter, power = item.split(":")
            out.append((int(letter), int(power)))
        except ValueError:
            raise UsageError(f"expected letter:power at column {col}: {text!r}")
    return tuple(out)


def _items(text: str):
    col = 1
    for item in text.split(","):
        yield col, item
        col += len(item) + 1


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"closed {args.kind} needs " + ", ".join(f"--{n}" for n in missing))
    return [getattr(args, n) for n in names]


def cmd_closed(args) -> int:
    kind, star, p = args.kind, args.star, args.p
    if p is None:
        raise UsageError("closed needs -p")
    zeta = False
    if kind == "simple":
        m, n = _need(args, "m", "n")
        _guard(m, n)
        result = F.simple_product_closed(p, m, n, star)
    elif kind == "cor11":
        k, l, m, n = _need(args, "k", "l", "m", "n")
        _guard(m + 1, n + 1)
        result = F.cor_1_1_expand(k, l, p, m, n, star)
    elif kind == "cor12":
        k, l1, l2, m, n1, n2 = _need(args, "k", "l1", "l2", "m", "n1", "n2")
        _guard(m + 1, n1 + n2 + 2)
        result = F.cor_1_2_expand(k, l1, l2, p, m, n1, n2, star)
    elif kind == "lemma02":
        l, m, n1, n2 = _need(args, "l", "m", "n1", "n2")
        _guard(m, n1 + n2 + 1)
        result = F.lemma_0_2_expand(p, l, m, n1, n2, star)
    elif kind == "lemma022":
        l1, l2, m, n1, n2 = _need(args, "l1", "l2", "m", "n1", "n2")
        _guard(m, n1 + n2 + 2)
        result = F.lemma_0_22_expand(p, l1, l2, m, n1, n2, star)
    elif kind == "reduce":
        left, right = _need(args, "left", "right")
        spec = F.GeneralProductSpec(p, _blocks(left), _blocks(right), star)
        _guard(len(spec.left_word()), len(spec.right_word()))
        result = F.reduce_general(spec)
    else:  # zeta11
        k, l, m, n = _need(args, "k", "l", "m", "n")
        _guard(m + 1, n + 1)
        result = F.zeta_stuffle_formula_1_1(k, l, p, m, n, star)
        zeta = True
    _emit(result, f"closed-{kind}" + ("-star" if star else ""), args.format, zeta=zeta, star=star)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_weight < 2:
        raise UsageError("--max-weight must be >= 2")
    names = SUITES if args.suite == "all" else (args.suite,)
    first_failure = None
    for name in names:
        report = run_suite(name, args.max_weight, seed=args.seed, samples=args.samples)
        print(report.line())
        if not report.passed and first_failure is None:
            first_failure = report.failures[0]
    if first_failure is not None:
        print(json.dumps(first_failure, default=list, sort_keys=True))
        return EXIT_VERIFY
    return EXIT_OK


def cmd_eval(args) -> int:
    w = _word_arg(args.word)
    if not w or w[0] < 2:
        print(f"error: {args.word!r} is not admissible (first letter must be >= 2)", file=sys.stderr)
        return EXIT_ADMISSIBLE
    cfg = EvalConfig(cutoff=args.terms, tail_mode=args.tail, tolerance=args.tol)
    est = apply_Z(w, star=args.star, cfg=cfg)
    if args.format == "json":
        print(json.dumps({"word": list(w), "star": args.star, "value": est.value,
                          "error_bound": est.error, "terms": args.terms}))
    else:
        print(f"{est.value:.12g} +/- {est.error:.3g}")
    if est.error > args.tol:
        print(f"warning: truncation bound {est.error:.3g} exceeds --tol {args.tol:g}", file=sys.stderr)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stuffle", description="Stuffle products of words and multiple zeta values.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=("text", "json", "latex"), default="text", help="output format")

    p = sub.add_parser("product", help="multiply two words")
    p.add_argument("op", choices=("stuffle", "stuffle-star"))
    p.add_argument("w1", help='word, e.g. "2,1,1", "2,{1}^2" or "()"')
    p.add_argument("w2")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_product)

    c = sub.add_parser("closed", help="evaluate an expansion formula")
    c.add_argument("kind", choices=("simple", "cor11", "cor12", "lemma02", "lemma022", "reduce", "zeta11"))
    c.add_argument("-p", type=int)
    c.add_argument("-m", type=int)
    c.add_argument("-n", type=int)
    c.add_argument("-k", type=int)
    c.add_argument("-l", type=int)
    c.add_argument("--l1", type=int)
    c.add_argument("--l2", type=int)
    c.add_argument("--n1", type=int)
    c.add_argument("--n2", type=int)
    c.add_argument("--left", help='blocks letter:power, e.g. "2:1,3:0"')
    c.add_argument("--right")
    c.add_argument("--star", action="store_true", help="use the signed product")
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_closed)

    v = sub.add_parser("verify", help="run self-check suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--max-weight", type=int, default=6)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=25, help="extra random word pairs (core, thm2)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate zeta or zeta-star of a word")
    e.add_argument("word")
    e.add_argument("--star", action="store_true")
    e.add_argument("--terms", type=int, default=20000, help="summation cutoff M")
    e.add_argument("--tol", type=float, default=1e-3)
    e.add_argument("--tail", choices=("none", "integral"), default="integral")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError) as exc:
        if isinstance(exc, F.AdmissibilityError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ADMISSIBLE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
