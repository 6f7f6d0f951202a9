"""Command-line front end: ``sturmocc <command> --slope S ...``.

Exit codes: 0 ok, 2 bad input, 3 not a factor, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NotAFactor, SturmError
from .occurrences import decompose, locate, render_decomposition, return_words
from .palindromes import classify, normal_slope
from .slope import parse_slope
from .standard import FAMILIES, SingularIndex, c_prefix, singular
from .verify import CHECKS, Limits

EXIT_OK, EXIT_INPUT, EXIT_NOT_FACTOR, EXIT_MISMATCH = 0, 2, 3, 4


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_prefix(args) -> int:
    word = c_prefix(args.slope, args.length)
    _emit(args, word, {"slope": str(args.slope), "length": args.length, "word": word})
    return EXIT_OK


def cmd_singular(args) -> int:
    idx = SingularIndex(args.family, args.n, args.k)
    word = singular(args.slope, idx)
    _emit(args, word, {"family": args.family, "n": args.n, "k": args.k, "word": word})
    return EXIT_OK


def cmd_classify(args) -> int:
    form = classify(args.slope, args.word)
    payload = {"subject": args.word, **form.to_dict()}
    text = f"{form.family} n={form.n} k={form.k} wing={form.wing or '-'}"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_occurrences(args) -> int:
    methods = ["closed", "oracle"] if args.method == "both" else [args.method]
    reports = [locate(args.slope, args.word, args.count, m) for m in methods]
    report = reports[0]
    _emit(args, " ".join(str(p) for p in report.positions), report.to_dict())
    if len(reports) == 2 and reports[0].positions != reports[1].positions:
        print("closed form and oracle disagree:", file=sys.stderr)
        for r in reports:
            print(f"  {r.method}: {' '.join(map(str, r.positions))}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_decompose(args) -> int:
    d = decompose(args.slope, args.word, args.length)
    style = "annotate" if args.annotate else "inline"
    _emit(args, render_decomposition(d, style), d.to_dict())
    return EXIT_OK


def cmd_returns(args) -> int:
    rw = return_words(args.slope, args.word)
    payload = {"subject": args.word, "first": rw.first, "second": rw.second}
    _emit(args, f"{rw.first} {rw.second}", payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    base, flipped = normal_slope(args.slope)
    if flipped:
        print(f"a_1 = 1: checking the complement {base} instead", file=sys.stderr)
    lim = Limits(max_n=args.max_n, prefix_len=args.prefix_len, count=args.count)
    results = {}
    for name, check in CHECKS.items():
        if args.only and name not in args.only:
            continue
        results[name] = check(base, lim)
    width = max(len(name) for name in results)
    lines = []
    for name, bad in results.items():
        status = "PASS" if not bad else f"FAIL ({len(bad)})"
        lines.append(f"{name:<{width}}  {status}")
        lines.extend(f"    {msg}" for msg in bad[:5])
    _emit(args, "\n".join(lines), {"slope": str(base), "violations": results})
    return EXIT_MISMATCH if any(results.values()) else EXIT_OK


def _slope_arg(text: str):
    try:
        return parse_slope(text)
    except SturmError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_word(p) -> None:
    p.add_argument("--word", required=True, help="factor over {a, b}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--slope", required=True, type=_slope_arg, help='slope literal, e.g. "2,(1)"')
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="sturmocc",
        description="Characteristic Sturmian words and the occurrences of their factors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prefix", parents=[common], help="print a prefix of c_alpha")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("singular", parents=[common], help="print a singular word")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("classify", parents=[common], help="structural form of a palindromic factor")
    _add_word(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("occurrences", parents=[common], help="first occurrence positions")
    _add_word(p)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="closed")
    p.set_defaults(func=cmd_occurrences)

    p = sub.add_parser("decompose", parents=[common], help="slice a prefix at the occurrences")
    _add_word(p)
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--annotate", action="store_true", help="prefix over a line of ^ markers")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("returns", parents=[common], help="the two return words")
    _add_word(p)
    p.set_defaults(func=cmd_returns)

    p = sub.add_parser("verify", parents=[common], help="run the invariant battery")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--prefix-len", type=int, default=100_000)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--only", nargs="*", choices=list(CHECKS), help="restrict to these checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 1) is not None and getattr(args, "count", 1) < 1:
        parser.error("--count must be >= 1")
    if getattr(args, "length", 0) < 0:
        parser.error("--length must be >= 0")
    try:
        return args.func(args)
    except NotAFactor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FACTOR
    except (SturmError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
