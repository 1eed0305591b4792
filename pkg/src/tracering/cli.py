"""Command-line front end.

    tracering trace <word>
    tracering ring --u <word> --v <word>
    tracering ring --family thm1|thm2 --r <word> --n <int>
    tracering pretzel --m <int> --n <int>
    tracering variety --n <int>
    tracering verify --suite trace|charring|pretzel|variety [--n-range a..b] [--seed s]

Every subcommand accepts ``--format text|json``.  Exit status: 0 success,
1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence, TextIO

from . import __version__
from .certificate import Certificate
from .charring import Presentation, four_generators, thm1_generators, thm1_presentation, thm2_generators, thm2_presentation
from .fgword import WordSyntaxError, format_word, parse_word
from .kernels import BACKEND
from .pretzel import pretzel_generators, pretzel_words
from .suites import DEFAULT_RANGES, DEFAULT_SEED, SUITES, run_suite
from .trace import trace_poly
from .variety import TorusKnotError, build_variety_data, component_report, identity_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _n_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                     help="output format (default: text)")

    parser = argparse.ArgumentParser(prog="tracering", parents=[fmt],
                                     description="SL2 trace polynomials and character ring generators")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", parents=[fmt], help="trace polynomial of a word")
    p.add_argument("word")

    p = sub.add_parser("ring", parents=[fmt], help="universal character ring generators")
    p.add_argument("--u", help="first word of a two-word presentation u = v")
    p.add_argument("--v", help="second word (use 1 for the identity)")
    p.add_argument("--family", choices=("thm1", "thm2"), help="palindromic family with shift 1 or 2")
    p.add_argument("--r", help="relator word r for --family")
    p.add_argument("--n", type=int, help="family parameter n")

    p = sub.add_parser("pretzel", parents=[fmt], help="(-2,2m+1,2n+1)-pretzel knot presentation")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("variety", parents=[fmt], help="(-2,3,2n+1)-pretzel character variety")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[fmt], help="run a property suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--n-range", type=_n_range, default=None,
                   help="inclusive integer range a..b (defaults depend on the suite)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    return parser


def _normalize(argv: Sequence[str]) -> list[str]:
    # "--n-range -2..4" would otherwise be read as an option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--n-range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--n-range={nxt}")
        else:
            out.append(tok)
    return out


def _word(text: str | None, flag: str):
    if text is None:
        raise UsageError(f"{flag} is required")
    return parse_word(text)


def _emit_generators(gens, header: list[tuple[str, str]], fmt: str, out: TextIO, extra: dict | None = None):
    if fmt == "json":
        doc = dict(extra or {})
        doc.update(gens.to_json())
        doc["generators_text"] = [str(g) for g in gens]
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for k, v in header:
            out.write(f"{k}: {v}\n")
        for i, g in enumerate(gens, 1):
            out.write(f"g{i} = {g}\n")


def cmd_trace(args, out: TextIO) -> int:
    u = _word(args.word, "word")
    p = trace_poly(u)
    if args.format == "json":
        out.write(json.dumps({"word": format_word(u), "poly": p.to_json(), "text": str(p)}, indent=2) + "\n")
    else:
        out.write(f"{p}\n")
    return EXIT_OK


def cmd_ring(args, out: TextIO) -> int:
    if args.family is None:
        if args.r is not None or args.n is not None:
            raise UsageError("--r/--n require --family")
        pres = Presentation(_word(args.u, "--u"), _word(args.v, "--v"))
        gens = four_generators(pres)
    else:
        if args.u is not None or args.v is not None:
            raise UsageError("--u/--v cannot be combined with --family")
        r = _word(args.r, "--r")
        if args.n is None:
            raise UsageError("--n is required with --family")
        if args.family == "thm1":
            pres, gens = thm1_presentation(r, args.n), thm1_generators(r, args.n)
        else:
            pres, gens = thm2_presentation(r, args.n), thm2_generators(r, args.n)
    rel = {"lhs": format_word(pres.lhs), "rhs": format_word(pres.rhs)}
    _emit_generators(gens, [("presentation", str(pres))], args.format, out, {"presentation": rel})
    return EXIT_OK


def cmd_pretzel(args, out: TextIO) -> int:
    pw = pretzel_words(args.m, args.n)
    gens = pretzel_generators(args.m, args.n)
    words = {
        "m": args.m,
        "n": args.n,
        "u": format_word(pw.u),
        "s": format_word(pw.s),
        "r": format_word(pw.r),
        "relator": format_word(pw.relator),
    }
    header = [("knot", f"(-2,{2 * args.m + 1},{2 * args.n + 1})-pretzel")]
    header += [(k, str(v)) for k, v in words.items() if k not in ("m", "n")]
    _emit_generators(gens, header, args.format, out, words)
    return EXIT_OK


def cmd_variety(args, out: TextIO) -> int:
    n = args.n
    data = build_variety_data(n)
    ids = identity_suite(n)
    report = component_report(n)  # raises TorusKnotError for n in {0, 1, 2}
    ok = ids.passed and report.passed
    if args.format == "json":
        doc = {
            "n": n,
            "knot": f"(-2,3,{2 * n + 1})-pretzel",
            "polynomials": data.to_json(),
            "identity_suite": ids.to_json(),
            "certificate": report.to_json(),
            "component_count": report.outputs.get("component_count"),
            "pass": ok,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"knot: (-2,3,{2 * n + 1})-pretzel\n")
        out.write(f"Q = {data.Q}\nR_n = {data.Rn}\nT = {data.T}\n")
        out.write(f"{ids}\n{report}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out: TextIO) -> int:
    cert: Certificate = run_suite(args.suite, args.n_range or DEFAULT_RANGES[args.suite], seed=args.seed)
    if args.format == "json":
        doc = cert.to_json()
        doc["suite"] = args.suite
        doc["seed"] = args.seed
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"{cert}\n")
    return EXIT_OK if cert.passed else EXIT_FAIL


COMMANDS = {
    "trace": cmd_trace,
    "ring": cmd_ring,
    "pretzel": cmd_pretzel,
    "variety": cmd_variety,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_normalize(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    # --format may appear before or after the subcommand; the action object is
    # shared between the parsers, so its default stays SUPPRESS and is filled here
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, WordSyntaxError, TorusKnotError) as exc:
        err.write(f"tracering {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
