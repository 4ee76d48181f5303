"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
The default output format comes from ``$STURMRC_FORMAT`` (``text`` or ``json``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, List, Optional, Sequence

from . import __version__
from .christoffel import christoffel_tree, classify_christoffel
from .errors import AbelianIncomparable, NotChristoffel, SturmrcError
from .exact import QuadraticReal, parse_number
from .iet import IETParams, iet_word, three_gap, verify_3iet
from .morphisms import apply, derived_word, is_sturmian_morphism, parse_morphism, return_words
from .rcfact import coarsen, compare_specs, refine, verify_theorem_main
from .sweep import verify_sweep
from .words import MechanicalSpec, characteristic_prefix, mechanical_prefix, sturmian_prefix_check

FORMAT_ENV = "STURMRC_FORMAT"


class UsageError(Exception):
    pass


def _number(text: str, flag: str) -> QuadraticReal:
    try:
        return parse_number(text)
    except SturmrcError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _spec(slope: str, intercept: str, kind: str, flags: str) -> MechanicalSpec:
    try:
        return MechanicalSpec(_number(slope, "--slope"), _number(intercept, flags), kind)
    except SturmrcError as exc:
        raise UsageError(f"--slope/{flags}: {exc}") from None


def _emit(args, payload: dict, text: Callable[[], str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text())


def cmd_generate(args) -> int:
    spec = _spec(args.slope, args.intercept, args.kind, "--intercept")
    try:
        w = mechanical_prefix(spec, args.length)
    except SturmrcError as exc:
        raise UsageError(f"--slope: {exc}") from None
    _emit(args, {**spec.to_dict(), "length": args.length, "word": str(w)}, lambda: str(w))
    return 0


def cmd_classify(args) -> int:
    try:
        c = classify_christoffel(args.word)
    except NotChristoffel:
        _emit(args, {"word": args.word, "kind": None}, lambda: f"{args.word}: not Christoffel")
        return 1
    except SturmrcError as exc:
        raise UsageError(f"word: {exc}") from None
    ones, zeros = c.slope
    payload = {"word": args.word, "kind": c.kind, "slope": f"{ones}/{ones + zeros}"}
    _emit(args, payload, lambda: f"{args.word}: {c.kind}, slope {ones}/{ones + zeros}")
    return 0


def cmd_tree(args) -> int:
    if args.depth < 0:
        raise UsageError("--depth: must be non-negative")
    root = christoffel_tree(args.depth, ("1", "0") if args.upper else ("0", "1"))
    _emit(args, root.to_dict(), lambda: "\n".join(root.lines()))
    return 0


def _compare(args):
    s1 = _spec(args.slope, args.intercept1, args.kind1, "--intercept1")
    s2 = _spec(args.slope, args.intercept2, args.kind2, "--intercept2")
    if not s1.slope.is_irrational:
        raise UsageError("--slope: slope must be irrational")
    return compare_specs(s1, s2, args.length)


def _compare_payload(args, f) -> dict:
    rep = verify_theorem_main(f)
    payload = {"slope": _number(args.slope, "--slope").to_text(), **f.to_dict()}
    payload["theorem_main"] = {"size": rep.alphabet_size, "concat": rep.concat,
                               "status": rep.status, "counts": rep.counts}
    return payload


def cmd_compare(args) -> int:
    try:
        f = _compare(args)
    except AbelianIncomparable as exc:
        reason = str(exc)
        _emit(args, {"incomparable": True, "reason": reason}, lambda: f"incomparable: {reason}")
        return 0
    payload = _compare_payload(args, f)
    status = payload["theorem_main"]["status"]

    def text():
        lines = [" ".join(f.words[:args.show]) + (" ..." if len(f) > args.show else ""),
                 f"alphabet: {', '.join(f.alphabet)}  kind: {payload['kind']}"
                 f"  truncated: {f.truncated}",
                 f"theorem: size {payload['theorem_main']['size']}"
                 f" {payload['theorem_main']['concat'] or ''} [{status}]"]
        return "\n".join(lines)

    _emit(args, payload, text)
    return 1 if status == "FAIL" else 0


def _transform(args, op) -> int:
    try:
        f = _compare(args)
        g, coded = op(f)
    except SturmrcError as exc:
        raise UsageError(f"--intercept1/--intercept2/--length: {type(exc).__name__}: {exc}") from None
    max_n = min(20, len(coded) // 10)
    check = sturmian_prefix_check(coded, max_n)
    conserved = g.word() == f.word()
    payload = {**g.to_dict(), "coded": coded, "check": check.to_dict(), "conserved": conserved}

    def text():
        return "\n".join([" ".join(g.words[:args.show]) + (" ..." if len(g) > args.show else ""),
                          f"alphabet: {', '.join(g.alphabet)}",
                          f"coded: {coded[:80]}{'...' if len(coded) > 80 else ''}",
                          f"sturmian check (n<={max_n}): {check.verdict}",
                          f"word conserved: {conserved}"])

    _emit(args, payload, text)
    return 1 if check.verdict == "FAIL" or not conserved else 0


def cmd_refine(args) -> int:
    return _transform(args, refine)


def cmd_coarsen(args) -> int:
    return _transform(args, coarsen)


def _map(args):
    try:
        return parse_morphism(args.map)
    except SturmrcError as exc:
        raise UsageError(f"--map: {exc}") from None


def cmd_morphism_apply(args) -> int:
    m = _map(args)
    try:
        out = apply(m, args.word)
    except SturmrcError as exc:
        raise UsageError(f"--word: {exc}") from None
    _emit(args, {"map": str(m), "word": args.word, "image": out}, lambda: out)
    return 0


def cmd_morphism_check(args) -> int:
    m = _map(args)
    try:
        ok, witness = is_sturmian_morphism(m)
    except SturmrcError as exc:
        raise UsageError(f"--map: {exc}") from None
    _emit(args, {"map": str(m), "sturmian": ok, "witness": witness},
          lambda: "sturmian" if ok else f"not sturmian (image {witness} is not a Christoffel conjugate)")
    return 0 if ok else 1


def cmd_returns(args) -> int:
    slope = _number(args.slope, "--slope")
    if args.prefix_len < 1:
        raise UsageError("--prefix-len: must be positive")
    try:
        c = characteristic_prefix(slope, args.length)
    except SturmrcError as exc:
        raise UsageError(f"--slope: {exc}") from None
    p = c[:args.prefix_len]
    try:
        rets = return_words(c, p)
        wp, fp = derived_word(c, p)
    except SturmrcError as exc:
        raise UsageError(f"--prefix-len/--length: {type(exc).__name__}: {exc}") from None
    check = sturmian_prefix_check(wp, min(15, len(wp) // 10))
    payload = {"prefix": str(p), "returns": list(rets), "derived": wp[:200],
               "derived_length": len(wp), "check": check.verdict}
    _emit(args, payload, lambda: "\n".join([
        f"prefix: {p}", f"returns: {', '.join(rets)}",
        f"derived: {wp[:80]}{'...' if len(wp) > 80 else ''}", f"sturmian check: {check.verdict}"]))
    return 1 if check.verdict == "FAIL" else 0


def cmd_iet_run(args) -> int:
    try:
        p = IETParams(_number(args.alpha, "--alpha"), _number(args.beta, "--beta"),
                      _number(args.ell, "--ell"), _number(args.rho, "--rho"))
    except SturmrcError as exc:
        raise UsageError(f"--alpha/--beta/--ell/--rho: {exc}") from None
    u = iet_word(p, args.length)
    payload = {**p.to_dict(), "word": u}
    if args.verify:
        try:
            rep = verify_3iet(u)
        except SturmrcError as exc:
            raise UsageError(f"--length: {type(exc).__name__}: {exc}") from None
        payload["verify"] = rep.to_dict()
        _emit(args, payload, lambda: f"{u}\n3-iet criterion: {rep.verdict}")
        return 1 if rep.verdict == "FAIL" else 0
    _emit(args, payload, lambda: u)
    return 0


def cmd_gaps(args) -> int:
    try:
        rep = three_gap(_number(args.alpha, "--alpha"), _number(args.beta, "--beta"), args.N)
    except SturmrcError as exc:
        raise UsageError(f"--alpha/--beta/-N: {exc}") from None
    ok = len(rep.gap_values) <= 3 and rep.sum_property
    _emit(args, rep.to_dict(), lambda: "\n".join(
        [f"gap {g}: {rep.counts[g]}" for g in rep.gap_values] + [f"sum property: {rep.sum_property}"]))
    return 0 if ok else 1


def cmd_verify_sweep(args) -> int:
    if args.samples < 0 or args.length < 1:
        raise UsageError("--samples/--length: must be non-negative / positive")
    s = verify_sweep(args.samples, args.length, args.seed, args.gap_samples, args.gap_n,
                     args.include_exception, args.workers)

    def text():
        lines = [f"sweep seed={s.seed} samples={s.samples} length={s.length}"]
        for prop, c in s.properties.items():
            lines.append(f"{prop:16s} pass={c['pass']} fail={c['fail']} "
                         f"inconclusive={c['inconclusive']} skipped={c['skipped']}")
        lines += [f"{k}: {v}" for k, v in s.exceptions.items()]
        lines += [f"FAIL {x}" for x in s.failures]
        return "\n".join(lines)

    _emit(args, s.to_dict(), text)
    return 1 if s.failed or s.failures else 0


def _compare_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--slope", required=True, help="qr:a,b,c,d or rat:p/q")
    p.add_argument("--intercept1", required=True)
    p.add_argument("--intercept2", required=True)
    p.add_argument("--kind1", choices=("lower", "upper"), default="lower")
    p.add_argument("--kind2", choices=("lower", "upper"), default="lower")
    p.add_argument("--length", type=int, default=10_000)
    p.add_argument("--show", type=int, default=40, help="terms shown in text output")


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)

    parser = argparse.ArgumentParser(prog="sturmrc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="prefix of a mechanical word")
    p.add_argument("--slope", required=True)
    p.add_argument("--intercept", required=True)
    p.add_argument("--kind", choices=("lower", "upper"), default="lower")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("classify", parents=[common], help="classify a Christoffel word")
    p.add_argument("word")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tree", parents=[common], help="the Christoffel tree")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--upper", action="store_true", help="root at (1,0)")
    p.set_defaults(func=cmd_tree)

    for name, func, hlp in (("compare", cmd_compare, "Abelian comparison (RC factorization)"),
                            ("refine", cmd_refine, "split the longest term of an RC factorization"),
                            ("coarsen", cmd_coarsen, "merge adjacent u,v terms")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        _compare_args(p)
        p.set_defaults(func=func)

    returns_args = argparse.ArgumentParser(add_help=False)
    returns_args.add_argument("--slope", required=True)
    returns_args.add_argument("--prefix-len", type=int, required=True)
    returns_args.add_argument("--length", type=int, default=10_000)

    p = sub.add_parser("morphism", help="morphism tools")
    msub = p.add_subparsers(dest="action", required=True)
    q = msub.add_parser("apply", parents=[common])
    q.add_argument("--map", required=True, help='e.g. "0:01,1:0"')
    q.add_argument("--word", required=True)
    q.set_defaults(func=cmd_morphism_apply)
    q = msub.add_parser("check", parents=[common])
    q.add_argument("--map", required=True)
    q.set_defaults(func=cmd_morphism_check)
    q = msub.add_parser("returns", parents=[common, returns_args])
    q.set_defaults(func=cmd_returns)

    p = sub.add_parser("returns", parents=[common, returns_args],
                       help="return words to a prefix of the characteristic word")
    p.set_defaults(func=cmd_returns)

    gap_args = argparse.ArgumentParser(add_help=False)
    gap_args.add_argument("--alpha", required=True)
    gap_args.add_argument("--beta", required=True)
    gap_args.add_argument("-N", type=int, default=10_000)

    p = sub.add_parser("iet", help="three-interval exchanges")
    isub = p.add_subparsers(dest="action", required=True)
    q = isub.add_parser("run", parents=[common])
    q.add_argument("--alpha", required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--ell", default="rat:1")
    q.add_argument("--rho", required=True)
    q.add_argument("--length", type=int, required=True)
    q.add_argument("--verify", action="store_true", help="apply the sigma/sigma' criterion")
    q.set_defaults(func=cmd_iet_run)
    q = isub.add_parser("gaps", parents=[common, gap_args])
    q.set_defaults(func=cmd_gaps)

    p = sub.add_parser("gaps", parents=[common, gap_args], help="three-gap statistics")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("verify-sweep", parents=[common], help="seeded batch verification")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--length", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gap-samples", type=int, default=None)
    p.add_argument("--gap-n", type=int, default=10_000)
    p.add_argument("--include-exception", action="store_true",
                   help="also check that the {0c, 1c} pair is incomparable")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify_sweep)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "length", 0) is not None and getattr(args, "length", 0) < 0:
        print(f"{parser.prog}: error: --length: must be non-negative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
