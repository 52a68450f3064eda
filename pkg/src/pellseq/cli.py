"""Command-line front end.

Exit codes: 0 success / proven / found, 1 verified negative (counterexample,
no certificate, oracle mismatch), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence, TextIO

from . import pell, sequences
from .sequences import Family, RecurrenceSpec
from .symbolic import (
    Counterexample,
    IdentityParseError,
    corpus,
    corpus_entry,
    numeric_sweep,
    parse_identity,
    prove,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, Family):
        return value.value
    return value


class Emitter:
    """Writes records either as JSON lines or as aligned ``key=value`` text."""

    def __init__(self, fmt: str, out: TextIO) -> None:
        self.fmt = fmt
        self.out = out

    def record(self, kind: str, **fields: Any) -> None:
        payload = {"kind": kind, **{k: _jsonable(v) for k, v in fields.items()}}
        if self.fmt == "json-lines":
            self.out.write(json.dumps(payload) + "\n")
        else:
            parts = [kind] + [f"{k}={'-' if v is None else v}" for k, v in payload.items()
                              if k != "kind"]
            self.out.write("  ".join(parts) + "\n")


# --- subcommands ------------------------------------------------------------

def cmd_gen(args: argparse.Namespace, em: Emitter) -> int:
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    if args.family is not None:
        if args.r is not None or args.s is not None:
            raise UsageError("give either --family or --r/--s, not both")
        label = args.family
        value = lambda n: sequences.family_term(args.family, n)  # noqa: E731
    else:
        if args.r is None or args.s is None:
            raise UsageError("need --family or both --r and --s")
        label = f"A({args.r},{args.s})"
        spec = RecurrenceSpec.pell(args.r, args.s)
        value = lambda n: sequences.term_fast(spec, n)  # noqa: E731
    for n in range(args.start, args.stop + 1):
        em.record("term", sequence=label, n=n, value=value(n))
    return EXIT_OK


def cmd_prove(args: argparse.Namespace, em: Emitter) -> int:
    if args.all:
        targets = [(e.name, e.text) for e in corpus()]
    elif args.identity is not None:
        try:
            entry = corpus_entry(args.identity)
        except KeyError:
            names = ", ".join(e.name for e in corpus())
            raise UsageError(f"unknown identity {args.identity!r}; known: {names}") from None
        targets = [(entry.name, entry.text)]
    else:
        targets = [("expr", args.expr)]

    status = EXIT_OK
    for name, text in targets:
        try:
            ident = parse_identity(text)
        except IdentityParseError as exc:
            raise UsageError(str(exc)) from None
        outcome = prove(ident)
        fields: dict[str, Any] = {"name": name}
        if isinstance(outcome, Counterexample):
            status = EXIT_NEGATIVE
            fields.update(outcome="counterexample", witness_n=outcome.n,
                          lhs=outcome.lhs_value, rhs=outcome.rhs_value)
        else:
            fields.update(outcome="proven", witness_n=None)
        if args.sweep is not None:
            lo, hi = args.sweep
            miss = numeric_sweep(ident, lo, hi)
            fields["sweep"] = f"{lo}..{hi}"
            fields["sweep_agrees"] = (miss is None) == outcome.proven
            if not fields["sweep_agrees"]:
                status = EXIT_NEGATIVE
        em.record("proof", **fields)
    return status


def _seed_args(args: argparse.Namespace) -> pell.SeedPair:
    if args.r == 0 and args.s == 0:
        raise UsageError("seed r = s = 0 is not allowed")
    return pell.SeedPair(args.r, args.s)


def cmd_classify(args: argparse.Namespace, em: Emitter) -> int:
    seed = _seed_args(args)
    result = pell.classify(seed)
    if isinstance(result, pell.Member):
        em.record("classification", family=result.family, shift=result.shift,
                  mu_num=result.mu.numerator, mu_den=result.mu.denominator,
                  outcome="member", r=seed.r, s=seed.s, q=pell.invariant_q(seed))
        return EXIT_OK
    em.record("classification", family=None, shift=None, mu_num=None, mu_den=None,
              outcome="not_in_four_families", r=seed.r, s=seed.s, q=result.q)
    return EXIT_NEGATIVE


def cmd_certificate(args: argparse.Namespace, em: Emitter) -> int:
    seed = _seed_args(args)
    cert = pell.certificate(seed, args.window, args.n_check)
    if cert is None:
        em.record("certificate", m=None, h=None, c=2 * pell.invariant_q(seed),
                  found=False, r=seed.r, s=seed.s)
        return EXIT_NEGATIVE
    em.record("certificate", m=cert.m, h=cert.h, c=cert.c, found=True, r=seed.r, s=seed.s)
    return EXIT_OK


def cmd_pell(args: argparse.Namespace, em: Emitter) -> int:
    try:
        eq = pell.PellEquation(args.d, args.n_const)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.y_max < 0:
        raise UsageError("--y-max must be nonnegative")
    predicted = None
    if args.compare_families:
        try:
            predicted = pell.family_solutions(eq, args.y_max)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    brute = pell.pell_brute(eq, args.y_max)
    for sol in brute:
        em.record("solution", x=sol.x, y=sol.y)
    if predicted is None:
        return EXIT_OK
    match = predicted == brute
    em.record("comparison", d=eq.d, n_const=eq.n, y_max=args.y_max, match=match,
              brute_count=len(brute), family_count=len(predicted))
    return EXIT_OK if match else EXIT_NEGATIVE


def cmd_relations(args: argparse.Namespace, em: Emitter) -> int:
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    report = sequences.cross_relations_check(range(args.start, args.stop + 1))
    fail = report.failure
    em.record("relations", n_lo=args.start, n_hi=args.stop, checked=report.checked,
              ok=report.ok, relation=fail.relation if fail else None,
              n=fail.n if fail else None)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_fundamental(args: argparse.Namespace, em: Emitter) -> int:
    seed = _seed_args(args)
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    status = EXIT_OK
    for n in range(args.start, args.stop + 1):
        rep = pell.fundamental_check(seed, n)
        em.record("fundamental", n=n, lhs=rep.lhs, rhs=rep.rhs, equal=rep.equal)
        if not rep.equal:
            status = EXIT_NEGATIVE
    return status


# --- argument parsing -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _family(text: str) -> Family:
    try:
        return Family(text.upper() if text.lower() != "nsw" else "NSW")
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown family {text!r}; choose from {', '.join(f.value for f in Family)}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pellseq",
                     description="Sequences of A_n = 6A_{n-1} - A_{n-2} and Pell equations.")
    parser.add_argument("--format", choices=("table", "json-lines"), default="table")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("table", "json-lines"), default=argparse.SUPPRESS)

    p = sub.add_parser("gen", help="print terms of a family or of a seed (r, s)")
    p.add_argument("--family", type=_family)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", dest="stop", type=int, default=9)
    add_format(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("prove", help="prove corpus identities or a custom identity")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--identity")
    group.add_argument("--all", action="store_true")
    group.add_argument("--expr")
    p.add_argument("--sweep", nargs=2, type=int, metavar=("N_LO", "N_HI"))
    add_format(p)
    p.set_defaults(func=cmd_prove)

    for name, func, text in (("classify", cmd_classify, "reduce a seed to mu*F_{n+j}"),
                             ("certificate", cmd_certificate,
                              "find (m, h, c) with 32A_n^2 + c = h L_{2n+m+2}")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        if name == "certificate":
            p.add_argument("--window", type=int, default=10)
            p.add_argument("--n-check", type=int, default=10)
        add_format(p)
        p.set_defaults(func=func)

    p = sub.add_parser("pell", help="brute-force x^2 - D y^2 = N")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-const", type=int, required=True)
    p.add_argument("--y-max", type=int, required=True)
    p.add_argument("--compare-families", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("relations", help="check the cross-family relations on a range")
    p.add_argument("--from", dest="start", type=int, default=-10)
    p.add_argument("--to", dest="stop", type=int, default=30)
    add_format(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("fundamental", help="check the fundamental square equation")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--from", dest="start", type=int, default=1)
    p.add_argument("--to", dest="stop", type=int, default=10)
    add_format(p)
    p.set_defaults(func=cmd_fundamental)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, Emitter(args.format, out))
    except UsageError as exc:
        err.write(f"pellseq: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
