"""Command-line front end.

    inclexcl analyze "(X1&X2)|(X1&X3)|(X2&X3)" --n 3
    inclexcl verify "X1|X2" --n 3 --trials 1000 --seed 0
    inclexcl family at-least --m 2 --n 4 --cross-check
    inclexcl eval "X1|X2" sequence.json
    inclexcl charset "X1" --n 2

Exit status: 0 on success (analyze: the expression is inclusion-exclusion-
like; verify: every check passed), 1 when analyze finds no identity or a
verification check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .charset import charset, indices_of
from .errors import InclExclError
from .evaluate import (SetSequence, check_identity, eval_charset, eval_expr,
                       format_sequence, format_set, i_vector, indicator_sequence,
                       random_sequence, sigma_vector)
from .expr import DEFAULT_N_MAX, check_arity, parse, to_text
from .iel import IsLike, coefficients, decide_iel, family, family_levels
from .render import RENDERERS, IdentityReport, build_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class CliInputError(Exception):
    pass


def _read_expression(args) -> str:
    if args.expression is None or args.expression == "-":
        return sys.stdin.read().strip()
    return args.expression


def analyze(text: str, n: int, n_max: int = DEFAULT_N_MAX) -> IdentityReport:
    """Parse, compile, decide and package the result."""
    e = parse(text, n, n_max)
    s = charset(e, n, n_max=n_max)
    return build_report(to_text(e), s, decide_iel(s))


def verify(text: str, n: int, trials: int, universe: int, seed: int,
           n_max: int = DEFAULT_N_MAX) -> dict:
    """Check the analysed identity on random sequences, or confirm the witness.

    Each trial's sequence comes from its own generator seeded by
    ``(seed, trial)``, so results do not depend on how trials are scheduled.
    """
    e = parse(text, n, n_max)
    s = charset(e, n, n_max=n_max)
    decision = decide_iel(s)
    out: dict = {"n": n, "expression": to_text(e), "iel": isinstance(decision, IsLike)}
    if isinstance(decision, IsLike):
        passed = 0
        for t in range(trials):
            a = random_sequence(random.Random(f"{seed}:{t}"), n, universe)
            if check_identity(s, decision.coeffs, a) and eval_expr(e, a) == eval_charset(s, a):
                passed += 1
        out.update(coefficients=list(decision.coeffs), trials=trials,
                   universe=universe, seed=seed, passed=passed,
                   failed=trials - passed, ok=passed == trials)
        return out
    seq_in = indicator_sequence(decision.witness_in, n)
    seq_out = indicator_sequence(decision.witness_out, n)
    iv_in, iv_out = i_vector(seq_in), i_vector(seq_out)
    card_in, card_out = len(eval_expr(e, seq_in)), len(eval_expr(e, seq_out))
    out.update(witness_in=indices_of(decision.witness_in),
               witness_out=indices_of(decision.witness_out),
               i_vector_in=list(iv_in), i_vector_out=list(iv_out),
               cardinality_in=card_in, cardinality_out=card_out,
               ok=iv_in == iv_out and card_in == 1 and card_out == 0)
    return out


def _render_verify(v: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(v, ensure_ascii=False)
    if v["iel"]:
        return (f"E = {v['expression']}\ncoefficients {tuple(v['coefficients'])}\n"
                f"{v['passed']}/{v['trials']} pass "
                f"(universe {v['universe']}, seed {v['seed']})")
    status = "witness confirmed" if v["ok"] else "witness NOT confirmed"
    return (f"E = {v['expression']}\n{status}: "
            f"{format_set(v['witness_in'])} and {format_set(v['witness_out'])} "
            f"give i-vectors {tuple(v['i_vector_in'])} and {tuple(v['i_vector_out'])}, "
            f"cardinalities {v['cardinality_in']} vs {v['cardinality_out']}")


def _load_sequence(path: str) -> SetSequence:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliInputError(f"cannot read sequence file {path!r}: {exc}") from exc
    if not isinstance(data, list) or not all(
            isinstance(s, list) and all(isinstance(x, int) for x in s) for s in data):
        raise CliInputError("a sequence file holds a JSON array of integer arrays")
    try:
        return SetSequence.of(data)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc


# -------------------------------------------------------------- commands

def cmd_analyze(args) -> int:
    report = analyze(_read_expression(args), args.n, args.nmax)
    print(RENDERERS[args.format](report))
    return EXIT_OK if report.iel else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise CliInputError("--trials must be at least 1")
    if not 1 <= args.universe <= 16:
        raise CliInputError("--universe must lie in 1..16")
    v = verify(_read_expression(args), args.n, args.trials, args.universe,
               args.seed, args.nmax)
    print(_render_verify(v, args.format))
    return EXIT_OK if v["ok"] else EXIT_FAIL


def cmd_family(args) -> int:
    check_arity(args.n, args.nmax)
    coeffs = family(args.kind, args.n, args.m)
    levels = family_levels(args.kind, args.n, args.m)
    checked = None
    if args.cross_check:
        checked = coeffs == coefficients(levels, args.n)
    if args.format == "json":
        d = {"family": args.kind, "m": args.m, "n": args.n,
             "cardinalities": sorted(levels), "coefficients": list(coeffs)}
        if checked is not None:
            d["cross_check"] = checked
        print(json.dumps(d))
    else:
        report = IdentityReport(args.n, args.kind, (), True, tuple(sorted(levels)),
                                coefficients=coeffs)
        print(RENDERERS[args.format](report))
        if checked is not None:
            print(f"cross-check: {'ok' if checked else 'MISMATCH'}")
    return EXIT_FAIL if checked is False else EXIT_OK


def cmd_eval(args) -> int:
    a = _load_sequence(args.sequence)
    if args.n is not None and args.n != a.arity:
        raise CliInputError(f"--n {args.n} but the sequence holds {a.arity} sets")
    e = parse(args.expression, a.arity, args.nmax)
    value = eval_expr(e, a)
    iv, sv = i_vector(a), sigma_vector(a)
    if args.format == "json":
        print(json.dumps({"n": a.arity, "expression": to_text(e),
                          "sequence": a.to_lists(), "value": sorted(value),
                          "cardinality": len(value),
                          "i_vector": list(iv), "sigma_vector": list(sv)}))
    elif args.format == "latex":
        print(r"E(\mathcal{A}) = " + (r"\{" + ",".join(map(str, sorted(value))) + r"\}"
                                      if value else r"\emptyset"))
        print(r"i_{n,k}(\mathcal{A}) = (" + ",".join(map(str, iv)) + ")")
        print(r"\sigma_{n,k}(\mathcal{A}) = (" + ",".join(map(str, sv)) + ")")
    else:
        print(f"A = {format_sequence(a)}")
        print(f"E(A) = {format_set(value)}")
        print(f"i = ({','.join(map(str, iv))})")
        print(f"sigma = ({','.join(map(str, sv))})")
    return EXIT_OK


def cmd_charset(args) -> int:
    e = parse(_read_expression(args), args.n, args.nmax)
    print(json.dumps(charset(e, args.n, n_max=args.nmax).serialize()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inclexcl",
        description="Characteristic sets and inclusion-exclusion-like identities "
                    "for set-valued expressions.",
        epilog="All randomness comes from --seed; identical inputs give "
               "byte-identical output.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_n=True, expr=True):
        if expr:
            p.add_argument("expression", nargs="?",
                           help="expression text; omitted or '-' reads stdin")
        if needs_n:
            p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--nmax", type=int, default=DEFAULT_N_MAX,
                       help="largest admissible arity (default %(default)s)")

    def fmt(p):
        p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("analyze", help="decide and print the identity")
    common(p)
    fmt(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check the identity on random sequences")
    common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--universe", type=int, default=10,
                   help="elements drawn from 1..UNIVERSE (at most 16)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="closed-form generalized inclusion-exclusion")
    p.add_argument("kind", choices=("at-least", "even", "odd"))
    p.add_argument("--m", type=int, help="threshold for at-least")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cross-check", action="store_true",
                   help="compare with the general coefficient formula")
    p.add_argument("--nmax", type=int, default=DEFAULT_N_MAX)
    fmt(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("eval", help="evaluate on a sequence read from a JSON file")
    p.add_argument("expression")
    p.add_argument("sequence", help="JSON array of integer arrays; '-' reads stdin")
    p.add_argument("--n", type=int, help="optional; must match the sequence length")
    p.add_argument("--nmax", type=int, default=DEFAULT_N_MAX)
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("charset", help="print the serialized characteristic set")
    common(p)
    p.set_defaults(func=cmd_charset)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InclExclError, CliInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
