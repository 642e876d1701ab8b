"""Command-line interface.

Exit codes: 0 normalized, 1 parse/usage error, 2 diverged, 3 not CPS,
4 strategies disagree (``check`` only).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from .bench import SUITES, run_bench
from .church import church_decode, NotNumeral
from .cps import cps
from .normalizers import NotCPS, Strategy, normalize
from .oracle import Budget, Normalized, oracle_normalize
from .syntax import USER_NAME_RE, ParseError, alpha_eq, inline_env, is_strict_cps, parse, parse_env, pretty

DEFAULT_FUEL = 100_000
DEFAULT_STRATEGY = "nbe"

EXIT_OK, EXIT_PARSE, EXIT_DIVERGED, EXIT_NOT_CPS, EXIT_DISAGREE = 0, 1, 2, 3, 4

_EXIT_BY_OUTCOME = {
    "normalized": EXIT_OK,
    "parse_error": EXIT_PARSE,
    "diverged": EXIT_DIVERGED,
    "not_cps": EXIT_NOT_CPS,
}

_GRAMMAR_HELP = r"""
syntax: \x. t  or  λx. t  for abstraction; juxtaposition for application
(left-associative, binds tighter than an abstraction body, which extends as
far right as possible); parentheses; '#' starts a line comment.

strategies: nbe (default) normalizes while interpreting and, like cbv, may
diverge on terms such as (\a.\b.a) (\z.z) Ω that cbn normalizes; cbn is
complete; cps accepts only terms of the shape  t ::= v | v v,  v ::= x | \x.t.
"""


@dataclass
class RunReport:
    input: str
    strategy: str
    fuel_limit: int
    steps_used: int
    outcome: str
    result: Optional[str] = None


def run(expr, strategy, fuel, env=(), ascii=True):
    """Parse, inline ``env`` and normalize; never raises on term errors."""
    strategy = Strategy.parse(strategy)
    report = RunReport(expr, strategy.value, fuel, 0, "parse_error")
    try:
        term = inline_env(parse(expr), list(env))
    except ParseError as exc:
        return report, str(exc)
    budget = Budget(fuel)
    try:
        outcome = normalize(term, strategy, budget)
    except NotCPS as exc:
        report.outcome = "not_cps"
        report.steps_used = budget.used
        return report, str(exc)
    report.steps_used = outcome.steps
    if isinstance(outcome, Normalized):
        report.outcome = "normalized"
        report.result = pretty(outcome.result, ascii=ascii)
        return report, None
    report.outcome = "diverged"
    return report, f"diverged: no normal form within {fuel} beta steps"


def _load_env(path, strict):
    if path is None:
        return []
    with open(path, encoding="utf-8") as fh:
        return parse_env(fh.read(), strict=strict)


def _read_expr(args, stdin):
    if args.stdin:
        return stdin.read()
    if args.expr is None:
        raise ParseError("no expression given (pass one or use --stdin)")
    return args.expr


def _emit(report, message, args, out, err):
    if args.json:
        print(json.dumps(asdict(report), ensure_ascii=False), file=out)
    elif report.outcome == "normalized":
        print(report.result, file=out)
    if message and not (args.json and report.outcome == "normalized"):
        print(message, file=err)
    return _EXIT_BY_OUTCOME[report.outcome]


def cmd_normalize(args, out, err, stdin):
    env = _load_env(args.env, args.strict_env)
    expr = _read_expr(args, stdin)
    report, message = run(expr, args.strategy, args.fuel, env, ascii=args.ascii)
    return _emit(report, message, args, out, err)


def cmd_whnf(args, out, err, stdin):
    args.strategy = Strategy.WHNF.value
    return cmd_normalize(args, out, err, stdin)


def cmd_cps(args, out, err, stdin):
    term = inline_env(parse(_read_expr(args, stdin)),
                      _load_env(args.env, args.strict_env))
    print(pretty(cps(term, args.variant), ascii=args.ascii), file=out)
    return EXIT_OK


def _check_inputs(source):
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        return [(line.split("#", 1)[0].strip(), i) for i, line in enumerate(lines, 1)
                if line.split("#", 1)[0].strip()]
    return [(source, 1)]


def check_term(term, fuel):
    """Run every applicable strategy; returns ``{name: outcome}`` and the agreement flag."""
    outcomes = {"oracle": oracle_normalize(term, fuel)}
    names = ["cbn", "cbv", "nbe"] + (["cps"] if is_strict_cps(term) else [])
    for name in names:
        outcomes[name] = normalize(term, name, Budget(fuel))
    normal = [o.result for o in outcomes.values() if isinstance(o, Normalized)]
    agree = all(alpha_eq(normal[0], other) for other in normal[1:])
    return outcomes, agree


def cmd_check(args, out, err, stdin):
    env = _load_env(args.env, args.strict_env)
    source = stdin.read() if args.stdin else args.source
    if source is None:
        raise ParseError("no expression or file given")
    inputs = _check_inputs(source) if not args.stdin else [(source, 1)]
    checked = disagreements = 0
    for text, line in inputs:
        term = inline_env(parse(text, line=line), env)
        outcomes, agree = check_term(term, args.fuel)
        checked += 1
        cells = []
        for name, outcome in outcomes.items():
            if isinstance(outcome, Normalized):
                cells.append(f"{name}={pretty(outcome.result, ascii=args.ascii)}")
            else:
                cells.append(f"{name}=diverged")
        status = "ok" if agree else "DISAGREE"
        if not agree:
            disagreements += 1
        if args.verbose or not agree or len(inputs) == 1:
            print(f"{status}  {text}\n    " + "\n    ".join(cells), file=out)
    print(f"{checked} checked, {disagreements} disagreements", file=out)
    return EXIT_DISAGREE if disagreements else EXIT_OK


def cmd_bench(args, out, err, stdin):
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; available: {', '.join(SUITES)}", file=err)
        return EXIT_PARSE
    if args.format not in ("text", "json"):
        print(f"unknown format {args.format!r}; use text or json", file=err)
        return EXIT_PARSE
    if args.format == "text":
        print(f"{'case':<14} {'strategy':<8} {'steps':>8} {'ms':>10} {'size':>7}  value",
              file=out)
    for record, outcome in run_bench(args.suite, args.max, args.fuel):
        if args.format == "json":
            print(json.dumps(record.to_json()), file=out)
            continue
        try:
            value = church_decode(outcome.result) if isinstance(outcome, Normalized) else "-"
        except NotNumeral:
            value = "?"
        print(f"{record.case:<14} {record.strategy:<8} {record.beta_steps:>8} "
              f"{record.wall_time:>10.3f} {record.result_size:>7}  {value}", file=out)
    return EXIT_OK


def repl(lines, out, strategy=DEFAULT_STRATEGY, fuel=DEFAULT_FUEL, env=(),
         ascii=True, prompt=""):
    """Interactive loop over ``lines``; errors are printed, never raised."""
    env = list(env)
    strategy = Strategy.parse(strategy).value

    def say(text):
        print(text, file=out)
        out.flush()

    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in (":quit", ":q"):
            break
        try:
            if line.startswith(":strategy"):
                strategy = Strategy.parse(line[len(":strategy"):].strip()).value
                say(f"strategy: {strategy}")
            elif line.startswith(":fuel"):
                fuel = int(line[len(":fuel"):].strip())
                if fuel < 0:
                    raise ValueError("fuel must be a natural number")
                say(f"fuel: {fuel}")
            elif line.startswith(":let"):
                name, sep, rhs = line[len(":let"):].partition("=")
                name = name.strip()
                if not sep or not USER_NAME_RE.match(name):
                    raise ParseError("expected ':let name = term'")
                defn = inline_env(parse(rhs), env)
                env = [(n, t) for n, t in env if n != name] + [(name, defn)]
                say(f"{name} defined")
            elif line.startswith(":"):
                say(f"unknown directive {line.split()[0]}")
            else:
                report, message = run(line, strategy, fuel, env, ascii=ascii)
                if report.outcome == "normalized":
                    say(report.result)
                elif report.outcome == "diverged":
                    say(message)
                else:
                    say(f"error: {message}")
        except (ParseError, ValueError) as exc:
            say(f"error: {exc}")
        if prompt:
            out.write(prompt)
            out.flush()


def cmd_repl(args, out, err, stdin):
    env = _load_env(args.env, args.strict_env)
    prompt = "λ> " if stdin.isatty() else ""
    if prompt:
        out.write(prompt)
        out.flush()
    repl(stdin, out, args.strategy, args.fuel, env, ascii=args.ascii, prompt=prompt)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=DEFAULT_FUEL,
                        help=f"beta-step budget (default {DEFAULT_FUEL})")
    common.add_argument("--env", metavar="FILE",
                        help="file of 'name = term' definitions inlined into the input")
    common.add_argument("--strict-env", action="store_true",
                        help="reject env definitions that mention undefined names")
    common.add_argument("--ascii", action=argparse.BooleanOptionalAction, default=True,
                        help="print abstractions with '\\' (default) or 'λ' (--no-ascii)")

    expr = argparse.ArgumentParser(add_help=False)
    expr.add_argument("expr", nargs="?", help="lambda term")
    expr.add_argument("--stdin", action="store_true", help="read the term from stdin")

    strategy = argparse.ArgumentParser(add_help=False)
    strategy.add_argument("--strategy", default=DEFAULT_STRATEGY,
                          choices=[s.value for s in Strategy],
                          help="normalization algorithm (default nbe)")

    parser = argparse.ArgumentParser(
        prog="lambdanbe", description="Normalize untyped lambda terms.",
        epilog=_GRAMMAR_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common, expr, strategy],
                       help="print the normal form", epilog=_GRAMMAR_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--json", action="store_true", help="print a JSON run report")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("whnf", parents=[common, expr],
                       help="evaluate to weak head normal form")
    p.add_argument("--json", action="store_true", help="print a JSON run report")
    p.set_defaults(func=cmd_whnf)

    p = sub.add_parser("cps", parents=[common, expr], help="print the CPS image")
    p.add_argument("--variant", default="cbn", choices=["cbn", "cbv"])
    p.set_defaults(func=cmd_cps)

    p = sub.add_parser("check", parents=[common],
                       help="cross-check all strategies against the oracle")
    p.add_argument("source", nargs="?", help="a term, or a file with one term per line")
    p.add_argument("--stdin", action="store_true", help="read one term from stdin")
    p.add_argument("-v", "--verbose", action="store_true",
                   help="print every term, not only disagreements")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", parents=[common], help="Church arithmetic benchmark")
    p.add_argument("--suite", default="church")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--format", default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("repl", parents=[common, strategy], help="interactive session")
    p.set_defaults(func=cmd_repl)
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out, err, stdin)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
