"""Command-line front end: ``python3 -m qpodles <subcommand> ...``.

Every subcommand produces a report ``{command, config, results, checks}``
rendered as JSON, CSV or plain text.  Exit status: 0 when all checks pass,
1 when a check fails, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import checks, cyclic, spectral
from .checks import Check, equal_check
from .expr import ParseError, parse
from .podles import PodlesElement, embed, ptheta
from .scalar import Scalar, eval_numeric, qint
from .suq2 import AlgebraElement, counit, haar, theta


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    q0: Fraction = Fraction(1, 2)
    L: Fraction = Fraction(11, 2)
    tol: float = 1e-8
    format: str = "json"
    precision: int = 64

    def __post_init__(self):
        if self.q0 <= 0 or self.q0 == 1:
            raise UsageError("--q must be positive and different from 1")
        if self.tol <= 0:
            raise UsageError("--tol must be positive")
        if (2 * self.L).denominator != 1:
            raise UsageError("--L must be a half-integer")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")

    @property
    def dps(self) -> int:
        return max(15, int(self.precision * 0.30103) + 1)

    def to_json(self) -> dict:
        d = asdict(self)
        d["q0"], d["L"] = str(self.q0), str(self.L)
        return d


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", dest="q0", type=_fraction, default=None,
                        help="value of q for numeric output, as p/r")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--precision", type=int, default=64, help="working precision in bits")

    parser = _Parser(prog="qpodles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("pair", parents=[common], help="Chern-Connes pairing with P_N")
    p.add_argument("--cocycle", choices=("epsilon", "haar", "tau", "phi"), required=True)
    p.add_argument("--N", type=int, required=True)

    p = sub.add_parser("chern", parents=[common], help="twisted Chern character of P_N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--degree", type=int, choices=(0, 2), default=0)
    p.add_argument("--twist", choices=("theta", "theta-inv"), default="theta")
    p.add_argument("--reduced", action="store_true",
                   help="reduced degree-2 cycle (twist theta-inv)")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=tuple(checks.SUITES) + ("all",), default="all")

    p = sub.add_parser("spectrum", parents=[common], help="Dirac eigenvalues up to spin L")
    p.add_argument("--L", type=_fraction, default=Fraction(11, 2))

    p = sub.add_parser("index", parents=[common], help="index and q-index of P_N dF P_N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--L", type=_fraction, default=None)
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("eval", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--counit", action="store_true")
    p.add_argument("--haar", action="store_true")
    p.add_argument("--theta", action="store_true")
    return parser


def _numeric(x: Scalar, config: RunConfig, explicit: bool) -> Optional[float]:
    return eval_numeric(x, config.q0, config.dps) if explicit else None


def cmd_pair(args, config: RunConfig, explicit_q: bool):
    value = cyclic.pairing(args.cocycle, args.N)
    results = {"cocycle": args.cocycle, "N": args.N, "value": str(value)}
    if explicit_q:
        results["numeric"] = _numeric(value, config, True)
    return results, [equal_check("closed form", value, checks.expected_pairing(args.cocycle, args.N))]


def cmd_chern(args, config: RunConfig, explicit_q: bool):
    twist = args.twist.replace("-", "_")
    if args.reduced:
        if args.degree != 2 or twist != "theta_inv":
            raise UsageError("--reduced needs --degree 2 --twist theta-inv")
        chain = cyclic.reduced_chern2(args.N)
        closed = cyclic.boundary_b("theta_inv", chain)
        found = [equal_check("b(chain) = 0", closed, 0)]
    else:
        chain = cyclic.chern(twist, args.N, args.degree // 2)
        found = []
    return {"N": args.N, "degree": args.degree, "twist": args.twist,
            "reduced": args.reduced, "chain": chain.to_json()}, found


def cmd_verify(args, config: RunConfig, explicit_q: bool):
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    found: List[Check] = []
    for name in names:
        if name == "real-structure":
            found += checks.real_structure_suite("7/2", config.q0)
        else:
            found += checks.SUITES[name]()
    return {"suites": names}, found


def cmd_spectrum(args, config: RunConfig, explicit_q: bool):
    rows = []
    for value, mult in spectral.dirac_spectrum(args.L):
        rows.append({"l": str(Fraction(mult - 1, 2)), "eigenvalue": str(value),
                     "numeric": eval_numeric(value, config.q0, config.dps),
                     "multiplicity": mult})
    return {"L": str(args.L), "q0": str(config.q0), "spectrum": rows}, []


def cmd_index(args, config: RunConfig, explicit_q: bool):
    L = args.L if args.L is not None else Fraction(abs(args.N), 2) + 5
    report = spectral.index_report(args.N, L, config.q0, args.tol, dps=config.dps)
    expected = eval_numeric(qint(args.N), config.q0)
    results = {"N": args.N, "L": str(L), "q0": str(config.q0), "ind": report.ind,
               "qind": report.qind,
               "kernel": {str(t): n for t, n in sorted(report.kernel.items())},
               "cokernel": {str(t): n for t, n in sorted(report.cokernel.items())},
               "smallest_nonzero_singular_value": report.margin}
    found = [Check("ind = N", report.ind == args.N, str(report.ind), str(args.N)),
             Check("qind = [N]_q", abs(report.qind - expected) <= 1e-6,
                   repr(report.qind), repr(expected))]
    return results, found


def cmd_eval(args, config: RunConfig, explicit_q: bool):
    try:
        x = parse(args.expr)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    results = {"input": args.expr, "normal_form": str(x),
               "kind": {Scalar: "scalar", PodlesElement: "podles",
                        AlgebraElement: "suq2"}[type(x)]}
    if isinstance(x, Scalar):
        if explicit_q:
            results["numeric"] = _numeric(x, config, True)
        return results, []
    elem = embed(x) if isinstance(x, PodlesElement) else x
    extras = {}
    if args.counit:
        extras["counit"] = counit(elem)
    if args.haar:
        extras["haar"] = haar(elem)
    for key, value in extras.items():
        results[key] = str(value)
        if explicit_q:
            results[f"{key}_numeric"] = _numeric(value, config, True)
    if args.theta:
        results["theta"] = str(ptheta(x) if isinstance(x, PodlesElement) else theta(x))
    return results, []


COMMANDS = {"pair": cmd_pair, "chern": cmd_chern, "verify": cmd_verify,
            "spectrum": cmd_spectrum, "index": cmd_index, "eval": cmd_eval}


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        spectrum = report["results"].get("spectrum")
        if spectrum is not None:
            writer.writerow(["l", "eigenvalue", "numeric", "multiplicity"])
            for row in spectrum:
                writer.writerow([row["l"], row["eigenvalue"], repr(row["numeric"]),
                                 row["multiplicity"]])
        else:
            writer.writerow(["key", "value"])
            for key, value in report["results"].items():
                writer.writerow([key, value if isinstance(value, str) else json.dumps(value)])
        if report["checks"]:
            writer.writerow(["check", "status", "lhs", "rhs"])
            for c in report["checks"]:
                writer.writerow([c["name"], c["status"], c["lhs"], c["rhs"]])
        return buf.getvalue().rstrip("\n")
    lines = [f"{report['command']}"]
    for key, value in report["results"].items():
        if key == "spectrum":
            for row in value:
                lines.append(f"  l={row['l']:>5}  {row['eigenvalue']:<40} "
                             f"{row['numeric']:>14.8g}  x{row['multiplicity']}")
        elif key == "chain":
            for term in value:
                lines.append(f"  ({term['coefficient']}) " + " (x) ".join(term["tensor"]))
        else:
            lines.append(f"  {key}: {value}")
    for c in report["checks"]:
        lines.append(f"  [{c['status'].upper()}] {c['name']}: {c['lhs']}  vs  {c['rhs']}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        explicit_q = args.q0 is not None
        config = RunConfig(q0=args.q0 if explicit_q else Fraction(1, 2),
                           L=getattr(args, "L", None) or RunConfig.L,
                           tol=getattr(args, "tol", RunConfig.tol),
                           format=args.format, precision=args.precision)
        results, found = COMMANDS[args.command](args, config, explicit_q)
    except UsageError as exc:
        print(f"qpodles: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"qpodles: {args.command}: {exc}", file=sys.stderr)
        return 1
    report = {"command": args.command, "config": config.to_json(), "results": results,
              "checks": [c.to_json() for c in found]}
    print(render(report, config.format), file=out)
    return 0 if all(c.passed for c in found) else 1


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())
