"""Command-line frontend.

Subcommands mirror the library surface one-to-one; every subcommand
supports --json, emitting a single document with schema field
"pellsu/1".  Exit codes: 0 = success / verdict Holds / empty findings;
1 = findings or a counterexample present; 2 = usage or computation
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cfrac, oracle, reduction, sunit, theorem1, theorem2
from .baker import MatveevInstance, matveev_lower_bound
from .numkernel import (
    DEFAULT_PREC_BITS,
    CertifiedReal,
    QuadraticSurd,
    certified_log,
    certified_to_json,
    sqrt_enclosure,
)
from .pell import fundamental_solution, x_iter

SCHEMA = "pellsu/1"

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_ERROR = 2


def _tau_source(spec: str) -> cfrac.Source:
    """Parse a refinable-constant spec: log2log3 | sqrt:D | pell-unit:X1."""
    if spec == "log2log3":
        return lambda b: certified_log(2, b) / certified_log(3, b)
    if spec.startswith("sqrt:"):
        d = int(spec.split(":", 1)[1])
        return lambda b: sqrt_enclosure(d, b)
    if spec.startswith("pell-unit:"):
        x1 = int(spec.split(":", 1)[1])
        if x1 < 2:
            raise ValueError("pell-unit X1 must be >= 2")
        gamma = QuadraticSurd(Fraction(x1), Fraction(1), x1 * x1 - 1)
        return lambda b: certified_log(gamma, b)
    raise ValueError(f"unknown tau spec {spec!r}; "
                     "use log2log3, sqrt:D or pell-unit:X1")


def _emit(args, payload: dict, text_lines: list) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_pell_fund(args) -> int:
    ctx = fundamental_solution(args.d)
    _emit(args, {"d": ctx.d, "X1": str(ctx.X1), "Y1": str(ctx.Y1)},
          [f"X1={ctx.X1} Y1={ctx.Y1}"])
    return EXIT_OK


def _cmd_pell_xseq(args) -> int:
    ctx = fundamental_solution(args.d)
    xs = []
    for l, x in zip(range(1, args.count + 1), x_iter(ctx)):
        xs.append(x)
    _emit(args, {"d": args.d, "X": [str(x) for x in xs]},
          [f"X_{l} = {x}" for l, x in enumerate(xs, 1)])
    return EXIT_OK


def _cmd_sunit_check(args) -> int:
    s = sunit.PrimeSet(tuple(args.primes))
    dec = sunit.decompose(args.value, s)
    if dec is None:
        _emit(args, {"value": str(args.value), "is_s_unit": False},
              [f"{args.value} is not an S-unit over {s.primes}"])
        return EXIT_FINDINGS
    _emit(args, {"value": str(args.value), "is_s_unit": True,
                 "sign": dec.sign, "exponents": list(dec.exponents)},
          [f"{args.value} = {'-' if dec.sign < 0 else ''}"
           + " * ".join(f"{p}^{e}" for p, e in zip(s.primes, dec.exponents))])
    return EXIT_OK


def _cmd_cf_expand(args) -> int:
    src = _tau_source(args.tau)
    exp = cfrac.expand(src, args.count, args.prec_bits)
    ok = exp.check_determinant()
    _emit(args, {"tau": args.tau, "quotients": exp.quotients,
                 "convergents": [[str(p), str(q)] for p, q in exp.convergents],
                 "truncated": exp.truncated, "determinant_ok": ok},
          [f"quotients: {exp.quotients}",
           f"truncated: {exp.truncated}  determinant_ok: {ok}"])
    return EXIT_OK if ok and not exp.truncated else EXIT_FINDINGS


def _cmd_cf_a_of_m(args) -> int:
    src = _tau_source(args.tau)
    n, q_n, a_max = cfrac.a_of_M(src, args.M, args.prec_bits)
    _emit(args, {"tau": args.tau, "M": str(args.M), "N": n,
                 "q_N": str(q_n), "a_of_M": a_max},
          [f"N={n} q_N={q_n} a(M)={a_max}"])
    return EXIT_OK


def _cmd_matveev(args) -> int:
    bits = args.prec_bits
    a_vals = [CertifiedReal.exact(Fraction(a), bits) for a in args.a]
    inst = MatveevInstance(t=args.t, dL=args.dl, A=a_vals,
                           B=CertifiedReal.exact(Fraction(args.b), bits))
    bound = matveev_lower_bound(inst, bits)
    _emit(args, {"t": args.t, "dL": args.dl, "bound": certified_to_json(bound)},
          [f"log|Lambda| > -L with L = {float(bound.midpoint):.6e}"])
    return EXIT_OK


def _cmd_reduce_dp(args) -> int:
    bits = args.prec_bits
    tau = _tau_source(args.tau)
    den = _tau_source(args.mu_den_log)

    def mu(b):
        return args.mu_num * certified_log(2, b) / den(b)

    a_val = CertifiedReal.exact(Fraction(args.A), bits)
    b_val = CertifiedReal.exact(Fraction(args.B), bits)
    out = reduction.dujella_petho(tau, mu, a_val, b_val, args.M, start_bits=bits)
    if out is None:
        _emit(args, {"reduced": False},
              ["no convergent certified epsilon1 > 0"])
        return EXIT_FINDINGS
    _emit(args, {"reduced": True, "q": str(out.q_used), "bound": out.bound,
                 "epsilon1": certified_to_json(out.epsilon1),
                 "convergent_index": out.convergent_index},
          [f"q={out.q_used} bound={out.bound} "
           f"eps1~{float(out.epsilon1.midpoint):.3e}"])
    return EXIT_OK


def _cmd_thm1_constants(args) -> int:
    params = theorem1.Theorem1Params(
        s=args.s, primes=sunit.PrimeSet(tuple(args.primes)), r=args.r,
        epsilon=Fraction(args.eps))
    ledger = theorem1.constants(params, args.prec_bits)
    names = ["c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"]
    payload = {n: certified_to_json(getattr(ledger, n)) for n in names}
    payload["log_d_threshold"] = certified_to_json(ledger.log_d_threshold)
    payload["Td_bound"] = str(ledger.Td_bound)
    _emit(args, payload,
          [f"{n} ~ {float(getattr(ledger, n).midpoint):.6e}" for n in names]
          + [f"log_d_threshold ~ {float(ledger.log_d_threshold.midpoint):.6e}",
             f"Td_bound = {ledger.Td_bound}"])
    return EXIT_OK


def _cmd_thm2_verify(args) -> int:
    stages = theorem2.ALL_STAGES if args.stage is None else (args.stage,)

    def progress(done, total):
        print(f"final scan: {done}/{total} candidates", file=sys.stderr)

    report = theorem2.verify(args.mode, args.prec_bits, stages,
                             checkpoint_path=args.checkpoint,
                             progress=progress if not args.quiet else None)
    doc = report.to_jsonable()
    if args.report:
        with open(args.report, "w") as f:
            json.dump(doc, f, indent=2)
    _emit(args, doc, [f"verdict: {report.verdict}"]
          + ([f"failed stage: {report.failed_stage}: {report.error}"]
             if report.failed_stage else []))
    if report.verdict == theorem2.VERDICT_HOLDS:
        return EXIT_OK
    if report.verdict == theorem2.VERDICT_COUNTEREXAMPLE:
        return EXIT_FINDINGS
    return EXIT_ERROR


def _cmd_oracle_scan(args) -> int:
    s = sunit.PrimeSet(tuple(args.primes))
    findings = oracle.scan(range(2, args.d_max + 1), args.l_max, s, args.r,
                           args.ordered23)
    payload = {"findings": [
        {"d": f.d, "l": f.l, "X": str(f.X),
         "witness": [{"sign": w.sign, "exponents": list(w.exponents)}
                     for w in f.decompositions]}
        for f in findings]}
    _emit(args, payload,
          [f"d={f.d} l={f.l} X={f.X}" for f in findings]
          or ["no findings"])
    return EXIT_FINDINGS if findings else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pellsu",
        description="Certified verification of Pell X-coordinates that are "
                    "2-3 smooth products")
    parser.add_argument("--json", action="store_true",
                        help="emit a single JSON document (schema pellsu/1)")
    parser.add_argument("--prec-bits", type=int, default=DEFAULT_PREC_BITS,
                        help="starting interval precision in bits (>= 64)")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for candidate sweeps")
    parser.add_argument("--no-timestamps", action="store_true",
                        help="omit timestamps for byte-identical reruns")
    sub = parser.add_subparsers(dest="command", required=True)

    p_pell = sub.add_parser("pell", help="Pell equation solvers").add_subparsers(
        dest="subcommand", required=True)
    p = p_pell.add_parser("fund", help="fundamental solution")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_pell_fund)
    p = p_pell.add_parser("xseq", help="X-coordinate sequence")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=_cmd_pell_xseq)

    p_sunit = sub.add_parser("sunit", help="S-unit decomposition").add_subparsers(
        dest="subcommand", required=True)
    p = p_sunit.add_parser("check", help="decompose a value over a prime set")
    p.add_argument("--primes", type=int, nargs="+", required=True)
    p.add_argument("--value", type=int, required=True)
    p.set_defaults(func=_cmd_sunit_check)

    p_cf = sub.add_parser("cf", help="certified continued fractions").add_subparsers(
        dest="subcommand", required=True)
    p = p_cf.add_parser("expand", help="partial quotients and convergents")
    p.add_argument("--tau", required=True,
                   help="log2log3 | sqrt:D | pell-unit:X1")
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(func=_cmd_cf_expand)
    p = p_cf.add_parser("a-of-m", help="largest partial quotient before q > M")
    p.add_argument("--tau", required=True)
    p.add_argument("--M", type=int, required=True)
    p.set_defaults(func=_cmd_cf_a_of_m)

    p = sub.add_parser("matveev", help="lower bound for linear forms in logs")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--dl", type=int, required=True)
    p.add_argument("--a", nargs="+", required=True,
                   help="certified A_j values (rationals)")
    p.add_argument("--b", required=True, help="coefficient bound B")
    p.set_defaults(func=_cmd_matveev)

    p_red = sub.add_parser("reduce", help="bound reduction").add_subparsers(
        dest="subcommand", required=True)
    p = p_red.add_parser("dp", help="Baker-Davenport style reduction")
    p.add_argument("--tau", required=True)
    p.add_argument("--mu-num", type=int, required=True,
                   help="mu = MU_NUM * log 2 / (denominator log)")
    p.add_argument("--mu-den-log", required=True,
                   help="denominator constant, same syntax as --tau")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--M", type=int, required=True)
    p.set_defaults(func=_cmd_reduce_dp)

    p_t1 = sub.add_parser("thm1", help="effective constants").add_subparsers(
        dest="subcommand", required=True)
    p = p_t1.add_parser("constants", help="the c1..c9 ledger")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--primes", type=int, nargs="+", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--eps", required=True, help="epsilon in (0,1), a rational")
    p.set_defaults(func=_cmd_thm1_constants)

    p_t2 = sub.add_parser("thm2", help="full verification").add_subparsers(
        dest="subcommand", required=True)
    p = p_t2.add_parser("verify", help="run the verification pipeline")
    p.add_argument("--mode", choices=[theorem2.MODE_REPRODUCTION,
                                      theorem2.MODE_SHARP],
                   default=theorem2.MODE_REPRODUCTION)
    p.add_argument("--stage", choices=list(theorem2.ALL_STAGES), default=None)
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.add_argument("--checkpoint", default=None,
                   help="resumable progress file for the final scan")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=_cmd_thm2_verify)

    p_or = sub.add_parser("oracle", help="brute-force ground truth").add_subparsers(
        dest="subcommand", required=True)
    p = p_or.add_parser("scan", help="exhaustive small-window scan")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--primes", type=int, nargs="+", required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--ordered23", action="store_true")
    p.set_defaults(func=_cmd_oracle_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.prec_bits < 64:
        parser.error("--prec-bits must be >= 64")
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
