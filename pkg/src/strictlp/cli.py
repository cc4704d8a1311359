"""Command-line interface.

Subcommands mirror the solve workflow end to end: ``solve`` for the optimal
value, ``interior`` for a relative-interior point of the equality system,
``scs`` for a strictly complementary solution by any of the three methods,
``partition`` for the optimal partition alone, and ``verify`` to audit a
solution file against a problem file.

Exit codes: 0 success, 1 infeasible/unbounded/no-optimal-pair (and failed
verification), 2 input error, 3 solver failure.  Errors go to stderr as one
machine-parsable line; reports go to stdout and are byte-deterministic for
identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .complementarity import (
    MaxMinReading,
    NoOptimalPair,
    ScsMethod,
    binding_constraints,
    optimal_partition,
    scs_maxmin,
    scs_single,
    scs_two_phase,
    solve_canonical,
)
from .errors import (
    DegenerateCertificateError,
    InfeasibleInputError,
    InvariantViolationError,
    IterationLimitError,
    NoOptimalFaceError,
    NumericalBreakdownError,
    ParseError,
    PartitionViolationError,
    SolverFailureError,
    ValidationError,
)
from .interior import relative_interior_point
from .io import (
    Report,
    format_real,
    parse_problem,
    parse_solution,
    partition_report,
)
from .model import EqualityPolyhedron, ScsResult, SolveStatus, SUPPORT_TOL
from .simplex import PivotRule, SimplexConfig
from .complementarity import verify_scs

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INPUT = 2
EXIT_SOLVER = 3

_INPUT_ERRORS = (ParseError, ValidationError, InfeasibleInputError, OSError)
_SOLVER_ERRORS = (SolverFailureError, IterationLimitError, NumericalBreakdownError,
                  InvariantViolationError, DegenerateCertificateError,
                  PartitionViolationError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strictlp",
        description="Relative-interior points and strictly complementary solutions of LPs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("problem", help="problem file (.lp.json or plain keyword format)")
        p.add_argument("--tol-feas", type=float, default=1e-9,
                       help="equation/bound feasibility tolerance (default 1e-9)")
        p.add_argument("--tol-supp", type=float, default=SUPPORT_TOL,
                       help="support classification tolerance (default 1e-6)")
        p.add_argument("--pivot", choices=["dantzig", "bland"], default="dantzig",
                       help="pivot rule (dantzig falls back to bland under degeneracy)")
        p.add_argument("--verbose", action="store_true",
                       help="append diagnostic lines to the report")

    p_solve = sub.add_parser("solve", help="optimal objective value of the canonical pair")
    add_common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_interior = sub.add_parser(
        "interior", help="relative-interior point of {x | Ax = b, x >= 0} (c is ignored)")
    add_common(p_interior)
    p_interior.set_defaults(func=cmd_interior)

    for name, runner in (("scs", cmd_scs), ("partition", cmd_partition)):
        p = sub.add_parser(name, help={
            "scs": "strictly complementary solution with optimal partition",
            "partition": "optimal partition only",
        }[name])
        add_common(p)
        p.add_argument("--method", choices=["two-phase", "single", "maxmin"],
                       default="single", help="solution method (default single)")
        p.add_argument("--zstar", type=float, default=None,
                       help="known optimal value; solved for when omitted")
        p.add_argument("--maxmin-reading", choices=["complement", "literal"],
                       default="complement",
                       help="index-set convention for the max-min method")
        p.set_defaults(func=runner)

    p_verify = sub.add_parser("verify", help="audit a solution file against a problem file")
    add_common(p_verify)
    p_verify.add_argument("solution", help="solution file with x, u, y, v arrays")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def _config(args) -> SimplexConfig:
    rule = PivotRule.BLAND if args.pivot == "bland" else PivotRule.DANTZIG_WITH_BLAND_FALLBACK
    return SimplexConfig(eps_feas=args.tol_feas, pivot_rule=rule)


def _read(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _emit(report: Report) -> None:
    sys.stdout.write(report.render())


def cmd_solve(args) -> int:
    lp = parse_problem(_read(args.problem)).to_canonical()
    outcome = solve_canonical(lp, _config(args))
    report = Report()
    report.add("status", outcome.status.value)
    if outcome.status is not SolveStatus.OPTIMAL:
        _emit(report)
        return EXIT_NO_SOLUTION
    report.add_real("z_star", outcome.objective_value)
    report.add_vector("x", outcome.x[:lp.n], display=True)
    report.add_vector("u", outcome.x[lp.n:])
    if args.verbose:
        report.add("iterations", str(outcome.iterations))
        report.add_real("residual", float(np.max(np.abs(lp.a @ outcome.x[:lp.n]
                                                        + outcome.x[lp.n:] - lp.b))))
    _emit(report)
    return EXIT_OK


def cmd_interior(args) -> int:
    pf = parse_problem(_read(args.problem))
    poly = EqualityPolyhedron(np.array(pf.a).reshape(pf.m, pf.n), np.array(pf.b))
    result = relative_interior_point(poly, _config(args), args.tol_supp)
    report = Report()
    report.add("empty", "true" if result.empty else "false")
    if result.empty:
        _emit(report)
        return EXIT_NO_SOLUTION
    report.add_indices("support", result.support)
    report.add_vector("x_bar", result.x_bar, display=True)
    report.add_real("w1_star", result.w1_star)
    report.add_real("w2_star", result.w2_star)
    if args.verbose:
        report.add_real("residual", float(np.max(np.abs(poly.a_eq @ result.x_bar - poly.b_eq))))
    _emit(report)
    return EXIT_OK


def _run_scs(args) -> ScsResult | None:
    """None means the failure report was already emitted (exit 1)."""
    pf = parse_problem(_read(args.problem))
    lp = pf.to_canonical()
    cfg = _config(args)
    reading = MaxMinReading(args.maxmin_reading)

    if ScsMethod(args.method) is ScsMethod.SINGLE_LP:
        result = scs_single(lp, cfg, args.tol_supp)
        if isinstance(result, NoOptimalPair):
            report = Report()
            report.add("status", "NO_OPTIMAL_PAIR")
            _emit(report)
            return None
        return result

    # Precedence for the known optimal value: flag, then file, then solve.
    z_star = args.zstar if args.zstar is not None else pf.z_star
    if z_star is None:
        outcome = solve_canonical(lp, cfg)
        if outcome.status is not SolveStatus.OPTIMAL:
            report = Report()
            report.add("status", outcome.status.value)
            _emit(report)
            return None
        z_star = float(outcome.objective_value)
    if ScsMethod(args.method) is ScsMethod.TWO_PHASE:
        return scs_two_phase(lp, z_star, cfg, args.tol_supp)
    return scs_maxmin(lp, z_star, cfg, args.tol_supp, reading)


def cmd_scs(args) -> int:
    result = _run_scs(args)
    if result is None:
        return EXIT_NO_SOLUTION
    lp = parse_problem(_read(args.problem)).to_canonical()
    report = Report()
    report.add("status", "OPTIMAL")
    report.add("method", ScsMethod(args.method).value)
    report.add_real("z_star", result.z_star)
    report.add_vector("x_bar", result.x_bar, display=True)
    report.add_vector("u_bar", result.u_bar, display=True)
    report.add_vector("y_bar", result.y_bar, display=True)
    report.add_vector("v_bar", result.v_bar, display=True)
    partition_report(report, result.partition)
    binding_primal, binding_dual = binding_constraints(result.partition, lp.m, lp.n)
    report.add_indices("binding_primal", binding_primal)
    report.add_indices("binding_dual", binding_dual)
    if args.verbose:
        report.add_real("residual_primal",
                        float(np.max(np.abs(lp.a @ result.x_bar + result.u_bar - lp.b))))
        report.add_real("residual_dual",
                        float(np.max(np.abs(lp.a.T @ result.y_bar - result.v_bar - lp.c))))
        report.add_real("duality_gap", float(lp.c @ result.x_bar - lp.b @ result.y_bar))
        report.add("tol_feas", format_real(args.tol_feas))
        report.add("tol_supp", format_real(args.tol_supp))
    _emit(report)
    return EXIT_OK


def cmd_partition(args) -> int:
    result = _run_scs(args)
    if result is None:
        return EXIT_NO_SOLUTION
    report = Report()
    partition_report(report, result.partition)
    _emit(report)
    return EXIT_OK


def cmd_verify(args) -> int:
    pf = parse_problem(_read(args.problem))
    lp = pf.to_canonical()
    sol = parse_solution(_read(args.solution), pf.m, pf.n)
    x, u = np.array(sol.x), np.array(sol.u)
    y, v = np.array(sol.y), np.array(sol.v)
    report = Report()
    try:
        partition = optimal_partition(x, u, y, v, args.tol_supp)
    except PartitionViolationError:
        report.add("verify", "FAIL")
        _emit(report)
        return EXIT_NO_SOLUTION
    candidate = ScsResult(x, u, y, v, partition, float(lp.c @ x))
    if verify_scs(lp, candidate, args.tol_supp):
        report.add("verify", "PASS")
        _emit(report)
        return EXIT_OK
    report.add("verify", "FAIL")
    _emit(report)
    return EXIT_NO_SOLUTION


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        _report_error(exc)
        return EXIT_INPUT
    except _SOLVER_ERRORS as exc:
        _report_error(exc)
        return EXIT_SOLVER
    except NoOptimalFaceError as exc:
        _report_error(exc)
        return EXIT_NO_SOLUTION


def _report_error(exc: Exception) -> None:
    kind = type(exc).__name__
    print(f"error kind={kind} detail={json.dumps(str(exc))}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
