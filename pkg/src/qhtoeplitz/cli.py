"""Command-line front end.

Exit codes: 0 computation completed (and, for verify-theorem/sweep, every
tuple confirmed); 1 completed with a counterexample, failed precondition or
failed numeric check; 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterator

from .exact import Proportional, frac_str, rf_eval
from .grammar import SymbolSyntaxError, format_symbol, parse_symbol
from .mellin import mellin_symbol
from .numeric import numeric_commutator_check
from .shift import GradedOperator, graded_commutator, op_from_symbol, op_root
from .theorem import (
    CandidatePair,
    TheoremParams,
    VerificationReport,
    build_prod_sides,
    check_instance,
    pole_diff,
    pole_summary,
    verify_theorem1,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_float(x: float) -> str:
    return f"{x:.16e}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _parse_component(text: str) -> tuple[int, str]:
    deg, sep, expr = text.partition(":")
    if not sep or not deg.strip().isdigit():
        raise UsageError(f"operator component must look like DEGREE:SYMBOL, got {text!r}")
    return int(deg), expr


def _graded(specs: list[str]) -> GradedOperator:
    ops = []
    for spec in specs:
        d, expr = _parse_component(spec)
        ops.append(op_from_symbol(d, parse_symbol(expr)))
    return GradedOperator.sum(ops)


def _graded_json(X: GradedOperator) -> list[dict[str, Any]]:
    return [{"degree": d, "weight": str(w)} for d, w in X.components]


def _params(args) -> TheoremParams:
    return TheoremParams(args.p, args.s, args.M, args.N)


# --- sweep ---------------------------------------------------------------------


def _range(spec: Any, name: str) -> list[int]:
    if isinstance(spec, dict):
        values = list(range(int(spec["min"]), int(spec["max"]) + 1))
    elif isinstance(spec, list):
        values = [int(v) for v in spec]
    elif isinstance(spec, int):
        values = [spec]
    else:
        raise UsageError(f"bad range for {name!r}: {spec!r}")
    if not values:
        raise UsageError(f"empty range for {name!r}")
    return values


@dataclass
class SweepConfig:
    """Parameter grid for a sweep; ``p < s`` is enforced per tuple."""

    p: list[int]
    s: list[int]
    M: list[int]
    N: list[int]
    m_max: int = 20
    out: str | None = None

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> SweepConfig:
        try:
            ranges = {k: _range(d[k], k) for k in ("p", "s", "M", "N")}
        except KeyError as exc:
            raise UsageError(f"sweep config missing {exc.args[0]!r}") from exc
        m_max = int(d.get("m_max", 20))
        if m_max < 1:
            raise UsageError("m_max must be positive")
        return cls(**ranges, m_max=m_max, out=d.get("out"))

    def tuples(self) -> Iterator[TheoremParams]:
        for p in self.p:
            for s in self.s:
                if not 1 <= p < s:
                    continue
                for M in self.M:
                    for N in self.N:
                        if M >= 1 and N >= 1:
                            yield TheoremParams(p, s, M, N)


def _sweep_one(job: tuple[TheoremParams, int]) -> dict[str, Any]:
    params, m_max = job
    return verify_theorem1(params, max(m_max, params.p)).to_json()


def _done_params(path: Path) -> set[tuple[int, int, int, int]]:
    done = set()
    if not path.exists():
        return done
    for line in path.read_text().splitlines():
        if line.strip():
            p = json.loads(line)["params"]
            done.add((p["p"], p["s"], p["M"], p["N"]))
    return done


def cmd_sweep(args) -> int:
    try:
        raw = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read sweep config: {exc}") from exc
    cfg = SweepConfig.from_json(raw)
    tuples = list(cfg.tuples())
    if not tuples:
        raise UsageError("sweep config yields no tuple with p < s")
    out_path = args.out or cfg.out
    done: set = set()
    if out_path:
        done = _done_params(Path(out_path))
    todo = [t for t in tuples if (t.p, t.s, t.M, t.N) not in done]
    jobs = [(t, cfg.m_max) for t in todo]
    n_jobs = args.jobs or os.cpu_count() or 1

    sink = open(out_path, "a") if out_path else sys.stdout
    failures = 0
    try:
        if n_jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=n_jobs) as pool:
                results = pool.map(_sweep_one, jobs)
                for rep in results:
                    failures += rep["conclusion"]["status"] != "TheoremConfirmed"
                    sink.write(json.dumps(rep) + "\n")
                    sink.flush()
        else:
            for job in jobs:
                rep = _sweep_one(job)
                failures += rep["conclusion"]["status"] != "TheoremConfirmed"
                sink.write(json.dumps(rep) + "\n")
                sink.flush()
    finally:
        if out_path:
            sink.close()
    if out_path:
        # resumed tuples count against the exit code too
        for line in Path(out_path).read_text().splitlines():
            rep = json.loads(line)
            key = tuple(rep["params"][k] for k in ("p", "s", "M", "N"))
            if key in done and rep["conclusion"]["status"] != "TheoremConfirmed":
                failures += 1
        print(
            f"sweep: {len(tuples)} tuples, {len(todo)} computed, {len(tuples) - len(todo)} resumed, "
            f"{failures} not confirmed",
            file=sys.stderr,
        )
    return EXIT_OK if failures == 0 else EXIT_FAIL


# --- single computations -------------------------------------------------------


def cmd_mellin(args) -> dict[str, Any]:
    s = parse_symbol(args.symbol)
    f = mellin_symbol(s)
    out: dict[str, Any] = {"symbol": format_symbol(s), "mellin": str(f)}
    if args.z is not None:
        out["z"] = frac_str(args.z)
        out["value"] = frac_str(rf_eval(f, args.z))
    return out


def cmd_op(args) -> dict[str, Any]:
    s = parse_symbol(args.symbol)
    A = op_from_symbol(args.degree, s)
    out: dict[str, Any] = {"degree": A.degree, "symbol": format_symbol(s), "weight": str(A.weight)}
    if args.k is not None:
        out["k"] = args.k
        out["coefficient"] = frac_str(rf_eval(A.weight, args.k))
        out["index"] = args.k + A.degree
    return out


def cmd_root(args) -> dict[str, Any]:
    res = op_root(args.p, args.M)
    return {"p": args.p, "M": args.M, "degree": 1, "weight": str(res.root.weight), "symbol": format_symbol(res.symbol)}


def cmd_commutator(args) -> dict[str, Any]:
    C = graded_commutator(_graded(args.x), _graded(args.y))
    out: dict[str, Any] = {"components": _graded_json(C), "zero": not C.components}
    if args.k is not None:
        out["values"] = {str(d): frac_str(rf_eval(w, args.k)) for d, w in C.components}
    return out


def cmd_check(args) -> dict[str, Any]:
    params = _params(args)
    cand = CandidatePair(args.m, args.l if args.l is not None else args.m + args.s - args.p)
    cand.validate(params)
    lhs, rhs = build_prod_sides(params, cand)
    outcome = check_instance(params, cand)
    diff = pole_diff(lhs, rhs)
    out: dict[str, Any] = {
        "params": params.as_dict(),
        "m": cand.m,
        "l": cand.l,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "outcome": outcome.name,
        "poles_only_lhs": pole_summary(diff.only_lhs),
        "poles_only_rhs": pole_summary(diff.only_rhs),
    }
    if isinstance(outcome, Proportional):
        out["lambda"] = frac_str(outcome.lam)
    return out


def cmd_numeric_check(args) -> dict[str, Any]:
    X, Y = _graded(args.x), _graded(args.y)
    try:
        res = numeric_commutator_check(X, Y, args.K, args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {
        "K": args.K,
        "tol": _fmt_float(args.tol),
        "columns": res.columns,
        "max_abs_deviation": _fmt_float(res.max_abs_deviation),
        "pass": res.passed,
    }


def _text(payload: dict[str, Any]) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + ", ".join(f"{k}={v}" for k, v in item.items()) for item in value)
        elif isinstance(value, dict):
            lines.append(f"{key}: " + " ".join(f"{k}={v}" for k, v in value.items()))
        elif isinstance(value, list):
            lines.append(f"{key}: {' '.join(map(str, value)) if value else '-'}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _report_text(rep: VerificationReport) -> str:
    p = rep.params
    lines = [f"p={p.p} s={p.s} M={p.M} N={p.N}  precondition [T_phi, T_psi] != 0: {rep.precondition_ok}"]
    for row in rep.rows:
        lam = f" lambda={row.outcome.lam}" if isinstance(row.outcome, Proportional) else ""
        lines.append(f"  m={row.m:<3d} l={row.l:<3d} {row.outcome.name}{lam}")
    lines.append(f"conclusion: {rep.conclusion.name}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="qhtoeplitz", description=__doc__, allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, allow_abbrev=False)

    sp = add("mellin", "exact Mellin transform of a radial symbol")
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--z", type=_parse_rational)

    sp = add("op", "weighted-shift form of a quasihomogeneous Toeplitz operator")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--symbol", required=True)
    sp.add_argument("--k", type=int)

    sp = add("root", "degree-1 root of T with symbol r^((2M+1)p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--M", type=int, required=True)

    sp = add("commutator", "graded commutator of two operator sums")
    sp.add_argument("--x", action="append", required=True, metavar="DEG:SYMBOL")
    sp.add_argument("--y", action="append", required=True, metavar="DEG:SYMBOL")
    sp.add_argument("--k", type=int)

    for name, help_text in (("check", "decide one (m, l) candidate"), ("verify-theorem", "sweep m = 1..m_max")):
        sp = add(name, help_text)
        for flag in ("--p", "--s", "--M", "--N"):
            sp.add_argument(flag, type=int, required=True)
        if name == "check":
            sp.add_argument("--m", type=int, required=True)
            sp.add_argument("--l", type=int)
        else:
            sp.add_argument("--m-max", type=int, default=20)
            sp.add_argument("--jobs", type=int, default=1)

    sp = add("sweep", "verify a grid of parameter tuples, JSON lines output")
    sp.add_argument("--config", required=True)
    sp.add_argument("--jobs", type=int)

    sp = add("numeric-check", "floating-point finite-section commutator check")
    sp.add_argument("--x", action="append", required=True, metavar="DEG:SYMBOL")
    sp.add_argument("--y", action="append", required=True, metavar="DEG:SYMBOL")
    sp.add_argument("--K", type=int, default=64)
    sp.add_argument("--tol", type=float, default=1e-8)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "sweep":
            if args.jobs is not None and args.jobs < 1:
                raise UsageError("--jobs must be positive")
            return cmd_sweep(args)
        if args.command == "verify-theorem":
            params = _params(args)
            if args.m_max < params.p:
                raise UsageError(f"--m-max must be at least p={params.p}")
            if args.jobs > 1:
                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    rep = verify_theorem1(params, args.m_max, executor=pool)
            else:
                rep = verify_theorem1(params, args.m_max)
            text = rep.dumps(indent=2) if args.format == "json" else _report_text(rep)
            _emit(text, args.out)
            return EXIT_OK if rep.confirmed else EXIT_FAIL
        handler = {
            "mellin": cmd_mellin,
            "op": cmd_op,
            "root": cmd_root,
            "commutator": cmd_commutator,
            "check": cmd_check,
            "numeric-check": cmd_numeric_check,
        }[args.command]
        if args.command == "root" and (args.p < 1 or args.M < 1):
            raise UsageError("--p and --M must be positive")
        if args.command in ("op", "commutator") and getattr(args, "degree", 0) < 0:
            raise UsageError("--degree must be nonnegative")
        if args.command == "numeric-check" and (args.K < 1 or args.tol <= 0):
            raise UsageError("--K must be positive and --tol > 0")
        payload = handler(args)
    except (UsageError, SymbolSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        text = json.dumps(payload, indent=2)
    elif args.command == "mellin" and "value" not in payload:
        text = payload["mellin"]
    else:
        text = _text(payload)
    _emit(text, args.out)
    if args.command == "numeric-check" and not payload["pass"]:
        return EXIT_FAIL
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())
