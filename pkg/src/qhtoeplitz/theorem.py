"""Commutativity of sums of two quasihomogeneous Toeplitz operators.

Fix ``phi = r^((2M+1)p)`` and ``psi = r^((2N+1)s)`` with ``p < s``. If
``c1 (T_phi_root)^m + c2 (T_psi_root)^l`` commutes with ``T_phi + T_psi``
and ``l + p = m + s``, the mixed-degree part of the commutator gives

    c1 (R1 P1 - R2 P2) = c2 (R3 P3 - R4 P4)   for all k >= 0,

with ``R_i, P_i`` explicit products of linear ratios in ``k``. This module
builds both sides, decides whether nonzero ``c1, c2`` exist, and sweeps
``m`` to check that only ``m = p`` (with ``c1 = c2``) survives.
"""

from __future__ import annotations

import json
from concurrent.futures import Executor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import (
    BothZero,
    NotProportional,
    Outcome,
    PoleReport,
    Poly,
    Proportional,
    RationalFunction,
    frac_str,
    rf_normalize,
    rf_poles,
    rf_proportional,
)
from .mellin import RadialSymbol
from .shift import QhOperator, commutator_weight, op_from_symbol, op_power, op_root


@dataclass(frozen=True)
class TheoremParams:
    p: int
    s: int
    M: int
    N: int

    def __post_init__(self):
        if not (1 <= self.p < self.s):
            raise ValueError(f"need 1 <= p < s, got p={self.p}, s={self.s}")
        if self.M < 1 or self.N < 1:
            raise ValueError(f"need M, N >= 1, got M={self.M}, N={self.N}")

    def as_dict(self) -> dict[str, int]:
        return {"p": self.p, "s": self.s, "M": self.M, "N": self.N}


@dataclass(frozen=True)
class CandidatePair:
    m: int
    l: int

    @classmethod
    def for_m(cls, params: TheoremParams, m: int) -> CandidatePair:
        return cls(m, m + params.s - params.p)

    def validate(self, params: TheoremParams) -> None:
        if not (1 <= self.m < self.l):
            raise ValueError(f"need 1 <= m < l, got m={self.m}, l={self.l}")
        if self.l + params.p != self.m + params.s:
            raise ValueError(f"l + p != m + s for m={self.m}, l={self.l}")


def _ratio(a: int, b: int) -> RationalFunction:
    return RationalFunction.linear_ratio(a, b)


def _prod(pairs) -> RationalFunction:
    num, den = Poly.const(1), Poly.const(1)
    for a, b in pairs:
        num = num * Poly.linear(a)
        den = den * Poly.linear(b)
    return rf_normalize(num, den)


@dataclass(frozen=True)
class ProdFactors:
    R1: RationalFunction
    P1: RationalFunction
    R2: RationalFunction
    P2: RationalFunction
    R3: RationalFunction
    P3: RationalFunction
    R4: RationalFunction
    P4: RationalFunction


def prod_factors(params: TheoremParams, cand: CandidatePair) -> ProdFactors:
    p, s, M, N = params.p, params.s, params.M, params.N
    m, l = cand.m, cand.l
    return ProdFactors(
        R1=_ratio(s + 1, (N + 1) * s + 1),
        P1=_prod((s + j * p + 1, s + m + j * p + 1) for j in range(1, M + 1)),
        R2=_ratio(m + s + 1, m + (N + 1) * s + 1),
        P2=_prod((j * p + 1, m + j * p + 1) for j in range(1, M + 1)),
        R3=_ratio(l + p + 1, l + (M + 1) * p + 1),
        P3=_prod((j * s + 1, l + j * s + 1) for j in range(1, N + 1)),
        R4=_ratio(p + 1, (M + 1) * p + 1),
        P4=_prod((p + j * s + 1, l + p + j * s + 1) for j in range(1, N + 1)),
    )


def build_prod_sides(params: TheoremParams, cand: CandidatePair) -> tuple[RationalFunction, RationalFunction]:
    """``(R1 P1 - R2 P2, R3 P3 - R4 P4)`` as canonical functions of ``k``."""
    cand.validate(params)
    f = prod_factors(params, cand)
    return f.R1 * f.P1 - f.R2 * f.P2, f.R3 * f.P3 - f.R4 * f.P4


def phi_operator(params: TheoremParams) -> QhOperator:
    return op_from_symbol(params.p, RadialSymbol.monomial((2 * params.M + 1) * params.p))


def psi_operator(params: TheoremParams) -> QhOperator:
    return op_from_symbol(params.s, RadialSymbol.monomial((2 * params.N + 1) * params.s))


def operator_sides(params: TheoremParams, cand: CandidatePair) -> tuple[RationalFunction, RationalFunction]:
    """Same two sides, built as commutator weights in the shift algebra.

    ``[(T_phi_root)^m, T_psi]`` and ``[T_phi, (T_psi_root)^l]``.
    """
    f_op = op_power(op_root(params.p, params.M).root, cand.m)
    g_op = op_power(op_root(params.s, params.N).root, cand.l)
    return (
        commutator_weight(f_op, psi_operator(params)),
        commutator_weight(phi_operator(params), g_op),
    )


def check_instance(params: TheoremParams, cand: CandidatePair) -> Outcome:
    """Outcome with ``lam`` such that ``lhs = lam * rhs``."""
    lhs, rhs = build_prod_sides(params, cand)
    return rf_proportional(lhs, rhs)


def precondition_ok(params: TheoremParams) -> bool:
    """``[T_phi, T_psi] != 0``."""
    return not commutator_weight(phi_operator(params), psi_operator(params)).is_zero()


# --- pole diagnostics ----------------------------------------------------------


@dataclass(frozen=True)
class PoleDiff:
    only_lhs: PoleReport
    only_rhs: PoleReport
    shared: PoleReport

    def one_sided(self) -> bool:
        return bool(self.only_lhs) or bool(self.only_rhs)


def pole_diff(lhs: RationalFunction, rhs: RationalFunction) -> PoleDiff:
    """Multiset split of the poles of two reduced functions.

    Poles are counted after cancellation, not as written before reduction.
    """
    a, b = rf_poles(lhs).as_counter(), rf_poles(rhs).as_counter()
    return PoleDiff(
        only_lhs=PoleReport.from_counter(a - b),
        only_rhs=PoleReport.from_counter(b - a),
        shared=PoleReport.from_counter(a & b),
    )


# --- verification reports ------------------------------------------------------


@dataclass(frozen=True)
class Row:
    m: int
    l: int
    outcome: Outcome

    def to_json(self) -> dict[str, Any]:
        d: dict[str, Any] = {"m": self.m, "l": self.l, "outcome": self.outcome.name}
        if isinstance(self.outcome, Proportional):
            d["lambda"] = frac_str(self.outcome.lam)
        return d

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> Row:
        return cls(d["m"], d["l"], outcome_from_json(d["outcome"], d.get("lambda")))


def outcome_from_json(name: str, lam: str | None = None) -> Outcome:
    if name == "BothZero":
        return BothZero()
    if name == "NotProportional":
        return NotProportional()
    if name == "Proportional":
        return Proportional(Fraction(lam))
    raise ValueError(f"unknown outcome {name!r}")


@dataclass(frozen=True)
class TheoremConfirmed:
    name = "TheoremConfirmed"


@dataclass(frozen=True)
class CounterexampleFound:
    m: int
    l: int
    lam: Fraction | None = None
    name = "CounterexampleFound"


@dataclass(frozen=True)
class PreconditionFailed:
    name = "PreconditionFailed"


Conclusion = TheoremConfirmed | CounterexampleFound | PreconditionFailed


@dataclass(frozen=True)
class VerificationReport:
    params: TheoremParams
    precondition_ok: bool
    rows: tuple[Row, ...]
    conclusion: Conclusion = field(default_factory=TheoremConfirmed)

    @property
    def confirmed(self) -> bool:
        return isinstance(self.conclusion, TheoremConfirmed)

    def proportional_rows(self) -> list[Row]:
        return [r for r in self.rows if isinstance(r.outcome, Proportional)]

    def to_json(self) -> dict[str, Any]:
        c: dict[str, Any] = {"status": self.conclusion.name}
        if isinstance(self.conclusion, CounterexampleFound):
            c["m"], c["l"] = self.conclusion.m, self.conclusion.l
            if self.conclusion.lam is not None:
                c["lambda"] = frac_str(self.conclusion.lam)
        return {
            "params": self.params.as_dict(),
            "precondition_ok": self.precondition_ok,
            "rows": [r.to_json() for r in self.rows],
            "conclusion": c,
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> VerificationReport:
        c = d["conclusion"]
        status = c["status"]
        if status == "TheoremConfirmed":
            conclusion: Conclusion = TheoremConfirmed()
        elif status == "PreconditionFailed":
            conclusion = PreconditionFailed()
        elif status == "CounterexampleFound":
            lam = Fraction(c["lambda"]) if "lambda" in c else None
            conclusion = CounterexampleFound(c["m"], c["l"], lam)
        else:
            raise ValueError(f"unknown conclusion {status!r}")
        return cls(
            params=TheoremParams(**d["params"]),
            precondition_ok=bool(d["precondition_ok"]),
            rows=tuple(Row.from_json(r) for r in d["rows"]),
            conclusion=conclusion,
        )

    @classmethod
    def loads(cls, text: str) -> VerificationReport:
        return cls.from_json(json.loads(text))


def _row(params: TheoremParams, m: int) -> Row:
    cand = CandidatePair.for_m(params, m)
    return Row(m, cand.l, check_instance(params, cand))


def _conclude(params: TheoremParams, ok: bool, rows: list[Row]) -> Conclusion:
    if not ok:
        return PreconditionFailed()
    for r in rows:
        out = r.outcome
        if r.m == params.p:
            if out != Proportional(Fraction(1)):
                return CounterexampleFound(r.m, r.l, getattr(out, "lam", None))
        elif not isinstance(out, NotProportional):
            return CounterexampleFound(r.m, r.l, getattr(out, "lam", None))
    return TheoremConfirmed()


def verify_theorem1(params: TheoremParams, m_max: int = 20, executor: Executor | None = None) -> VerificationReport:
    """Check every ``m = 1..m_max`` (with ``l = m + s - p``) for proportionality."""
    if m_max < params.p:
        raise ValueError(f"m_max={m_max} must be at least p={params.p}")
    ms = range(1, m_max + 1)
    if executor is None:
        rows = [_row(params, m) for m in ms]
    else:
        rows = list(executor.map(_row, [params] * len(ms), ms))
    ok = precondition_ok(params)
    return VerificationReport(params, ok, tuple(rows), _conclude(params, ok, rows))


def pole_summary(report: PoleReport, var: str = "k") -> list[str]:
    out = []
    for x, n in report.poles:
        out.append(f"{var}={x}" + (f" (x{n})" if n > 1 else ""))
    return out

