"""Quasihomogeneous Toeplitz operators as weighted shifts on monomials.

``T_{e^{ip theta} phi}`` sends ``z^k`` to ``w(k) z^(k+p)`` with
``w(k) = 2(k+p+1) Mellin(phi)(2k+p+2)``. An operator is therefore a degree
and a rational weight in ``k``; composition, powers and commutators reduce
to shifting and multiplying weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .exact import (
    Poly,
    RationalFunction,
    rf_affine,
    rf_eval,
    rf_poles,
    rf_shift,
)
from .mellin import RadialSymbol, mellin_symbol, root_mellin, symbol_from_mellin

ONE = RationalFunction.const(1)
ZERO = RationalFunction.const(0)


class InvalidWeight(ValueError):
    pass


class UnsupportedRoot(ValueError):
    pass


def _check_weight(w: RationalFunction) -> None:
    den = w.den
    if den.is_const() or w.is_zero():
        return
    ints = den.integer_primitive()
    # all-positive coefficients rule out nonnegative roots
    if all(c > 0 for c in ints):
        return
    bad = [x for x in rf_poles(w).locations() if x >= 0 and x.denominator == 1]
    if bad:
        raise InvalidWeight(f"weight {w} has a pole at k={bad[0]}")


@dataclass(frozen=True)
class QhOperator:
    """Weighted shift ``z^k -> weight(k) z^(k+degree)``."""

    degree: int
    weight: RationalFunction

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("quasihomogeneous degree must be nonnegative")
        _check_weight(self.weight)

    def __matmul__(self, other: QhOperator) -> QhOperator:
        return op_compose(self, other)

    def __pow__(self, n: int) -> QhOperator:
        return op_power(self, n)

    def scale(self, c) -> QhOperator:
        return QhOperator(self.degree, self.weight * c)

    def graded(self) -> GradedOperator:
        return GradedOperator.of({self.degree: self.weight})


IDENTITY = QhOperator(0, ONE)


def op_from_symbol(p: int, s: RadialSymbol) -> QhOperator:
    """Toeplitz operator with symbol ``e^{ip theta} s(r)``."""
    m = mellin_symbol(s).with_var("k")
    w = rf_affine(m, 2, p + 2) * RationalFunction.from_poly(Poly((2 * (p + 1), 2)))
    return QhOperator(p, w)


def op_apply(A: QhOperator, k: int) -> tuple[Fraction, int]:
    if k < 0:
        raise ValueError("basis index must be nonnegative")
    return rf_eval(A.weight, k), k + A.degree


def op_compose(A: QhOperator, B: QhOperator) -> QhOperator:
    """``A o B`` (``B`` applied first)."""
    return QhOperator(A.degree + B.degree, rf_shift(A.weight, B.degree) * B.weight)


@lru_cache(maxsize=4096)
def op_power(A: QhOperator, n: int) -> QhOperator:
    if n < 0:
        raise ValueError("power must be nonnegative")
    result, base = IDENTITY, A
    while n:
        if n & 1:
            result = op_compose(result, base)
        n >>= 1
        if n:
            base = op_compose(base, base)
    return result


def commutator_weight(A: QhOperator, B: QhOperator) -> RationalFunction:
    return rf_shift(A.weight, B.degree) * B.weight - rf_shift(B.weight, A.degree) * A.weight


def op_commutator(A: QhOperator, B: QhOperator) -> QhOperator:
    return QhOperator(A.degree + B.degree, commutator_weight(A, B))


@dataclass(frozen=True)
class RootResult:
    root: QhOperator
    symbol: RadialSymbol


@lru_cache(maxsize=256)
def op_root(p: int, M: int) -> RootResult:
    """Degree-1 root of ``T_{e^{ip theta} r^((2M+1)p)}`` and its radial symbol."""
    if p < 1 or M < 1:
        raise ValueError("p and M must be positive integers")
    rm = root_mellin(p, M)
    # M(root)(z) = M(r*root)(z-1), so the weight is 2(k+2) M(r*root)(2k+2)
    w = rf_affine(rm.with_var("k"), 2, 2) * RationalFunction.from_poly(Poly((4, 2)))
    symbol = symbol_from_mellin(rm).times_power(-1)
    if not symbol.is_polynomial():
        raise UnsupportedRoot(f"root symbol for p={p}, M={M} has non-integer exponents: {symbol}")
    return RootResult(QhOperator(1, w), symbol)


def root_of_symbol(p: int, s: RadialSymbol) -> RootResult:
    """Root of ``T_{e^{ip theta} s}`` when ``s = r^((2M+1)p)`` with integer ``M >= 1``."""
    if p < 1 or len(s.terms) != 1 or s.terms[0][0] != 1:
        raise UnsupportedRoot(f"no known root for degree {p} symbol {s}")
    a = s.terms[0][1]
    q, rem = divmod(a, p)
    if rem or q.denominator != 1 or q % 2 != 1 or q < 3:
        raise UnsupportedRoot(f"exponent {a} is not (2M+1)*{p} with M >= 1")
    return op_root(p, int(q - 1) // 2)


@dataclass(frozen=True)
class GradedOperator:
    """Finite sum of weighted shifts keyed by degree; zero weights are pruned."""

    components: tuple[tuple[int, RationalFunction], ...] = ()

    @classmethod
    def of(cls, comps: Mapping[int, RationalFunction] | Iterable[tuple[int, RationalFunction]]) -> GradedOperator:
        items = comps.items() if isinstance(comps, Mapping) else comps
        acc: dict[int, RationalFunction] = {}
        for d, w in items:
            acc[d] = acc[d] + w if d in acc else w
        for d, w in acc.items():
            QhOperator(d, w)  # validates degree and weight
        return cls(tuple((d, w) for d, w in sorted(acc.items()) if not w.is_zero()))

    @classmethod
    def sum(cls, ops: Iterable[QhOperator]) -> GradedOperator:
        return cls.of([(A.degree, A.weight) for A in ops])

    def as_dict(self) -> dict[int, RationalFunction]:
        return dict(self.components)

    def degrees(self) -> list[int]:
        return [d for d, _ in self.components]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def parts(self) -> list[QhOperator]:
        return [QhOperator(d, w) for d, w in self.components]

    def __add__(self, other: GradedOperator) -> GradedOperator:
        return GradedOperator.of(self.components + other.components)

    def scale(self, c) -> GradedOperator:
        return GradedOperator.of([(d, w * c) for d, w in self.components])


def _as_graded(X: GradedOperator | QhOperator) -> GradedOperator:
    return X.graded() if isinstance(X, QhOperator) else X


def graded_commutator(X: GradedOperator | QhOperator, Y: GradedOperator | QhOperator) -> GradedOperator:
    """``XY - YX`` collected by total degree."""
    X, Y = _as_graded(X), _as_graded(Y)
    out = []
    for A in X.parts():
        for B in Y.parts():
            out.append((A.degree + B.degree, commutator_weight(A, B)))
    return GradedOperator.of(out)


def graded_is_zero(X: GradedOperator) -> bool:
    return not X.components
