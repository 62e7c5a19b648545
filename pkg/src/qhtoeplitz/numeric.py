"""Floating-point oracle for the exact engine.

Adaptive Gauss-Legendre quadrature for Mellin integrals of arbitrary bounded
radial functions, and finite sections of weighted shifts as dense matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exact import rf_eval
from .mellin import RadialSymbol
from .shift import GradedOperator, QhOperator, graded_commutator

_ORDER = 15
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(_ORDER)
# geometric grading toward r = 0
_GRADING = 40


class NoConvergence(RuntimeError):
    def __init__(self, max_depth: int):
        super().__init__(f"quadrature did not converge within depth {max_depth}")
        self.max_depth = max_depth


@dataclass(frozen=True)
class NumericSymbol:
    """Bounded function on [0, 1]; ``evaluator`` must accept numpy arrays."""

    evaluator: Callable[[np.ndarray], np.ndarray]
    description: str = ""

    @classmethod
    def from_radial(cls, s: RadialSymbol) -> NumericSymbol:
        terms = [(float(c), float(a)) for c, a in s.terms]

        def ev(r):
            out = np.zeros_like(r, dtype=float)
            for c, a in terms:
                out += c * r**a
            return out

        return cls(ev, str(s))


def _gauss(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * _NODES
    return half * float(np.dot(_WEIGHTS, f(x)))


def quad_mellin(s: NumericSymbol, z: float, tol: float = 1e-12, max_depth: int = 60) -> float:
    """``int_0^1 s(r) r^(z-1) dr`` to absolute tolerance ``tol``."""
    if z <= 0:
        raise ValueError("Mellin abscissa must be positive")
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def f(r):
        return s.evaluator(r) * r ** (z - 1)

    edges = [0.0] + [2.0**-j for j in range(_GRADING, -1, -1)]
    panels = list(zip(edges[:-1], edges[1:]))
    local_tol = tol / len(panels)
    pieces: list[tuple[float, float]] = []
    stack = [(a, b, _gauss(f, a, b), local_tol, 0) for a, b in reversed(panels)]
    while stack:
        a, b, whole, eps, depth = stack.pop()
        mid = 0.5 * (a + b)
        left, right = _gauss(f, a, mid), _gauss(f, mid, b)
        # the chain touching r = 0 keeps half its budget at every depth and
        # hands its right siblings geometrically shrinking shares
        at_origin = a == 0.0
        accept = eps / 2 if at_origin else eps
        if abs(left + right - whole) <= accept:
            pieces.append((a, left + right))
            continue
        if depth >= max_depth:
            raise NoConvergence(max_depth)
        if at_origin:
            stack.append((mid, b, right, eps / 2 ** (depth + 2), depth + 1))
            stack.append((a, mid, left, eps, depth + 1))
        else:
            stack.append((mid, b, right, eps / 2, depth + 1))
            stack.append((a, mid, left, eps / 2, depth + 1))
    pieces.sort()
    return math.fsum(v for _, v in pieces)


@dataclass(frozen=True)
class TruncatedMatrix:
    """Top-left ``K x K`` section; ``entries[i, j]`` is the coefficient of ``z^i`` in ``T z^j``."""

    K: int
    entries: np.ndarray
    valid_columns: int


def _components(X: GradedOperator | QhOperator) -> list[tuple[int, object]]:
    if isinstance(X, QhOperator):
        return [(X.degree, X.weight)]
    return list(X.components)


def truncated_matrix(X: GradedOperator | QhOperator, K: int) -> TruncatedMatrix:
    if K < 1:
        raise ValueError("K must be positive")
    A = np.zeros((K, K))
    comps = _components(X)
    for d, w in comps:
        for k in range(K - d):
            A[k + d, k] = float(rf_eval(w, k))
    maxdeg = max((d for d, _ in comps), default=0)
    return TruncatedMatrix(K, A, max(K - maxdeg, 0))


@dataclass(frozen=True)
class CommutatorCheck:
    max_abs_deviation: float
    passed: bool
    columns: int


def numeric_commutator_check(
    X: GradedOperator | QhOperator, Y: GradedOperator | QhOperator, K: int, tol: float = 1e-8
) -> CommutatorCheck:
    """Compare the exact commutator section with ``M_X M_Y - M_Y M_X``.

    Only columns ``k < K - (deg X + deg Y)`` are compared; beyond them the
    finite-section product loses terms that leave the truncation.
    """
    dx = max((d for d, _ in _components(X)), default=0)
    dy = max((d for d, _ in _components(Y)), default=0)
    if K <= dx + dy:
        raise ValueError(f"K={K} must exceed the total degree {dx + dy}")
    mx, my = truncated_matrix(X, K).entries, truncated_matrix(Y, K).entries
    product = mx @ my - my @ mx
    exact = truncated_matrix(graded_commutator(X, Y), K).entries
    cols = K - (dx + dy)
    dev = float(np.max(np.abs(product[:, :cols] - exact[:, :cols])))
    return CommutatorCheck(dev, dev <= tol, cols)
