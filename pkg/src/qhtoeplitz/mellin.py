"""Radial symbols on [0, 1] and their exact Mellin transforms.

The Mellin transform of ``phi`` is ``int_0^1 phi(r) r^(z-1) dr``; on a
monomial ``r^a`` it is ``1/(z+a)``. Transforms are returned as canonical
rational functions in the variable ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import (
    ONE_POLY,
    Poly,
    RationalFunction,
    Scalar,
    poly_gcd,
    rational_roots,
    rf_normalize,
)

MellinFn = RationalFunction


class UnsupportedMellin(ValueError):
    """The rational function is not the transform of a finite sum of monomials."""


@dataclass(frozen=True)
class RadialSymbol:
    """Finite sum ``sum c_i r^(a_i)`` with distinct nonnegative exponents.

    ``terms`` holds ``(coefficient, exponent)`` pairs sorted by exponent with
    no zero coefficients; use :meth:`of` to build from arbitrary input.
    """

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    @classmethod
    def of(cls, terms: Iterable[tuple[Scalar, Scalar]]) -> RadialSymbol:
        acc: dict[Fraction, Fraction] = {}
        for c, a in terms:
            a = Fraction(a)
            if a < 0:
                raise ValueError(f"negative exponent {a} is not bounded on [0, 1]")
            acc[a] = acc.get(a, Fraction(0)) + Fraction(c)
        return cls(tuple((c, a) for a, c in sorted(acc.items()) if c != 0))

    @classmethod
    def monomial(cls, a: Scalar, c: Scalar = 1) -> RadialSymbol:
        return cls.of([(c, a)])

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(a.denominator == 1 for _, a in self.terms)

    def __add__(self, other: RadialSymbol) -> RadialSymbol:
        return RadialSymbol.of(self.terms + other.terms)

    def __sub__(self, other: RadialSymbol) -> RadialSymbol:
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> RadialSymbol:
        return RadialSymbol.of((c * x, a) for x, a in self.terms)

    def times_power(self, b: Scalar) -> RadialSymbol:
        """Multiply by ``r^b``."""
        return RadialSymbol.of((c, a + b) for c, a in self.terms)

    def __call__(self, r: float) -> float:
        return sum(float(c) * r ** float(a) for c, a in self.terms)

    def __str__(self) -> str:
        from .grammar import format_symbol

        return format_symbol(self)


def mellin_symbol(s: RadialSymbol) -> MellinFn:
    """Exact transform ``sum c_i / (z + a_i)``."""
    num = Poly(())
    den = ONE_POLY
    for c, a in s.terms:
        lin = Poly.linear(a)
        num = num * lin + den.scale(c)
        den = den * lin
    return rf_normalize(num, den, "z")


def root_mellin(p: int, M: int) -> MellinFn:
    """Mellin transform of ``r * root_symbol`` for ``phi = r^((2M+1)p)``.

    Equal to ``prod_{j<M} (z+2jp+2p) / prod_{j<=M} (z+2jp+2)``.
    """
    if p < 1 or M < 1:
        raise ValueError("p and M must be positive integers")
    num = Poly.from_roots(-(2 * j * p + 2 * p) for j in range(M))
    den = Poly.from_roots(-(2 * j * p + 2) for j in range(M + 1))
    return rf_normalize(num, den, "z")


def symbol_from_mellin(f: MellinFn) -> RadialSymbol:
    """Invert :func:`mellin_symbol` by partial fractions over simple poles."""
    if f.is_zero():
        return RadialSymbol()
    if f.num.degree >= f.den.degree:
        raise UnsupportedMellin(f"improper transform {f}")
    den = f.den
    if poly_gcd(den, den.derivative()).degree > 0:
        raise UnsupportedMellin(f"multiple pole in {f}")
    roots = rational_roots(den)
    if len(roots) != den.degree:
        raise UnsupportedMellin(f"denominator of {f} does not split over the rationals")
    dprime = den.derivative()
    terms = []
    for z0 in roots:
        if z0 > 0:
            raise UnsupportedMellin(f"pole at z={z0} gives a negative exponent")
        terms.append((f.num(z0) / dprime(z0), -z0))
    return RadialSymbol.of(terms)
