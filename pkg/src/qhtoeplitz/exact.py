"""Exact univariate algebra over the rationals.

Scalars are :class:`fractions.Fraction`. Polynomials are dense, lowest
degree first, and rational functions are kept in a canonical reduced form
(coprime numerator and denominator, monic denominator, zero as ``0/1``), so
structural equality is mathematical equality.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class ZeroDenominator(ZeroDivisionError):
    pass


class DivisionByZeroFunction(ZeroDivisionError):
    pass


class EvalAtPole(ValueError):
    def __init__(self, x: Fraction):
        super().__init__(f"evaluation at pole {x}")
        self.x = x


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial with rational coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def linear(cls, a: Scalar, b: Scalar = 1) -> Poly:
        """``b*x + a``."""
        return cls((a, b))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Poly:
        p = ONE_POLY
        for r in roots:
            p = p * cls.linear(-Fraction(r))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    def scale(self, c: Scalar) -> Poly:
        c = Fraction(c)
        return Poly(tuple(x * c for x in self.coeffs)) if c else ZERO_POLY

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return ZERO_POLY, self
        quo = [Fraction(0)] * (dq + 1)
        d = other.coeffs
        inv = 1 / d[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(d) - 1] * inv
            quo[i] = c
            if c:
                for j, y in enumerate(d):
                    rem[i + j] -= c * y
        return Poly(quo), Poly(rem[: len(d) - 1])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def compose_affine(self, a: Scalar, b: Scalar) -> Poly:
        """Return ``x -> self(a*x + b)``."""
        lin = Poly((b, a))
        acc = ZERO_POLY
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly.const(c)
        return acc

    def integer_primitive(self) -> tuple[int, ...]:
        """Integer coefficients of a positive multiple of ``self`` with content 1."""
        if self.is_zero():
            return ()
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        return tuple(c // g for c in ints)

    def to_str(self, var: str = "k") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f"{sign}{body}"
        return out

    def __str__(self) -> str:
        return self.to_str()


ZERO_POLY = Poly(())
ONE_POLY = Poly((1,))
X = Poly((0, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals. ``poly_gcd(0, 0)`` raises ValueError."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


@dataclass(frozen=True)
class RationalFunction:
    """Canonical quotient ``num/den`` in one variable.

    ``var`` only affects printing and is ignored by equality and hashing.
    Build through :func:`rf_normalize` or the constructors below; the raw
    constructor trusts its input to already be canonical.
    """

    num: Poly
    den: Poly = ONE_POLY
    var: str = field(default="k", compare=False)

    @classmethod
    def const(cls, c: Scalar, var: str = "k") -> RationalFunction:
        return cls(Poly.const(c), ONE_POLY, var)

    @classmethod
    def from_poly(cls, p: Poly, var: str = "k") -> RationalFunction:
        return cls(p, ONE_POLY, var)

    @classmethod
    def linear_ratio(cls, a: Scalar, b: Scalar, var: str = "k") -> RationalFunction:
        """``(x + a) / (x + b)``."""
        return rf_normalize(Poly.linear(a), Poly.linear(b), var)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return self.num(0)

    def with_var(self, var: str) -> RationalFunction:
        return RationalFunction(self.num, self.den, var)

    def __add__(self, other):
        return rf_arith("add", self, _lift(other, self.var))

    __radd__ = __add__

    def __sub__(self, other):
        return rf_arith("sub", self, _lift(other, self.var))

    def __rsub__(self, other):
        return rf_arith("sub", _lift(other, self.var), self)

    def __mul__(self, other):
        return rf_arith("mul", self, _lift(other, self.var))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return rf_arith("div", self, _lift(other, self.var))

    def __rtruediv__(self, other):
        return rf_arith("div", _lift(other, self.var), self)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.var)

    def __pow__(self, n: int):
        if n < 0:
            return (RationalFunction.const(1, self.var) / self) ** (-n)
        out = RationalFunction.const(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x: Scalar) -> Fraction:
        return rf_eval(self, x)

    def __str__(self) -> str:
        return format_factored(self)


def _lift(x, var: str) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.const(x, var)
    return NotImplemented


def rf_normalize(num: Poly, den: Poly, var: str = "k") -> RationalFunction:
    """Reduce ``num/den`` to canonical form."""
    if den.is_zero():
        raise ZeroDenominator("rational function with zero denominator")
    if num.is_zero():
        return RationalFunction(ZERO_POLY, ONE_POLY, var)
    g = poly_gcd(num, den)
    if not g.is_const():
        num, den = num // g, den // g
    lead = den.lead
    return RationalFunction(num.scale(1 / lead), den.scale(1 / lead), var)


def rf_arith(op: str, a: RationalFunction, b: RationalFunction) -> RationalFunction:
    """Field arithmetic ``a op b`` for op in add/sub/mul/div."""
    var = a.var
    if op == "add" or op == "sub":
        bn = b.num if op == "add" else -b.num
        if a.den == b.den:
            return rf_normalize(a.num + bn, a.den, var)
        g = poly_gcd(a.den, b.den)
        ad, bd = a.den // g, b.den // g
        return rf_normalize(a.num * bd + bn * ad, a.den * bd, var)
    if op == "div":
        if b.is_zero():
            raise DivisionByZeroFunction("division by the zero rational function")
        b = RationalFunction(b.den, b.num, var)
    elif op != "mul":
        raise ValueError(f"unknown operation {op!r}")
    if a.is_zero() or b.is_zero():
        return RationalFunction(ZERO_POLY, ONE_POLY, var)
    # cross-cancel first so the final gcd works on small inputs
    g1 = poly_gcd(a.num, b.den)
    g2 = poly_gcd(b.num, a.den)
    num = (a.num // g1) * (b.num // g2)
    den = (a.den // g2) * (b.den // g1)
    lead = den.lead
    return RationalFunction(num.scale(1 / lead), den.scale(1 / lead), var)


def rf_affine(a: RationalFunction, scale: Scalar, shift: Scalar) -> RationalFunction:
    """``x -> a(scale*x + shift)``."""
    scale, shift = Fraction(scale), Fraction(shift)
    if scale == 0:
        return RationalFunction.const(rf_eval(a, shift), a.var)
    if scale == 1 and shift == 0:
        return a
    num = a.num.compose_affine(scale, shift)
    den = a.den.compose_affine(scale, shift)
    # substitution of an invertible affine map preserves coprimality
    lead = den.lead
    return RationalFunction(num.scale(1 / lead), den.scale(1 / lead), a.var)


def rf_shift(a: RationalFunction, t: Scalar) -> RationalFunction:
    """``x -> a(x + t)``."""
    return rf_affine(a, 1, t)


def rf_eval(a: RationalFunction, x: Scalar) -> Fraction:
    d = a.den(x)
    if d == 0:
        raise EvalAtPole(Fraction(x))
    return a.num(x) / d


@dataclass(frozen=True)
class BothZero:
    name = "BothZero"


@dataclass(frozen=True)
class Proportional:
    lam: Fraction
    name = "Proportional"


@dataclass(frozen=True)
class NotProportional:
    name = "NotProportional"


Outcome = Union[BothZero, Proportional, NotProportional]


def rf_proportional(a: RationalFunction, b: RationalFunction) -> Outcome:
    """Decide whether ``a = lam * b`` for a nonzero constant ``lam``."""
    if a.is_zero() and b.is_zero():
        return BothZero()
    if a.is_zero() or b.is_zero():
        return NotProportional()
    # canonical forms share the monic denominator iff proportional
    if a.den != b.den or a.num.degree != b.num.degree:
        return NotProportional()
    lam = a.num.lead / b.num.lead
    if a.num != b.num.scale(lam):
        return NotProportional()
    return Proportional(lam)


# --- poles -----------------------------------------------------------------

# Above this root bound the integer-candidate scan is abandoned for divisor search.
_SCAN_LIMIT = 200_000


@dataclass(frozen=True)
class PoleReport:
    """Rational poles with multiplicity, plus any leftover nonlinear factor."""

    poles: tuple[tuple[Fraction, int], ...] = ()
    residual: Poly | None = None

    def as_counter(self) -> Counter:
        return Counter(dict(self.poles))

    @classmethod
    def from_counter(cls, c: Counter, residual: Poly | None = None) -> PoleReport:
        return cls(tuple(sorted((x, n) for x, n in c.items() if n > 0)), residual)

    def locations(self) -> list[Fraction]:
        return [x for x, _ in self.poles]

    def total(self) -> int:
        return sum(n for _, n in self.poles)

    def __bool__(self) -> bool:
        return bool(self.poles)


def _fujiwara_bound(monic_int: tuple[int, ...]) -> int:
    n = len(monic_int) - 1
    best = 0.0
    for i in range(1, n + 1):
        c = abs(monic_int[n - i])
        if c == 0:
            continue
        if i == n:
            c = c / 2
        best = max(best, math.exp(math.log(c) / i))
    return int(2 * best) + 2


def _divisors(n: int) -> list[int]:
    from sympy import divisors

    return divisors(n)


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of ``p`` (no multiplicities), ascending."""
    if p.degree < 1:
        return []
    roots: list[Fraction] = []
    coeffs = list(p.integer_primitive())
    while coeffs[0] == 0:
        coeffs.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    n = len(coeffs) - 1
    if n < 1:
        return sorted(roots)
    # y = lead*x turns a rational root into an integer root of a monic poly
    lead = coeffs[-1]
    monic = [c * lead ** (n - 1 - i) for i, c in enumerate(coeffs[:-1])] + [1]
    c0 = monic[0]

    def is_root(y: int) -> bool:
        acc = 0
        for c in reversed(monic):
            acc = acc * y + c
        return acc == 0

    bound = _fujiwara_bound(tuple(monic))
    if bound <= _SCAN_LIMIT:
        candidates = (y for y in range(1, bound + 1) if c0 % y == 0)
    else:
        candidates = iter(_divisors(abs(c0)))
    for y in candidates:
        for cand in (y, -y):
            if is_root(cand):
                roots.append(Fraction(cand, lead))
    return sorted(set(roots))


def rf_poles(a: RationalFunction) -> PoleReport:
    """Rational roots of the reduced denominator with multiplicity."""
    den = a.den
    if a.num.is_zero() or den.is_const():
        return PoleReport()
    squarefree = den // poly_gcd(den, den.derivative())
    counts: Counter = Counter()
    rest = den
    for r in rational_roots(squarefree):
        lin = Poly.linear(-r)
        while True:
            q, rem = divmod(rest, lin)
            if rem:
                break
            counts[r] += 1
            rest = q
    residual = rest.monic() if rest.degree >= 1 else None
    return PoleReport.from_counter(counts, residual)


# --- printing ----------------------------------------------------------------


def _linear_str(root: Fraction, var: str) -> str:
    if root == 0:
        return var
    a = -root
    sign = "+" if a > 0 else "-"
    return f"{var}{sign}{abs(a)}"


def _factored_poly(p: Poly, var: str) -> tuple[Fraction, list[str]]:
    """Split ``p`` as constant times a list of printed monic factors."""
    if p.is_const():
        return p.lead, []
    factors: list[str] = []
    rest = p.monic()
    squarefree = rest // poly_gcd(rest, rest.derivative())
    for r in reversed(rational_roots(squarefree)):
        lin = Poly.linear(-r)
        mult = 0
        while True:
            q, rem = divmod(rest, lin)
            if rem:
                break
            rest, mult = q, mult + 1
        body = f"({_linear_str(r, var)})"
        factors.append(body if mult == 1 else f"{body}^{mult}")
    if rest.degree >= 1:
        factors.append(f"({rest.to_str(var)})")
    return p.lead, factors


def format_factored(a: RationalFunction) -> str:
    """Human-readable factored form, e.g. ``1/2*(k+2)/(k+3)`` or ``(z+4)/((z+2)(z+6))``."""
    var = a.var
    if a.is_zero():
        return "0"
    c, nf = _factored_poly(a.num, var)
    _, df = _factored_poly(a.den, var)
    if nf:
        num = "".join(nf)
        if c == -1:
            num = "-" + num
        elif c != 1:
            num = f"{c}*{num}"
    else:
        num = str(c)
    if not df:
        return num
    den = df[0] if len(df) == 1 else "(" + "".join(df) + ")"
    return f"{num}/{den}"


def frac_str(x: Fraction) -> str:
    """``"num/den"`` serialization; integers keep the ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)
