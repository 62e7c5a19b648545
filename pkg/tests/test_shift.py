from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhtoeplitz.exact import Poly, RationalFunction, rf_eval, rf_normalize
from qhtoeplitz.mellin import RadialSymbol
from qhtoeplitz.numeric import NumericSymbol, quad_mellin
from qhtoeplitz.shift import (
    IDENTITY,
    GradedOperator,
    InvalidWeight,
    QhOperator,
    UnsupportedRoot,
    graded_commutator,
    graded_is_zero,
    op_apply,
    op_commutator,
    op_compose,
    op_from_symbol,
    op_power,
    op_root,
    root_of_symbol,
)
from strategies import integer_root_rfs, radial_symbols

F = Fraction


def ratio(num_roots, den_roots, c=1):
    return rf_normalize(Poly.from_roots(num_roots).scale(c), Poly.from_roots(den_roots))


A = op_from_symbol(1, RadialSymbol.monomial(3))
B = op_from_symbol(2, RadialSymbol.monomial(6))

operators = st.builds(QhOperator, st.integers(0, 3), integer_root_rfs())


def test_op_from_symbol_examples():
    assert A == QhOperator(1, ratio([-2], [-3]))
    assert B == QhOperator(2, ratio([-3], [-5]))
    assert op_from_symbol(0, RadialSymbol.monomial(0)) == IDENTITY


@given(st.integers(0, 3), radial_symbols.filter(lambda s: not s.is_zero()), st.integers(0, 6))
def test_weight_matches_quadrature(p, s, k):
    # independent route: numerically integrate 2(k+p+1) int s(r) r^(2k+p+1) dr
    w = float(rf_eval(op_from_symbol(p, s).weight, k))
    q = 2 * (k + p + 1) * quad_mellin(NumericSymbol.from_radial(s), 2 * k + p + 2)
    assert w == pytest.approx(q, abs=1e-9)


def test_op_apply_examples():
    assert op_apply(A, 0) == (F(2, 3), 1)
    assert op_apply(A, 1) == (F(3, 4), 2)
    assert op_apply(IDENTITY, 5) == (F(1), 5)
    with pytest.raises(ValueError):
        op_apply(A, -1)


def test_weight_invariant_rejects_nonnegative_poles():
    with pytest.raises(InvalidWeight):
        QhOperator(1, ratio([], [3]))
    with pytest.raises(ValueError):
        QhOperator(-1, RationalFunction.const(1))
    QhOperator(1, ratio([], [F(1, 2)]))  # pole at k=1/2 is not a basis index


def test_compose_examples():
    root = op_root(2, 1).root
    assert op_compose(root, root) == QhOperator(2, ratio([-3], [-5]))
    assert op_compose(root, root) == op_from_symbol(2, RadialSymbol.monomial(6))
    assert op_compose(A, IDENTITY) == A
    assert op_compose(A, B).degree == 3


@given(operators, operators, st.integers(0, 50))
def test_weighted_shift_law(X, Y, k):
    cy, iy = op_apply(Y, k)
    cx, ix = op_apply(X, iy)
    assert op_apply(op_compose(X, Y), k) == (cx * cy, ix)


def test_power_examples():
    r11 = op_root(1, 1).root
    assert op_power(r11, 1) == r11
    assert op_power(op_root(2, 1).root, 2) == QhOperator(2, ratio([-3], [-5]))
    assert op_power(A, 0) == IDENTITY


@given(operators, st.integers(0, 6))
def test_power_matches_repeated_composition(X, n):
    expected = IDENTITY
    for _ in range(n):
        expected = op_compose(X, expected)
    assert op_power(X, n) == expected


def test_commutator_examples():
    C = op_commutator(A, B)
    assert C.degree == 3
    assert rf_eval(C.weight, 0) == F(8, 225)
    assert op_commutator(B, A).weight == -C.weight
    assert op_commutator(A, op_power(A, 2)).weight.is_zero()


@pytest.mark.parametrize(
    "p, M, weight, symbol",
    [
        (2, 1, ratio([-3], [-4]), RadialSymbol.of([(F(1, 2), 1), (F(1, 2), 5)])),
        (1, 1, ratio([-2], [-3]), RadialSymbol.monomial(3)),
        (1, 2, ratio([-2], [-4]), RadialSymbol.monomial(5)),
    ],
)
def test_root_examples(p, M, weight, symbol):
    res = op_root(p, M)
    assert res.root == QhOperator(1, weight)
    assert res.symbol == symbol
    # the root symbol generates the root operator
    assert op_from_symbol(1, res.symbol) == res.root


def test_root_closed_form():
    for p in range(1, 5):
        for M in range(1, 5):
            num = Poly.linear(2) * Poly.from_roots([-(j * p + 1) for j in range(1, M + 1)])
            den = Poly.from_roots([-(j * p + 2) for j in range(M + 1)])
            assert op_root(p, M).root.weight == rf_normalize(num, den)


def test_root_property_grid():
    for p in range(1, 5):
        for M in range(1, 5):
            target = op_from_symbol(p, RadialSymbol.monomial((2 * M + 1) * p))
            assert op_power(op_root(p, M).root, p) == target


def test_telescoping_identity():
    for p in range(1, 5):
        for M in range(1, 5):
            root = op_root(p, M).root
            acc = IDENTITY
            for m in range(1, 7):
                acc = op_compose(root, acc)
                num = Poly.from_roots([-(j * p + 1) for j in range(1, M + 1)])
                den = Poly.from_roots([-(m + j * p + 1) for j in range(1, M + 1)])
                assert acc.weight == rf_normalize(num, den)
                assert op_power(root, m) == acc


def test_root_of_symbol():
    assert root_of_symbol(2, RadialSymbol.monomial(6)) == op_root(2, 1)
    assert root_of_symbol(3, RadialSymbol.monomial(15)) == op_root(3, 2)
    for p, s in [(2, RadialSymbol.monomial(8)), (2, RadialSymbol.monomial(2)), (1, RadialSymbol.monomial(F(7, 2))),
                 (1, RadialSymbol.of([(1, 3), (1, 5)])), (2, RadialSymbol.monomial(6, 2))]:
        with pytest.raises(UnsupportedRoot):
            root_of_symbol(p, s)


# --- graded operators ------------------------------------------------------------


def test_graded_examples():
    X = GradedOperator.sum([A, B])
    assert graded_is_zero(graded_commutator(X, X))
    D1 = op_from_symbol(1, RadialSymbol.monomial(3))
    D3 = op_from_symbol(3, RadialSymbol.monomial(9))
    D2 = op_from_symbol(2, RadialSymbol.monomial(4))
    D4 = op_from_symbol(4, RadialSymbol.monomial(12))
    C = graded_commutator(GradedOperator.sum([D1, D3]), GradedOperator.sum([D2, D4]))
    assert set(C.degrees()) <= {3, 5, 7}
    assert graded_is_zero(graded_commutator(X, GradedOperator()))
    assert not graded_is_zero(A.graded())
    assert graded_is_zero(GradedOperator.of({1: A.weight - A.weight}))


def test_graded_merges_equal_degrees():
    X = GradedOperator.sum([A, A])
    assert X.as_dict() == {1: A.weight * 2}


graded = st.lists(operators, max_size=3).map(GradedOperator.sum)


@given(graded, graded, graded, st.integers(-3, 3))
def test_graded_bilinear_antisymmetric(X, Y, Z, c):
    lhs = graded_commutator(X + Y.scale(c), Z)
    rhs = graded_commutator(X, Z) + graded_commutator(Y, Z).scale(c)
    assert lhs == rhs
    assert graded_commutator(X, Y) == graded_commutator(Y, X).scale(-1)
