import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhtoeplitz.exact import rf_eval
from qhtoeplitz.mellin import RadialSymbol, mellin_symbol
from qhtoeplitz.numeric import (
    NoConvergence,
    NumericSymbol,
    numeric_commutator_check,
    quad_mellin,
    truncated_matrix,
)
from qhtoeplitz.shift import IDENTITY, GradedOperator, graded_commutator, op_from_symbol, op_power
from strategies import radial_symbols


def num(text_terms):
    return NumericSymbol.from_radial(RadialSymbol.of(text_terms))


def test_quad_examples():
    assert quad_mellin(num([(1, 3)]), 3, 1e-12) == pytest.approx(1 / 6, abs=1e-12)
    assert quad_mellin(num([(1, 5)]), 4, 1e-12) == pytest.approx(1 / 9, abs=1e-12)
    half = num([(Fraction(1, 2), 1), (Fraction(1, 2), 5)])
    assert quad_mellin(half, 5, 1e-12) == pytest.approx(2 / 15, abs=1e-12)


def test_quad_non_polynomial_symbol():
    s = NumericSymbol(lambda r: np.exp(-r), "exp(-r)")
    # int_0^1 e^-r r dr = 1 - 2/e
    assert quad_mellin(s, 2, 1e-12) == pytest.approx(1 - 2 / math.e, abs=1e-12)


def test_quad_endpoint_singularity():
    # r^(-1/2) near 0: int_0^1 r^(-1/2) dr = 2
    assert quad_mellin(num([(1, 0)]), 0.5, 1e-10) == pytest.approx(2, abs=1e-9)


def test_quad_errors():
    with pytest.raises(ValueError):
        quad_mellin(num([(1, 1)]), 0)
    with pytest.raises(NoConvergence):
        quad_mellin(num([(1, 0)]), 0.01, 1e-14, max_depth=3)


@settings(max_examples=40)
@given(radial_symbols, st.sampled_from([3, 4.5, 7, 10]))
def test_quad_matches_exact(s, z):
    exact = float(rf_eval(mellin_symbol(s), Fraction(z)))
    assert quad_mellin(NumericSymbol.from_radial(s), z, 1e-12) == pytest.approx(exact, abs=1e-10)


A = op_from_symbol(1, RadialSymbol.monomial(3))
B = op_from_symbol(2, RadialSymbol.monomial(6))


def test_truncated_matrix_examples():
    m = truncated_matrix(A, 3).entries
    expected = np.zeros((3, 3))
    expected[1, 0], expected[2, 1] = 2 / 3, 3 / 4
    assert np.array_equal(m, expected)
    assert np.array_equal(truncated_matrix(IDENTITY, 4).entries, np.eye(4))
    assert not truncated_matrix(B, 2).entries.any()


def test_band_structure():
    X = GradedOperator.sum([A, B, op_from_symbol(4, RadialSymbol.monomial(1))])
    m = truncated_matrix(X, 20).entries
    i, j = np.nonzero(m)
    assert set(i - j) <= {1, 2, 4}


def test_commutator_check_examples():
    res = numeric_commutator_check(A, B, 64, 1e-8)
    assert res.passed and res.columns == 61
    comm = numeric_commutator_check(A, op_power(A, 2), 64, 1e-8)
    assert comm.max_abs_deviation <= 1e-12
    with pytest.raises(ValueError):
        numeric_commutator_check(A, B, 3, 1e-8)


def test_truncation_restriction_law():
    X = GradedOperator.sum([A, B])
    Y = GradedOperator.sum([op_from_symbol(1, RadialSymbol.of([(1, 1), (2, 7)])), B])
    K = 40
    mx, my = truncated_matrix(X, K).entries, truncated_matrix(Y, K).entries
    exact = truncated_matrix(graded_commutator(X, Y), K).entries
    cols = K - 4
    diff = (mx @ my - my @ mx)[:, :cols] - exact[:, :cols]
    assert np.max(np.abs(diff)) <= 1e-10 * max(1.0, np.max(np.abs(exact)))
