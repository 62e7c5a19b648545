"""Exact weighted-shift calculus for quasihomogeneous Toeplitz operators on the Bergman space."""

from .exact import (
    BothZero,
    NotProportional,
    PoleReport,
    Poly,
    Proportional,
    RationalFunction,
    poly_gcd,
    rf_arith,
    rf_eval,
    rf_normalize,
    rf_poles,
    rf_proportional,
    rf_shift,
)
from .grammar import format_symbol, parse_symbol
from .mellin import RadialSymbol, mellin_symbol, root_mellin, symbol_from_mellin
from .shift import (
    GradedOperator,
    QhOperator,
    graded_commutator,
    graded_is_zero,
    op_apply,
    op_commutator,
    op_compose,
    op_from_symbol,
    op_power,
    op_root,
)
from .theorem import (
    CandidatePair,
    TheoremParams,
    VerificationReport,
    build_prod_sides,
    check_instance,
    pole_diff,
    verify_theorem1,
)

__version__ = "0.1.0"
