"""Exact sums of series built from derivatives of Chebyshev polynomials of the second kind."""
from .chebpoly import (
    IntPolynomial,
    coefficient_a,
    eval_exact,
    eval_float,
    gegenbauer_poly,
    scaled_deriv_poly,
    u_poly,
)
from .continuation import (
    BoundaryPoint,
    RegularizedValue,
    SingularPointError,
    Weight,
    abel_power_sum,
    binom_alternating,
    boundary_sum,
    euler_power_sum,
    gamma_regularized,
    pell_from_angle,
    pell_regularized,
)
from .exactnum import I, GaussianRational, binomial, complex_gamma, parse_number
from .sequences import (
    FIBONACCI,
    LUCAS,
    PELL,
    IdentityError,
    SequenceKind,
    base_term,
    convolved_term,
    convolved_via_chebyshev,
    phi,
)
from .series import (
    Direction,
    DomainError,
    PoleError,
    SeriesQuery,
    closed_form_rational,
    closed_form_surd,
    convergent_sum,
    fib_conv_sum,
    fib_from_boundary,
    partial_sum,
    phi_conv_sum,
    terms_needed,
)
from .tables import TableSpec, render_closed_form, table_rows

__all__ = [name for name in dir() if not name.startswith("_")]
