import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from chebsum.chebpoly import (
    IntPolynomial,
    ScaledDerivativeId,
    coefficient_a,
    eval_exact,
    eval_float,
    gegenbauer_poly,
    render_poly,
    scaled_deriv_poly,
    symbolic_derivative,
    u_poly,
)
from chebsum.exactnum import GaussianRational, I

from conftest import gaussians

x = sympy.Symbol("x")


def _from_sympy(expr):
    coeffs = sympy.Poly(expr, x).all_coeffs()[::-1]
    return IntPolynomial(tuple(int(c) for c in coeffs))


def test_u_low_degrees():
    assert str(u_poly(0)) == "1"
    assert str(u_poly(1)) == "2z"
    assert str(u_poly(4)) == "16z^4-12z^2+1"


def test_u_recurrence():
    two_z = IntPolynomial((0, 2))
    for n in range(1, 60):
        assert u_poly(n + 1) == two_z * u_poly(n) - u_poly(n - 1)


def test_u_against_sympy():
    for n in range(25):
        assert u_poly(n) == _from_sympy(sympy.chebyshevu(n, x))


def test_u_negative_index():
    assert u_poly(-1).is_zero()
    for n in range(2, 12):
        assert u_poly(-n) == -u_poly(n - 2)


@given(st.integers(0, 40), st.floats(-1, 1))
def test_u_trig_identity(n, c):
    theta = math.acos(c)
    if abs(math.sin(theta)) < 1e-3:
        return
    expected = math.sin((n + 1) * theta) / math.sin(theta)
    # exact evaluation at the float's binary value; monomial Horner in
    # doubles loses too many digits at this degree
    value = float(eval_exact(u_poly(n), Fraction(c)).re)
    assert value == pytest.approx(expected, abs=1e-9 / abs(math.sin(theta)))


def test_scaled_derivative_against_differentiation():
    for N in range(1, 16):
        for s in range(0, 12):
            lhs = scaled_deriv_poly(N, s) * (2**s * math.factorial(s))
            assert lhs == symbolic_derivative(u_poly(N + s - 1), s)


def test_scaled_derivative_against_sympy_gegenbauer():
    for n in range(0, 10):
        for a in range(1, 6):
            expected = _from_sympy(sympy.expand(sympy.gegenbauer(n, a, x)))
            assert gegenbauer_poly(n, a) == expected


def test_scaled_derivative_shape():
    for N in range(1, 20):
        for s in range(0, 20):
            p = scaled_deriv_poly(N, s)
            assert p.degree == N - 1
            # parity of N - 1
            assert all(c == 0 for k, c in enumerate(p.coeffs) if (k - N + 1) % 2)
            assert p.leading() == coefficient_a(N, s, 0)


def test_scaled_derivative_examples():
    assert str(scaled_deriv_poly(4, 2)) == "80z^3-24z"
    assert scaled_deriv_poly(ScaledDerivativeId(3, 1)) == scaled_deriv_poly(3, 1)
    assert scaled_deriv_poly(1, 7) == IntPolynomial((1,))
    with pytest.raises(ValueError):
        scaled_deriv_poly(0, 1)
    with pytest.raises(ValueError):
        scaled_deriv_poly(2, -1)


def test_coefficient_a_values():
    assert coefficient_a(1, 0, 0) == 1
    assert coefficient_a(3, 2, 1) == 3
    assert coefficient_a(5, 0, 2) == 1


def test_symbolic_derivative():
    p = IntPolynomial((1, 1, 1, 1))
    assert symbolic_derivative(p) == IntPolynomial((1, 2, 3))
    assert symbolic_derivative(p, 4).is_zero()
    with pytest.raises(ValueError):
        symbolic_derivative(p, -1)


def test_gegenbauer_validation():
    with pytest.raises(ValueError):
        gegenbauer_poly(-1, 1)
    with pytest.raises(ValueError):
        gegenbauer_poly(2, 0)


@given(gaussians, st.integers(0, 15), st.integers(0, 6))
def test_eval_exact_matches_naive_horner(z, N, s):
    p = scaled_deriv_poly(N + 1, s)
    acc = GaussianRational(0)
    for c in reversed(p.coeffs):
        acc = acc * z + c
    assert eval_exact(p, z) == acc


@given(gaussians, st.integers(1, 10))
def test_eval_float_close_to_exact(z, N):
    p = u_poly(N)
    exact = complex(eval_exact(p, z))
    assert eval_float(p, complex(z)) == pytest.approx(exact, rel=1e-9, abs=1e-9)


def test_eval_examples():
    assert eval_exact(u_poly(4), I / 2) == 5
    assert eval_exact(u_poly(2), Fraction(1, 2)) == 0
    assert eval_exact(u_poly(3), Fraction(1, 2)) == -1


def test_polynomial_arithmetic():
    p = IntPolynomial((1, 2))
    q = IntPolynomial((0, 0, 3))
    assert (p * q).coeffs == (0, 0, 3, 6)
    assert (p + q - q) == p
    assert p**3 == p * p * p
    assert IntPolynomial((0, 0)).is_zero()
    assert p(2) == 5


@pytest.mark.parametrize(
    "coeffs, text",
    [((), "0"), ((1,), "1"), ((0, -1), "-z"), ((-1, 0, 4), "4z^2-1"), ((0, 1, 1), "z^2+z")],
)
def test_render_poly(coeffs, text):
    assert render_poly(coeffs) == text
