import cmath
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from chebsum.exactnum import (
    GammaPoleError,
    GaussianRational,
    I,
    binomial,
    complex_gamma,
    cospi,
    gauss_arith,
    gauss_pow,
    parse_number,
    sinpi,
)

from conftest import gaussians, nonzero_gaussians


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 0) == 1
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_pascal_oracle():
    # build the triangle by addition only
    row = [1]
    for n in range(1, 80):
        row = [1] + [row[k - 1] + row[k] for k in range(1, n)] + [1]
        assert [binomial(n, k) for k in range(n + 1)] == row


@given(gaussians, gaussians)
def test_field_axioms(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
    assert a * (b + 1) == a * b + a
    if not b.is_zero():
        assert (a / b) * b == a


@given(gaussians, gaussians)
def test_matches_complex_fraction_oracle(a, b):
    # (p + qi)(r + si) by the schoolbook rule, all in Fractions
    prod = a * b
    assert prod.re == a.re * b.re - a.im * b.im
    assert prod.im == a.re * b.im + a.im * b.re
    assert a.norm() == (a * a.conjugate()).re


@given(nonzero_gaussians, st.integers(-12, 12))
def test_pow_matches_repeated_multiplication(a, e):
    expected = GaussianRational(1)
    for _ in range(abs(e)):
        expected = expected * a
    if e < 0:
        expected = 1 / expected
    assert gauss_pow(a, e) == expected


def test_pow_zero_negative():
    with pytest.raises(ZeroDivisionError):
        gauss_pow(0, -1)
    assert gauss_pow(0, 0) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        I / 0
    with pytest.raises(ZeroDivisionError):
        gauss_arith(1, 0, "div")


def test_gauss_arith_ops():
    a, b = GaussianRational(1, 2), GaussianRational(Fraction(1, 2), -1)
    assert gauss_arith(a, b, "add") == GaussianRational(Fraction(3, 2), 1)
    assert gauss_arith(a, b, "sub") == GaussianRational(Fraction(1, 2), 3)
    assert gauss_arith(a, b, "mul") == GaussianRational(Fraction(5, 2), 0)
    assert gauss_arith(a, b, "div") * b == a
    with pytest.raises(ValueError):
        gauss_arith(a, b, "pow")


def test_i_squared():
    assert I * I == -1
    assert gauss_pow(I, 4) == 1


def test_floats_do_not_mix():
    with pytest.raises(TypeError):
        I + 0.5


def test_hash_agrees_with_fraction():
    assert hash(GaussianRational(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert {GaussianRational(2): "x"}[GaussianRational(2)] == "x"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", GaussianRational(3)),
        ("-3/4", GaussianRational(Fraction(-3, 4))),
        ("i", I),
        ("-i", -I),
        ("i/2", I / 2),
        ("3i", 3 * I),
        ("(3/4)i", Fraction(3, 4) * I),
        ("(1/2)+(3/4)i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
        ("1/2+3/4*i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
        ("(1+i)/4", GaussianRational(Fraction(1, 4), Fraction(1, 4))),
        ("-2-i", GaussianRational(-2, -1)),
    ],
)
def test_parse_exact(text, expected):
    assert parse_number(text) == expected


def test_parse_float_is_complex():
    assert parse_number("0.25") == 0.25 + 0j
    assert isinstance(parse_number("0.25"), complex)
    assert parse_number("1.5-2e-3*i") == complex(1.5, -0.002)
    assert isinstance(parse_number("1/2+0.5i"), complex)


@pytest.mark.parametrize("text", ["", "1/", "3//4", "(1+2", "1+x", "2..5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_number(text)


@given(gaussians)
def test_str_round_trips(g):
    assert parse_number(str(g)) == g


def test_sinpi_exact_zeros():
    for n in range(-6, 7):
        assert sinpi(n) == 0.0
        assert cospi(n + 0.5) == 0.0
    assert sinpi(0.5) == 1.0
    assert sinpi(1 / 6) == pytest.approx(0.5, rel=1e-15)


@given(st.floats(-20, 20))
def test_sinpi_matches_math(x):
    assert sinpi(x) == pytest.approx(math.sin(math.pi * x), abs=1e-12)


def test_gamma_integers():
    for n in range(1, 20):
        assert complex_gamma(n).real == pytest.approx(math.factorial(n - 1), rel=1e-13)


def test_gamma_against_mpmath():
    worst = 0.0
    for x in [k / 4 for k in range(-18, 25)]:
        for y in [-4, -1.5, -0.3, 0, 0.3, 1.5, 4]:
            z = complex(x, y)
            if y == 0 and x <= 0 and x == int(x):
                continue
            ref = complex(mpmath.gamma(mpmath.mpc(x, y)))
            worst = max(worst, abs(complex_gamma(z) - ref) / abs(ref))
    assert worst < 1e-13


def test_gamma_reflection_and_half():
    assert complex_gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    z = complex(0.3, 0.7)
    lhs = complex_gamma(z) * complex_gamma(1 - z)
    assert lhs == pytest.approx(math.pi / cmath.sin(math.pi * z), rel=1e-13)


@pytest.mark.parametrize("n", [0, -1, -5])
def test_gamma_poles(n):
    with pytest.raises(GammaPoleError):
        complex_gamma(n)
    with pytest.raises(GammaPoleError):
        complex_gamma(n + 1e-10)
