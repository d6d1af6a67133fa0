import cmath
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chebsum.chebpoly import eval_exact, scaled_deriv_poly
from chebsum.exactnum import GaussianRational, I, binomial
from chebsum.sequences import FIBONACCI, convolved_term, fib
from chebsum.series import (
    GF_CAP,
    Direction,
    DomainError,
    FormalSeries,
    PoleError,
    SeriesQuery,
    check_domain,
    closed_form_polynomials,
    closed_form_rational,
    closed_form_surd,
    collect_left_side,
    convergent_sum,
    expand_closed_form,
    fib_conv_sum,
    fib_from_boundary,
    gegenbauer_series_sum,
    lemma2_coefficient,
    magic_value,
    modulus_upper_bound,
    partial_sum,
    pell_gf_check,
    phi_conv_sum,
    phi_conv_sum_surd,
    tail_terms_needed,
    terms_needed,
)
from chebsum.verify import CONVERGENT_NEG_POINTS, CONVERGENT_POS_POINTS, FIB_SUM_EXAMPLES

zs = sympy.Symbol("z")


def test_direction_parse():
    assert Direction.parse("+") is Direction.POS
    assert Direction.parse("Negative") is Direction.NEG
    with pytest.raises(ValueError):
        Direction.parse("up")


def test_domain_checks():
    check_domain(Fraction(1, 2), Direction.POS)
    with pytest.raises(DomainError):
        check_domain(I, Direction.POS)
    with pytest.raises(DomainError):
        check_domain(GaussianRational(Fraction(3, 5), Fraction(4, 5)), Direction.NEG)
    with pytest.raises(DomainError):
        partial_sum(SeriesQuery(1, 2, Direction.POS, 3))


def test_query_validation():
    with pytest.raises(ValueError):
        SeriesQuery(0, Fraction(1, 2))
    with pytest.raises(ValueError):
        SeriesQuery(1, Fraction(1, 2), S=-1)


def test_partial_sum_examples():
    assert partial_sum(SeriesQuery(1, Fraction(1, 2), Direction.POS, 3)) == Fraction(15, 8)
    assert partial_sum(SeriesQuery(3, 2, Direction.NEG, 2)) == Fraction(245, 4)


def test_partial_sum_float_matches_exact():
    exact = partial_sum(SeriesQuery(5, GaussianRational(Fraction(1, 4), Fraction(1, 4)), Direction.POS, 30))
    approx = partial_sum(SeriesQuery(5, complex(0.25, 0.25), Direction.POS, 30))
    assert approx == pytest.approx(complex(exact), rel=1e-14)


def test_closed_form_examples():
    assert closed_form_rational(3, Fraction(1, 2)) == 4
    assert closed_form_rational(2, 2, Direction.NEG) == 16
    assert closed_form_rational(1, -1) == Fraction(1, 2)
    assert closed_form_surd(2, 0.25) == pytest.approx(8 / 9, rel=1e-14)
    with pytest.raises(PoleError):
        closed_form_rational(2, 1)
    with pytest.raises(PoleError):
        closed_form_surd(2, 1.0)
    with pytest.raises(DomainError):
        closed_form_surd(2, 0.0, Direction.NEG)


def _sympy_closed_form(N, direction):
    # sum_sigma w^sigma C(N-1-j+sigma, sigma) = (1 - w)^-(N-j), w = z or 1/z
    w = zs if direction is Direction.POS else 1 / zs
    total = 0
    for j in range((N - 1) // 2 + 1):
        c = (-1) ** j * binomial(N - 1 - j, j) * 2 ** (N - 1 - 2 * j)
        total += c * zs ** (N - 1 - 2 * j) / (1 - w) ** (N - j)
    return sympy.cancel(sympy.together(total))


@pytest.mark.parametrize("direction", list(Direction))
def test_closed_form_polynomials_against_sympy(direction):
    for N in range(1, 10):
        num, m = closed_form_polynomials(N, direction)
        den = (1 - zs) ** m if direction is Direction.POS else (zs - 1) ** m
        mine = sum(c * zs**k for k, c in enumerate(num.coeffs)) / den
        assert sympy.simplify(mine - _sympy_closed_form(N, direction)) == 0


@pytest.mark.parametrize("direction, points", [(Direction.POS, CONVERGENT_POS_POINTS),
                                               (Direction.NEG, CONVERGENT_NEG_POINTS)])
def test_closed_form_polynomials_evaluate_to_rational(direction, points):
    for N in range(1, 9):
        num, m = closed_form_polynomials(N, direction)
        for z in points:
            den = (1 - z) ** m if direction is Direction.POS else (z - 1) ** m
            assert eval_exact(num, z) / den == closed_form_rational(N, z, direction)


def test_lemma2_coefficient_matches_expansion():
    for N in range(1, 12):
        for sigma in range(0, 25):
            for j in range((N - 1) // 2 + 1):
                assert lemma2_coefficient(N, sigma, j) == abs(scaled_deriv_poly(N, sigma)[N - 1 - 2 * j])


def test_binomial_comparison_used_by_tail_bound():
    # C(n-j, j) <= C(n, 2j), which keeps every coefficient below the majorant
    for n in range(0, 201):
        for j in range(n // 2 + 1):
            assert binomial(n - j, j) <= binomial(n, 2 * j)


@pytest.mark.parametrize("direction, points", [(Direction.POS, CONVERGENT_POS_POINTS),
                                               (Direction.NEG, CONVERGENT_NEG_POINTS)])
def test_term_majorant(direction, points):
    for z in points:
        R = modulus_upper_bound(z.norm())
        rho = R if direction is Direction.POS else modulus_upper_bound(1 / z.norm())
        w = z if direction is Direction.POS else 1 / z
        for N in range(1, 8):
            for sigma in range(0, 30):
                term = (w**sigma) * eval_exact(scaled_deriv_poly(N, sigma), z)
                bound = binomial(N - 1 + sigma, sigma) * (1 + 2 * R) ** (N - 1) * rho**sigma
                assert term.norm() <= bound**2


def test_modulus_upper_bound():
    for m2 in [Fraction(1, 4), Fraction(2), Fraction(1, 3), Fraction(10**6 + 1)]:
        r = modulus_upper_bound(m2)
        assert r * r >= m2
        assert r - Fraction(math.isqrt(int(m2 * 4**64)), 2**64) <= Fraction(2, 2**64)


def test_tail_terms_needed_examples():
    # strict inequality: the bound at S = 20 equals 2^-20 exactly
    assert tail_terms_needed(1, Fraction(1, 2), Fraction(1, 2**20)) == 21
    assert tail_terms_needed(2, Fraction(1, 2), 1e-9) == 37
    with pytest.raises(DomainError):
        tail_terms_needed(1, 1, Fraction(1, 10))
    with pytest.raises(ValueError):
        tail_terms_needed(1, Fraction(1, 2), 0)
    with pytest.raises(DomainError):
        tail_terms_needed(1, Fraction(999, 1000), Fraction(1, 2**60), cap=50)


@pytest.mark.parametrize("direction, points", [(Direction.POS, CONVERGENT_POS_POINTS),
                                               (Direction.NEG, CONVERGENT_NEG_POINTS)])
def test_certified_partial_sums(direction, points):
    eps = Fraction(1, 2**30)
    for z in points:
        for N in (1, 4, 7):
            result = convergent_sum(N, z, direction, eps)
            assert (result.value - closed_form_rational(N, z, direction)).norm() < eps**2
            assert result.terms == terms_needed(N, z, direction, eps)


def test_terms_needed_zero_point():
    assert terms_needed(3, 0) == 0


def _term_scale(N, z, direction):
    # size of the largest closed-form term; rounding error is relative to this
    out = 0.0
    for j in range((N - 1) // 2 + 1):
        c = binomial(N - 1 - j, j) * 2 ** (N - 1 - 2 * j)
        if direction is Direction.POS:
            out = max(out, c * abs(z) ** (N - 1 - 2 * j) / abs(1 - z) ** (N - j))
        else:
            out = max(out, c * abs(z) ** (2 * N - 1 - 3 * j) / abs(z - 1) ** (N - j))
    return out


@settings(max_examples=60)
@given(st.integers(1, 14), st.floats(0.05, 0.95), st.floats(-math.pi, math.pi))
def test_surd_matches_rational_inside(N, r, t):
    z = cmath.rect(r, t)
    tiny = 1e-12 * _term_scale(N, z, Direction.POS)
    a = closed_form_surd(N, z)
    assert a == pytest.approx(closed_form_rational(N, z), rel=1e-9, abs=tiny)
    assert closed_form_surd(N, z, branch=-1) == pytest.approx(a, rel=1e-12, abs=tiny)


@settings(max_examples=60)
@given(st.integers(1, 14), st.floats(1.05, 5), st.floats(-math.pi, math.pi))
def test_surd_matches_rational_outside(N, r, t):
    z = cmath.rect(r, t)
    tiny = 1e-12 * _term_scale(N, z, Direction.NEG)
    a = closed_form_surd(N, z, Direction.NEG)
    assert a == pytest.approx(closed_form_rational(N, z, Direction.NEG), rel=1e-9, abs=tiny)
    assert closed_form_surd(N, z, Direction.NEG, branch=-1) == pytest.approx(a, rel=1e-12, abs=tiny)


def test_surd_branch_validation():
    with pytest.raises(ValueError):
        closed_form_surd(2, 0.5, branch=2)


def test_gegenbauer_series_sum():
    for n in range(0, 8):
        for z in (0.3, complex(0.2, -0.5)):
            assert gegenbauer_series_sum(n, z) == pytest.approx(closed_form_rational(n + 1, z), rel=1e-12)
        z = complex(1.5, 2)
        expected = closed_form_rational(n + 1, z, Direction.NEG)
        assert gegenbauer_series_sum(n, z, Direction.NEG) == pytest.approx(expected, rel=1e-12)


def test_formal_series_arithmetic():
    K = 12
    f = FormalSeries([1, 2, 3], K)
    assert f * f.reciprocal() == FormalSeries([1], K)
    assert (f**3) / f == f * f
    assert (f - f) == FormalSeries([], K)
    assert (2 + f)[0] == 3
    with pytest.raises(ZeroDivisionError):
        FormalSeries([0, 1], K).reciprocal()
    with pytest.raises(ValueError):
        f + FormalSeries([1], K + 1)
    geometric = FormalSeries([1, -1], K).reciprocal()
    assert all(c == 1 for c in geometric.coeffs)


@pytest.mark.parametrize("N", range(1, 9))
def test_formal_expansion_agrees(N):
    assert expand_closed_form(N, 30) == collect_left_side(N, 30)


def test_pell_gf_check():
    assert pell_gf_check(8, 4)
    assert pell_gf_check(0)
    with pytest.raises(ValueError):
        pell_gf_check(GF_CAP + 1)


def test_fib_conv_sum_examples():
    for N, value in FIB_SUM_EXAMPLES.items():
        assert fib_conv_sum(N) == value


def test_fib_conv_sum_by_partial_sums():
    w = I / 2
    for N in range(1, 7):
        S = terms_needed(N, w, Direction.POS, Fraction(1, 10**12))
        total = sum((w**s * convolved_term(FIBONACCI, N, s) for s in range(S + 1)), GaussianRational(0))
        assert abs(complex(total) - complex(fib_conv_sum(N))) < 1e-12


def test_phi_conv_sum_examples():
    assert phi_conv_sum(2, 2) == 27
    assert phi_conv_sum(1, 3) == GaussianRational(Fraction(4, 5), Fraction(-2, 5))
    with pytest.raises(DomainError):
        phi_conv_sum(3, 1)
    with pytest.raises(DomainError):
        phi_conv_sum_surd(3, 1)
    for k in range(2, 7):
        for N in range(1, 6):
            exact = complex(phi_conv_sum(N, k))
            assert phi_conv_sum_surd(N, k) == pytest.approx(exact, rel=1e-11)
            assert phi_conv_sum_surd(N, k, branch=-1) == pytest.approx(exact, rel=1e-11)


def test_fib_from_boundary():
    for N in range(1, 16):
        assert abs(fib_from_boundary(N) - fib(N)) < 1e-7


def test_magic_value():
    assert magic_value(0).series == 2
    for N in range(0, 30):
        mv = magic_value(N)
        assert mv.series == mv.trig
    with pytest.raises(ValueError):
        magic_value(-1)
