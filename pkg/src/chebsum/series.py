"""Sums of the series ``sum_sigma z^(+-sigma) P(N, sigma)(z)``.

Two families are handled.  With positive powers the series converges for
``|z| < 1``; with negative powers it converges for ``|z| > 1``.  Each family
is computed three ways:

* :func:`partial_sum` adds terms exactly,
* :func:`closed_form_rational` evaluates the finite rational expression, and
* :func:`closed_form_surd` evaluates the square-root form in floating point.

:func:`tail_terms_needed` gives a truncation point with a proven error
bound, so partial sums can be certified against the closed forms.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .chebpoly import (
    IntPolynomial,
    eval_exact,
    eval_float,
    gegenbauer_poly,
    scaled_deriv_poly,
    u_poly,
)
from .exactnum import GaussianRational, I, binomial, gauss_pow, to_gaussian
from .sequences import PELL, chebyshev_point, convolved_term, phi

__all__ = [
    "ConvergentSum",
    "Direction",
    "DomainError",
    "FormalSeries",
    "MagicValue",
    "PoleError",
    "SeriesQuery",
    "Z0",
    "closed_form_polynomials",
    "closed_form_rational",
    "closed_form_surd",
    "collect_left_side",
    "convergent_sum",
    "expand_closed_form",
    "fib_conv_sum",
    "fib_from_boundary",
    "gegenbauer_series_sum",
    "lemma2_coefficient",
    "magic_value",
    "modulus_upper_bound",
    "partial_sum",
    "pell_gf_check",
    "phi_conv_sum",
    "phi_conv_sum_surd",
    "tail_terms_needed",
    "terms_needed",
]


class DomainError(ValueError):
    """Argument outside the region where the requested sum is defined."""


class PoleError(DomainError, ZeroDivisionError):
    """Closed form evaluated at its pole ``z = 1``."""


class Direction(enum.Enum):
    POS = "pos"  # weights z**sigma, |z| < 1
    NEG = "neg"  # weights z**-sigma, |z| > 1

    @classmethod
    def parse(cls, text) -> "Direction":
        if isinstance(text, Direction):
            return text
        key = str(text).strip().lower()
        aliases = {"pos": cls.POS, "+": cls.POS, "positive": cls.POS,
                   "neg": cls.NEG, "-": cls.NEG, "negative": cls.NEG}
        if key not in aliases:
            raise ValueError(f"unknown direction {text!r}")
        return aliases[key]


def _is_exact(z) -> bool:
    return isinstance(z, (GaussianRational, int, Fraction))


def _abs2(z):
    if _is_exact(z):
        return to_gaussian(z).norm()
    return abs(complex(z)) ** 2


def check_domain(z, direction: Direction) -> None:
    """Raise :class:`DomainError` unless the series converges at ``z``.

    Exact arguments are compared through ``|z|^2`` as a rational.
    """
    m2 = _abs2(z)
    if direction is Direction.POS and not m2 < 1:
        raise DomainError(f"positive-power series needs |z| < 1, got |z|^2 = {m2}")
    if direction is Direction.NEG and not m2 > 1:
        raise DomainError(f"negative-power series needs |z| > 1, got |z|^2 = {m2}")


@dataclass(frozen=True)
class SeriesQuery:
    """``sum_{sigma=0}^{S} w^sigma P(N, sigma)(z)`` with ``w = z`` or ``1/z``."""

    N: int
    z: object
    direction: Direction = Direction.POS
    S: int = 0

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.S < 0:
            raise ValueError("truncation S must be >= 0")
        object.__setattr__(self, "direction", Direction.parse(self.direction))


def partial_sum(q: SeriesQuery):
    """Exact partial sum for Gaussian-rational ``z`` (complex double otherwise)."""
    check_domain(q.z, q.direction)
    if _is_exact(q.z):
        z = to_gaussian(q.z)
        w = z if q.direction is Direction.POS else 1 / z
        total = GaussianRational(0)
        weight = GaussianRational(1)
        for sigma in range(q.S + 1):
            total += weight * eval_exact(scaled_deriv_poly(q.N, sigma), z)
            weight *= w
        return total
    z = complex(q.z)
    w = z if q.direction is Direction.POS else 1 / z
    re_parts, im_parts = [], []
    weight = 1 + 0j
    for sigma in range(q.S + 1):
        term = weight * eval_float(scaled_deriv_poly(q.N, sigma), z)
        re_parts.append(term.real)
        im_parts.append(term.imag)
        weight *= w
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def _is_one(z) -> bool:
    return z == 1


def closed_form_rational(N: int, z, direction=Direction.POS):
    """Value of the series as a finite rational expression in ``z``.

    Works on Gaussian rationals (exact) and on Python complexes.  The
    expression is the analytic continuation of the sum, so it is also
    meaningful outside the disc of convergence; only ``z = 1`` is a pole.
    """
    direction = Direction.parse(direction)
    if N < 1:
        raise ValueError("N must be >= 1")
    if _is_one(z):
        raise PoleError("closed form has a pole at z = 1")
    exact = _is_exact(z)
    if exact:
        z = to_gaussian(z)
        total = GaussianRational(0)
        power = gauss_pow
    else:
        z = complex(z)
        total = 0j
        power = pow
    for j in range((N - 1) // 2 + 1):
        c = (-1) ** j * binomial(N - 1 - j, j) * 2 ** (N - 1 - 2 * j)
        if direction is Direction.POS:
            total += c * power(z, N - 1 - 2 * j) / power(1 - z, N - j)
        else:
            total += c * power(z, 2 * N - 1 - 3 * j) / power(z - 1, N - j)
    return total


def closed_form_polynomials(N: int, direction=Direction.POS) -> tuple[IntPolynomial, int]:
    """Numerator polynomial and denominator exponent of the closed form.

    The denominator is ``(1-z)^m`` for positive powers and ``(z-1)^m`` for
    negative powers.
    """
    direction = Direction.parse(direction)
    num = IntPolynomial(())
    for j in range((N - 1) // 2 + 1):
        c = (-1) ** j * binomial(N - 1 - j, j) * 2 ** (N - 1 - 2 * j)
        if direction is Direction.POS:
            mono = IntPolynomial.from_terms({N - 1 - 2 * j: c})
            num = num + mono * IntPolynomial((1, -1)) ** j
        else:
            mono = IntPolynomial.from_terms({2 * N - 1 - 3 * j: c})
            num = num + mono * IntPolynomial((-1, 1)) ** j
    return num, N


def closed_form_surd(N: int, z, direction=Direction.POS, branch: int = 1) -> complex:
    """Square-root form of the sum, in complex double precision.

    Positive powers: ``(1-z)^(-(N+1)/2) U_{N-1}(z / sqrt(1-z))``.
    Negative powers: ``(z/(z-1))^((N+1)/2) U_{N-1}(z sqrt(z/(z-1)))``.
    One square root ``r`` serves both the prefactor and the argument, so
    the result does not depend on its sign; ``branch=-1`` picks ``-r``.
    """
    direction = Direction.parse(direction)
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    z = complex(z)
    if z == 1:
        raise PoleError("closed form has a pole at z = 1")
    U = u_poly(N - 1)
    if direction is Direction.POS:
        r = branch * cmath.sqrt(1 - z)
        return eval_float(U, z / r) / r ** (N + 1)
    if z == 0:
        raise DomainError("negative-power closed form is undefined at z = 0")
    r = branch * cmath.sqrt(z / (z - 1))
    return r ** (N + 1) * eval_float(U, z * r)


def gegenbauer_series_sum(n: int, z, direction=Direction.POS) -> complex:
    """``sum_sigma z^(+-sigma) C_n^(1+sigma)(z)`` through ``C_n^(1)`` at a shifted point."""
    direction = Direction.parse(direction)
    z = complex(z)
    C = gegenbauer_poly(n, 1)
    if direction is Direction.POS:
        r = cmath.sqrt(1 - z)
        return eval_float(C, z / r) / r ** (n + 2)
    r = cmath.sqrt(z / (z - 1))
    return r ** (n + 2) * eval_float(C, z * r)


def lemma2_coefficient(N: int, sigma: int, j: int) -> int:
    """``sigma``-th coefficient of ``C(N-1-j, j) 2^(N-1-2j) / (1-z)^(N-j)``."""
    return binomial(N - 1 - j, j) * binomial(N - 1 - j + sigma, sigma) * 2 ** (N - 1 - 2 * j)


# -- truncation bounds -----------------------------------------------------

def modulus_upper_bound(m2: Fraction, bits: int = 64) -> Fraction:
    """A dyadic rational ``r >= sqrt(m2)``, within ``2**-bits`` of it."""
    m2 = Fraction(m2)
    if m2 < 0:
        raise ValueError("squared modulus must be nonnegative")
    scaled = m2 * 4**bits
    ceil_scaled = -(-scaled.numerator // scaled.denominator)
    return Fraction(math.isqrt(ceil_scaled) + 1, 2**bits)


def _tail_terms(N: int, ratio: Fraction, scale: Fraction, eps: Fraction, cap: int) -> int:
    # tail(S) = scale * sum_{sigma > S} C(N-1+sigma, sigma) ratio^sigma
    full = 1 / (1 - ratio) ** N
    head = Fraction(0)
    rpow = Fraction(1)
    for S in range(cap + 1):
        head += binomial(N - 1 + S, S) * rpow
        if scale * (full - head) < eps:
            return S
        rpow *= ratio
    raise DomainError(f"tail bound not reached within {cap} terms")


def tail_terms_needed(N: int, mod_z, eps, cap: int = 100_000) -> int:
    """Smallest ``S`` whose majorant tail past ``S`` is below ``eps``.

    The majorant of the ``sigma``-th term is
    ``C(N-1+sigma, sigma) (1+2|z|)^(N-1) |z|^sigma``; its tail is summed in
    closed form with exact rationals.
    """
    r = Fraction(mod_z)
    if not 0 < r < 1:
        raise DomainError(f"modulus must lie in (0, 1), got {mod_z}")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return _tail_terms(N, r, (1 + 2 * r) ** (N - 1), eps, cap)


def terms_needed(N: int, z, direction=Direction.POS, eps=Fraction(1, 2**40), cap: int = 100_000) -> int:
    """Truncation point for :func:`partial_sum` at ``z`` with error below ``eps``."""
    direction = Direction.parse(direction)
    check_domain(z, direction)
    m2 = Fraction(_abs2(z)) if _is_exact(z) else Fraction(abs(complex(z)) ** 2)
    eps = Fraction(eps)
    if direction is Direction.POS:
        if m2 == 0:
            return 0
        return tail_terms_needed(N, modulus_upper_bound(m2), eps, cap)
    R = modulus_upper_bound(m2)
    rho = modulus_upper_bound(1 / m2)
    if not rho < 1:
        raise DomainError("|z| too close to 1 for a usable bound")
    return _tail_terms(N, rho, (1 + 2 * R) ** (N - 1), eps, cap)


class ConvergentSum(NamedTuple):
    value: object
    terms: int
    bound: Fraction


def convergent_sum(N: int, z, direction=Direction.POS, eps=Fraction(1, 2**40)) -> ConvergentSum:
    """Partial sum truncated where the proven tail bound drops below ``eps``."""
    S = terms_needed(N, z, direction, eps)
    return ConvergentSum(partial_sum(SeriesQuery(N, z, direction, S)), S, Fraction(eps))


# -- formal power series ---------------------------------------------------

class FormalSeries:
    """Power series in ``z`` truncated after the ``z**order`` term.

    Coefficients are Gaussian rationals; all arithmetic is exact up to the
    truncation order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence = (), order: int = 0):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [to_gaussian(x) for x in list(coeffs)[: order + 1]]
        c += [GaussianRational(0)] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "FormalSeries":
        c = [0] * (order + 1)
        if k <= order:
            c[k] = coeff
        return cls(c, order)

    @classmethod
    def from_polynomial(cls, p: IntPolynomial, order: int) -> "FormalSeries":
        return cls(p.coeffs, order)

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k]

    def _check(self, other: "FormalSeries"):
        if other.order != self.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            other = FormalSeries([other], self.order)
        self._check(other)
        return FormalSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            c = to_gaussian(other)
            return FormalSeries([a * c for a in self.coeffs], self.order)
        self._check(other)
        K = self.order
        out = [GaussianRational(0)] * (K + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(K + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return FormalSeries(out, K)

    __rmul__ = __mul__

    def reciprocal(self) -> "FormalSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = 1 / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = GaussianRational(0)
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc += self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return FormalSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, FormalSeries):
            return self * other.reciprocal()
        return self * (1 / to_gaussian(other))

    def __pow__(self, e: int):
        if e < 0:
            return self.reciprocal() ** (-e)
        result = FormalSeries([1], self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"FormalSeries([{shown}{more}], order={self.order})"


def expand_closed_form(N: int, K: int) -> FormalSeries:
    """Power-series expansion of the positive-power closed form, through ``z**K``.

    Built from series inversion of ``1 - z``, independently of the
    coefficient formula for ``P(N, sigma)``.
    """
    one_minus_z = FormalSeries([1, -1], K)
    inv = one_minus_z.reciprocal()
    total = FormalSeries([], K)
    for j in range((N - 1) // 2 + 1):
        c = (-1) ** j * binomial(N - 1 - j, j) * 2 ** (N - 1 - 2 * j)
        total = total + FormalSeries.monomial(N - 1 - 2 * j, K, c) * inv ** (N - j)
    return total


def collect_left_side(N: int, K: int) -> FormalSeries:
    """``sum_sigma z^sigma P(N, sigma)(z)`` regrouped by powers of ``z``, through ``z**K``."""
    out = [0] * (K + 1)
    for sigma in range(K + 1):
        p = scaled_deriv_poly(N, sigma)
        for e, c in enumerate(p.coeffs):
            if c and sigma + e <= K:
                out[sigma + e] += c
    return FormalSeries(out, K)


GF_CAP = 200


def pell_gf_check(K: int, s_max: int = 4) -> bool:
    """Generating-function check of the Pell/Chebyshev link, to order ``z**K``.

    For every ``s <= s_max`` and ``N <= K`` this verifies that

    * ``z / (1 - 2z - z^2)^(s+1)`` has ``z**N`` coefficient ``P_N^(s)``, and
    * ``z / (1 - 2tz + z^2)^(s+1)`` at ``t = i`` has ``z**N`` coefficient
      ``i^(N-1) P_N^(s)``,

    where ``P_N^(s)`` comes from the convolution recurrence.
    """
    if K > GF_CAP:
        raise ValueError(f"K={K} exceeds the cap of {GF_CAP}")
    if K < 1:
        return True
    z = FormalSeries.monomial(1, K)
    pell_base = FormalSeries([1, -2, -1], K)
    cheb_base = FormalSeries([1, -2 * I, 1], K)
    for s in range(s_max + 1):
        pell_gf = z * pell_base ** (-(s + 1))
        cheb_gf = z * cheb_base ** (-(s + 1))
        for N in range(1, K + 1):
            expected = convolved_term(PELL, N, s)
            if pell_gf[N] != expected:
                return False
            if cheb_gf[N] != gauss_pow(I, N - 1) * expected:
                return False
    return True


# -- special arguments -----------------------------------------------------

def fib_conv_sum(N: int) -> GaussianRational:
    """``sum_sigma (i/2)^sigma F_N^(sigma)`` in closed form."""
    return gauss_pow(-I, N - 1) * closed_form_rational(N, I / 2, Direction.POS)


def phi_conv_sum(N: int, k: int) -> GaussianRational:
    """Weighted sum of convolved k-sections.

    Even ``k``: ``sum (2/L_k)^sigma Phi_{N,k}^(sigma)``.
    Odd ``k >= 3``: ``sum (-2i/L_k)^sigma Phi_{N,k}^(sigma)``.
    """
    if k == 1:
        raise DomainError("k = 1 gives weight 2 or -2i; the series diverges")
    if k < 1:
        raise ValueError("k must be positive")
    z, phased = chebyshev_point(phi(k))
    value = closed_form_rational(N, z, Direction.NEG)
    if phased:
        value = gauss_pow(-I, N - 1) * value
    return value


def phi_conv_sum_surd(N: int, k: int, branch: int = 1) -> complex:
    """Float square-root form of :func:`phi_conv_sum`."""
    if k < 2:
        raise DomainError("k must be >= 2")
    z, phased = chebyshev_point(phi(k))
    value = closed_form_surd(N, complex(z), Direction.NEG, branch)
    if phased:
        value *= (-1j) ** (N - 1)
    return value


Z0 = complex(1, math.sqrt(15)) / 8


def fib_from_boundary(N: int, eps: float = 1e-14) -> complex:
    """``(-i)^(N-1) (1-z0)^((N+1)/2) sum_sigma z0^sigma P(N, sigma)(z0)`` with ``|z0| = 1/2``.

    The series is summed numerically until the majorant tail is below
    ``eps``; the result approximates the Fibonacci number ``F_N``.
    """
    S = tail_terms_needed(N, Fraction(1, 2), eps)
    total = partial_sum(SeriesQuery(N, Z0, Direction.POS, S))
    root = cmath.sqrt(1 - Z0)
    return (-1j) ** (N - 1) * root ** (N + 1) * total


class MagicValue(NamedTuple):
    series: Fraction
    trig: Fraction


def _magic_trig(N: int) -> Fraction:
    # 2^((N+2)/2) sin((N+1) pi/4) / sin(pi/4), with sines read off the octant
    m = N + 1
    sign = (0, 1, 1, 1, 0, -1, -1, -1)[m % 8]
    if m % 2:
        return Fraction(sign * 2 ** ((m + 1) // 2))
    return Fraction(sign * 2 ** ((m + 2) // 2))


def magic_value(N: int) -> MagicValue:
    """``sum_sigma (1/2)^sigma C_N^(1+sigma)(1/2)`` and its sine form.

    Both entries are exact integers; they must be equal.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    series = closed_form_rational(N + 1, Fraction(1, 2), Direction.POS)
    return MagicValue(series.re, _magic_trig(N))
