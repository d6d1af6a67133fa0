"""Regularized values of the series on the unit circle.

On ``|z| = 1`` neither series converges, but the closed rational form
continues analytically to every boundary point except ``z = 1``.  That
continued value is what this module calls the regularized sum.  At
``z = -1`` and ``z = i`` everything stays inside the Gaussian rationals and
the results are exact.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .chebpoly import eval_exact, eval_float, scaled_deriv_poly, u_poly
from .exactnum import (
    GaussianRational,
    I,
    binomial,
    complex_gamma,
    cospi,
    csinpi,
    gauss_pow,
    sinpi,
)
from .sequences import IdentityError
from .series import (
    Direction,
    DomainError,
    closed_form_rational,
    closed_form_surd,
)

__all__ = [
    "BoundaryPoint",
    "RegularizedValue",
    "SingularPointError",
    "Weight",
    "abel_power_sum",
    "binom_alternating",
    "binom_alternating_piecewise",
    "boundary_sum",
    "boundary_trig_form",
    "euler_power_sum",
    "gamma_regularized",
    "pell_from_angle",
    "pell_regularized",
    "pell_trig_form",
    "scaled_deriv_at_unit",
    "vandermonde_sum",
]


class SingularPointError(DomainError):
    """The boundary point ``z = 1`` has no regularized value."""


@dataclass(frozen=True)
class BoundaryPoint:
    """``z = exp(i*pi*t)`` with ``t`` an exact rational, reduced into ``[0, 2)``."""

    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t) % 2
        if t == 0:
            raise SingularPointError("t = 0 (mod 2) is the singular point z = 1")
        object.__setattr__(self, "t", t)

    @property
    def exact_z(self) -> GaussianRational | None:
        return {Fraction(1, 2): I, Fraction(1): GaussianRational(-1), Fraction(3, 2): -I}.get(self.t)

    @property
    def z(self):
        exact = self.exact_z
        if exact is not None:
            return exact
        t = float(self.t)
        return complex(cospi(t), sinpi(t))

    def __str__(self):
        return f"exp(i*pi*{self.t})"


@dataclass(frozen=True)
class RegularizedValue:
    """A regularized sum together with how it was obtained.

    ``error_bound`` is ``None`` for exact values.  ``discrepancy`` is the
    relative gap to the independent trigonometric form, when one was
    computed.
    """

    value: object
    exact: bool
    provenance: str
    z: object
    error_bound: float | None = None
    discrepancy: float | None = None

    def __complex__(self):
        return complex(self.value)

    def __str__(self):
        return str(self.value) if self.exact else repr(complex(self.value))


def _rel_gap(a: complex, b: complex) -> float:
    # relative for large values, absolute near zero
    return abs(a - b) / max(abs(a), abs(b), 1.0)


def boundary_trig_form(N: int, t, direction=Direction.POS) -> complex:
    """Regularized sum at ``exp(i*pi*t)`` written with sines and exponentials.

    Uses ``1 - exp(i*pi*t) = 2 sin(pi*t/2) exp(i*pi*(t-1)/2)`` for
    ``0 < t < 2``.
    """
    direction = Direction.parse(direction)
    t = float(Fraction(t) % 2) if not isinstance(t, float) else t % 2.0
    if t == 0:
        raise SingularPointError("t = 0 (mod 2) is the singular point z = 1")
    h = 2.0 * sinpi(t / 2)
    sign = -1 if direction is Direction.POS else 1
    prefactor = h ** (-(N + 1) / 2) * cmath.exp(sign * 1j * math.pi * (t - 1) * (N + 1) / 4)
    angle = (3 * t + 1) / 4 if direction is Direction.POS else (5 * t - 1) / 4
    arg = cmath.exp(1j * math.pi * angle) / math.sqrt(h)
    return prefactor * eval_float(u_poly(N - 1), arg)


def boundary_sum(N: int, p: BoundaryPoint, direction=Direction.POS) -> RegularizedValue:
    """Regularized sum of the ``N``-th series at the boundary point ``p``."""
    direction = Direction.parse(direction)
    if not isinstance(p, BoundaryPoint):
        p = BoundaryPoint(p)
    trig = boundary_trig_form(N, p.t, direction)
    label = "positive" if direction is Direction.POS else "negative"
    exact_z = p.exact_z
    if exact_z is not None:
        value = closed_form_rational(N, exact_z, direction)
        return RegularizedValue(
            value,
            True,
            f"rational closed form ({label} powers) continued to z = {exact_z}",
            exact_z,
            discrepancy=_rel_gap(complex(value), trig),
        )
    z = p.z
    value = closed_form_surd(N, z, direction)
    rational = closed_form_rational(N, z, direction)
    gap = max(_rel_gap(value, trig), _rel_gap(value, rational))
    return RegularizedValue(
        value,
        False,
        f"square-root closed form ({label} powers) continued to z = {p}",
        z,
        error_bound=gap * max(abs(value), 1.0),
        discrepancy=gap,
    )


def pell_trig_form(N: int) -> complex:
    """``2^(-(N+1)/4) exp((5-3N) pi i/8) U_{N-1}(2^(-1/4) exp(5 pi i/8))``."""
    arg = 2 ** -0.25 * cmath.exp(5j * math.pi / 8)
    return 2 ** (-(N + 1) / 4) * cmath.exp((5 - 3 * N) * math.pi * 1j / 8) * eval_float(u_poly(N - 1), arg)


def pell_regularized(N: int) -> RegularizedValue:
    """Regularized ``sum_sigma i^sigma P_N^(sigma)`` of convolved Pell numbers."""
    if N < 1:
        raise ValueError("N must be >= 1")
    value = gauss_pow(-I, N - 1) * closed_form_rational(N, I, Direction.POS)
    return RegularizedValue(
        value,
        True,
        "(-i)^(N-1) times the rational closed form at z = i",
        I,
        discrepancy=_rel_gap(complex(value), pell_trig_form(N)),
    )


def pell_from_angle(N: int) -> complex:
    """Pell number ``P_N`` recovered from the regularized sum at ``exp(i*pi/3)``."""
    z = complex(0.5, math.sqrt(3) / 2)
    total = closed_form_surd(N, z, Direction.POS)
    return cmath.exp(-1j * math.pi * (2 * N - 1) / 3) * total


def vandermonde_sum(N: int, s: int) -> int:
    """``sum_{j<N} C(N+s-1-j, N-1-j) C(s+j, j)``; equals ``C(N+2s, N-1)``."""
    return sum(binomial(N + s - 1 - j, N - 1 - j) * binomial(s + j, j) for j in range(N))


def scaled_deriv_at_unit(N: int, s: int, sign: int = 1) -> int:
    """``P(N, s)(+-1)``, cross-checked against ``(+-1)^(N-1) C(N+2s, N-1)``.

    Raises :class:`IdentityError` if evaluation, the binomial closed form
    and the Vandermonde-type sum disagree.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if N < 1 or s < 0:
        raise ValueError("need N >= 1 and s >= 0")
    direct = eval_exact(scaled_deriv_poly(N, s), GaussianRational(sign))
    closed = sign ** (N - 1) * binomial(N + 2 * s, N - 1)
    vdm = vandermonde_sum(N, s)
    if vdm != binomial(N + 2 * s, N - 1):
        raise IdentityError(f"Vandermonde sum mismatch at N={N}, s={s}: {vdm}")
    if direct != closed:
        raise IdentityError(f"P({N},{s})({sign}) = {direct}, expected {closed}")
    return closed


def binom_alternating(N: int, direction=Direction.NEG) -> Fraction:
    """Regularized ``sum_sigma (-1)^sigma C(N+2 sigma, N-1)``.

    Read off the closed form at ``z = -1``; both directions give the same
    weights there and must give the same value.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    value = (-1) ** (N - 1) * closed_form_rational(N, GaussianRational(-1), direction)
    if not value.is_real():
        raise IdentityError(f"non-real alternating binomial sum at N={N}: {value}")
    return value.re


def binom_alternating_piecewise(N: int) -> Fraction:
    """``2^(-N/2) sin(N pi/4)`` in its exact piecewise form."""
    if N % 4 == 0:
        return Fraction(0)
    return Fraction((-1) ** (N // 4), 2 ** ((N + 1) // 2))


class Weight(enum.Enum):
    ALTERNATING = "alt"  # (-1)^sigma
    IMAGINARY = "i"  # i^sigma

    @property
    def point(self) -> GaussianRational:
        return GaussianRational(-1) if self is Weight.ALTERNATING else I

    @classmethod
    def parse(cls, text) -> "Weight":
        if isinstance(text, Weight):
            return text
        key = str(text).strip().lower()
        for w in cls:
            if key in (w.value, w.name.lower()):
                return w
        raise ValueError(f"unknown weight {text!r}")


EULER_CAP = 40


def _rising_over_factorial(m: int) -> list[Fraction]:
    """Coefficients in ``sigma`` of ``C(m + sigma, sigma)``."""
    poly = [Fraction(1)]
    for t in range(1, m + 1):
        # multiply by (sigma + t)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k] += c * t
            nxt[k + 1] += c
        poly = nxt
    fact = math.factorial(m)
    return [c / fact for c in poly]


def _sigma_coefficients(N: int, w: GaussianRational) -> list[GaussianRational]:
    """``P(N, sigma)(w)`` expanded as a polynomial in ``sigma``."""
    out = [GaussianRational(0)] * N
    for j in range((N - 1) // 2 + 1):
        scale = (-1) ** j * binomial(N - 1 - j, j) * 2 ** (N - 1 - 2 * j) * gauss_pow(w, N - 1 - 2 * j)
        for k, c in enumerate(_rising_over_factorial(N - 1 - j)):
            out[k] += scale * c
    return out


@lru_cache(maxsize=None)
def _euler_table(weight: Weight, P: int) -> tuple[GaussianRational, ...]:
    w = weight.point
    values: list[GaussianRational] = []
    for N in range(1, P + 2):
        coeffs = _sigma_coefficients(N, w)
        rhs = closed_form_rational(N, w, Direction.POS)
        for p, e in enumerate(values):
            rhs -= coeffs[p] * e
        values.append(rhs / coeffs[N - 1])
    return tuple(values)


def euler_power_sum(p: int, weight=Weight.ALTERNATING) -> GaussianRational:
    """Regularized ``sum_sigma w^sigma sigma^p`` for ``w = -1`` or ``w = i``.

    The regularized sums for ``N = 1 .. p+1`` form a triangular system in the
    monomial sums, since ``P(N, sigma)(w)`` is a degree ``N-1`` polynomial in
    ``sigma``; it is solved exactly from the top.
    """
    weight = Weight.parse(weight)
    if not 0 <= p <= EULER_CAP:
        raise ValueError(f"p must lie in [0, {EULER_CAP}]")
    return _euler_table(weight, p)[p]


# Abel extrapolation nodes: h = 1 - r
_ABEL_NODES = (Fraction(1, 100),) + tuple(Fraction(k, 40) for k in range(1, 17))


def abel_power_sum(p: int, weight=Weight.ALTERNATING, dps: int = 40) -> complex:
    """Numerical Abel limit of ``sum_sigma (r w)^sigma sigma^p`` as ``r -> 1-``.

    Each ``r`` is summed directly in extended precision and the values are
    extrapolated to ``r = 1`` by polynomial interpolation in ``1 - r``.  This
    does not use any closed form.
    """
    weight = Weight.parse(weight)
    w = complex(weight.point)
    with mpmath.workdps(dps):
        wm = mpmath.mpc(w.real, w.imag)
        tol = mpmath.mpf(10) ** (-dps + 5)
        hs = [mpmath.mpf(h.numerator) / h.denominator for h in _ABEL_NODES]
        vals = []
        for h in hs:
            x = (1 - h) * wm
            total = mpmath.mpc(0)
            xn = mpmath.mpc(1)
            n = 0
            while True:
                term = xn * n**p
                total += term
                if n > p + 5 and abs(term) < tol:
                    break
                n += 1
                xn *= x
            vals.append(total)
        est = mpmath.mpc(0)
        for i, hi in enumerate(hs):
            L = mpmath.mpf(1)
            for j, hj in enumerate(hs):
                if j != i:
                    L *= -hj / (hi - hj)
            est += L * vals[i]
        return complex(est)


def gamma_regularized(z) -> complex:
    """``Gamma(z) 2^(-z/2) sin(z pi/4)``, the continuation in ``N`` of the alternating binomial sums."""
    z = complex(z)
    return complex_gamma(z) * cmath.exp(-z / 2 * math.log(2)) * csinpi(z / 4)
