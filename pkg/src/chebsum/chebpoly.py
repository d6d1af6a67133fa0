"""Chebyshev polynomials of the second kind and their order-coupled derivatives.

The central object is the scaled derivative

    P(N, s)(z) = U_{N+s-1}^{(s)}(z) / (2**s * s!)

which always has degree ``N - 1`` and integer coefficients.  It is built
directly from a closed coefficient formula; :func:`symbolic_derivative` of
:func:`u_poly` is kept around as an independent check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactnum import GaussianRational, binomial, to_gaussian

__all__ = [
    "IntPolynomial",
    "ScaledDerivativeId",
    "coefficient_a",
    "eval_exact",
    "eval_float",
    "gegenbauer_poly",
    "scaled_deriv_poly",
    "symbolic_derivative",
    "u_poly",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[k]`` multiplies ``z**k``.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPolynomial":
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += v
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        result = IntPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def reflect(self) -> "IntPolynomial":
        """The polynomial ``p(-z)``."""
        return IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def __call__(self, z):
        if isinstance(z, (complex, float)):
            return eval_float(self, z)
        return eval_exact(self, z)

    def __str__(self):
        return render_poly(self.coeffs)


def render_poly(coeffs: Sequence[int], var: str = "z") -> str:
    """Descending-degree ASCII rendering, e.g. ``16z^4-12z^2+1``."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + ("" if k == 1 else f"^{k}")
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


@lru_cache(maxsize=None)
def _u_coeffs(n: int) -> tuple[int, ...]:
    c = [0] * (n + 1)
    for j in range(n // 2 + 1):
        c[n - 2 * j] = (-1) ** j * binomial(n - j, j) * 2 ** (n - 2 * j)
    return tuple(c)


def u_poly(N: int) -> IntPolynomial:
    """Chebyshev polynomial of the second kind ``U_N`` for any integer ``N``.

    Negative indices follow ``U_{-N} = -U_{N-2}``, which makes ``U_{-1} = 0``.
    """
    if N >= 0:
        return IntPolynomial(_u_coeffs(N))
    if N == -1:
        return IntPolynomial(())
    return -u_poly(-N - 2)


def coefficient_a(N: int, s: int, j: int) -> int:
    """Magnitude of the ``z**(N-1-2j)`` coefficient of ``P(N, s)``."""
    return binomial(N - 1 + s - j, j) * binomial(N - 1 + s - 2 * j, s) * 2 ** (N - 1 - 2 * j)


@dataclass(frozen=True)
class ScaledDerivativeId:
    N: int
    s: int

    def __post_init__(self):
        if self.N < 1 or self.s < 0:
            raise ValueError(f"need N >= 1 and s >= 0, got N={self.N}, s={self.s}")


@lru_cache(maxsize=4096)
def _scaled_coeffs(N: int, s: int) -> tuple[int, ...]:
    c = [0] * N
    for j in range((N - 1) // 2 + 1):
        c[N - 1 - 2 * j] = (-1) ** j * coefficient_a(N, s, j)
    return tuple(c)


def scaled_deriv_poly(N, s: int | None = None) -> IntPolynomial:
    """``U_{N+s-1}^{(s)} / (2**s s!)`` as an integer polynomial of degree ``N-1``.

    Accepts either ``(N, s)`` or a :class:`ScaledDerivativeId`.
    """
    if isinstance(N, ScaledDerivativeId):
        N, s = N.N, N.s
    ScaledDerivativeId(N, s)
    return IntPolynomial(_scaled_coeffs(N, s))


def symbolic_derivative(p: IntPolynomial, s: int = 1) -> IntPolynomial:
    """The ``s``-fold formal derivative, by the power rule."""
    if s < 0:
        raise ValueError("derivative order must be nonnegative")
    c = list(p.coeffs)
    for _ in range(s):
        c = [k * c[k] for k in range(1, len(c))]
    return IntPolynomial(tuple(c))


def gegenbauer_poly(n: int, alpha: int) -> IntPolynomial:
    """Gegenbauer polynomial ``C_n^{(alpha)}`` for integer ``alpha >= 1``."""
    if n < 0:
        raise ValueError("Gegenbauer degree must be nonnegative")
    if alpha < 1:
        raise ValueError("only integer alpha >= 1 is supported")
    return scaled_deriv_poly(n + 1, alpha - 1)


def eval_exact(p: IntPolynomial, z) -> GaussianRational:
    """Evaluate ``p`` at a Gaussian rational without rounding.

    Writes ``z = (a + b i)/d`` and runs Horner over Gaussian integers, so
    only one rational division happens at the end.
    """
    z = to_gaussian(z)
    if p.is_zero():
        return GaussianRational(0)
    d = math.lcm(z.re.denominator, z.im.denominator)
    a = z.re.numerator * (d // z.re.denominator)
    b = z.im.numerator * (d // z.im.denominator)
    n = p.degree
    # accumulate sum c_k (a+bi)^k d^(n-k)
    acc_re, acc_im = 0, 0
    dpow = 1
    for k in range(n, -1, -1):
        acc_re, acc_im = acc_re * a - acc_im * b, acc_re * b + acc_im * a
        acc_re += p.coeffs[k] * dpow
        dpow *= d
    scale = d ** n
    return GaussianRational(Fraction(acc_re, scale), Fraction(acc_im, scale))


def eval_float(p: IntPolynomial, z: complex) -> complex:
    """Horner evaluation in complex double precision."""
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc
