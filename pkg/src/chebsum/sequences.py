"""Fibonacci-type sequences, their convolution powers, and Chebyshev cross-checks.

Every family here is generated twice: once from its own recurrence or
convolution, and once by evaluating a scaled Chebyshev derivative at a
Gaussian rational point (``i/2`` for Fibonacci, ``i`` for Pell, ``L_k/2``
or ``i L_k/2`` for the k-sections).  The two routes must agree exactly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .chebpoly import eval_exact, scaled_deriv_poly
from .exactnum import GaussianRational, I, binomial, gauss_pow

__all__ = [
    "ConvolvedId",
    "FIBONACCI",
    "IdentityError",
    "LUCAS",
    "PELL",
    "SequenceKind",
    "Tag",
    "base_term",
    "chebyshev_point",
    "convolved_term",
    "convolved_via_chebyshev",
    "fib",
    "lucas_for",
    "phi",
    "phi_explicit",
]


class IdentityError(ArithmeticError):
    """An identity that must hold exactly came out false."""


class Tag(enum.Enum):
    FIBONACCI = "fib"
    LUCAS = "lucas"
    PELL = "pell"
    PHI = "phi"


@dataclass(frozen=True)
class SequenceKind:
    """One of the recurrent families; ``k`` only matters for the k-section."""

    tag: Tag
    k: int = 1

    def __post_init__(self):
        if self.tag is Tag.PHI:
            if self.k < 1:
                raise ValueError(f"k-section needs k >= 1, got {self.k}")
        elif self.k != 1:
            object.__setattr__(self, "k", 1)

    def __str__(self):
        return f"phi(k={self.k})" if self.tag is Tag.PHI else self.tag.value


FIBONACCI = SequenceKind(Tag.FIBONACCI)
LUCAS = SequenceKind(Tag.LUCAS)
PELL = SequenceKind(Tag.PELL)


def phi(k: int) -> SequenceKind:
    return SequenceKind(Tag.PHI, k)


class ConvolvedId(NamedTuple):
    kind: SequenceKind
    N: int
    s: int


def _recurrence(kind: SequenceKind) -> tuple[int, int, int, int]:
    """``(x1, x2, a, b)`` with ``x_{n+2} = a x_{n+1} + b x_n``."""
    if kind.tag is Tag.FIBONACCI:
        return 1, 1, 1, 1
    if kind.tag is Tag.LUCAS:
        return 1, 3, 1, 1
    if kind.tag is Tag.PELL:
        return 1, 2, 2, 1
    L = lucas_for(kind.k)
    return 1, L, L, -((-1) ** kind.k)


@lru_cache(maxsize=None)
def _terms(kind: SequenceKind, n: int) -> tuple[int, ...]:
    x1, x2, a, b = _recurrence(kind)
    out = [x1, x2]
    while len(out) < n:
        out.append(a * out[-1] + b * out[-2])
    return tuple(out[:n])


def base_term(kind: SequenceKind, N: int) -> int:
    """The ``N``-th term (1-based) of ``kind`` from its linear recurrence."""
    if N < 1:
        raise ValueError(f"sequences are indexed from 1, got N={N}")
    # grow the cache in power-of-two chunks so repeated calls stay cheap
    size = 16
    while size < N:
        size *= 2
    return _terms(kind, size)[N - 1]


def fib(n: int) -> int:
    return base_term(FIBONACCI, n)


def lucas_for(k: int) -> int:
    """Lucas number ``L_k``."""
    if k < 1:
        raise ValueError(f"Lucas numbers are indexed from 1, got k={k}")
    a, b = 1, 3
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def phi_explicit(N: int, k: int) -> int:
    """k-section term written directly as a binomial sum in powers of ``L_k``."""
    if N < 1 or k < 1:
        raise ValueError("need N >= 1 and k >= 1")
    L = lucas_for(k)
    sign = -1 if (k - 1) % 2 else 1
    return sum(
        sign**j * binomial(N - 1 - j, j) * L ** (N - 1 - 2 * j) for j in range((N - 1) // 2 + 1)
    )


@lru_cache(maxsize=None)
def _convolved(kind: SequenceKind, N: int, s: int) -> int:
    if s == 0:
        return base_term(kind, N)
    return sum(base_term(kind, j + 1) * _convolved(kind, N - j, s - 1) for j in range(N))


def convolved_term(kind: SequenceKind, N: int, s: int) -> int:
    """``s``-fold convolution power: ``a_N^(s) = sum_j a_{j+1} a_{N-j}^(s-1)``."""
    if N < 1 or s < 0:
        raise ValueError(f"need N >= 1 and s >= 0, got N={N}, s={s}")
    # fill bottom-up so the recursion depth stays at one level per order
    for order in range(s):
        for n in range(1, N + 1):
            _convolved(kind, n, order)
    return _convolved(kind, N, s)


def chebyshev_point(kind: SequenceKind) -> tuple[GaussianRational, bool]:
    """Evaluation point and whether the ``(-i)^(N-1)`` phase applies."""
    if kind.tag is Tag.FIBONACCI:
        return I / 2, True
    if kind.tag is Tag.PELL:
        return I, True
    if kind.tag is Tag.PHI:
        L = lucas_for(kind.k)
        if kind.k % 2:
            return I * Fraction(L, 2), True
        return GaussianRational(Fraction(L, 2)), False
    raise ValueError(f"no Chebyshev representation for {kind}")


def convolved_via_chebyshev(kind: SequenceKind, N: int, s: int) -> int:
    """Same number as :func:`convolved_term`, read off ``P(N, s)`` at a special point.

    Raises :class:`IdentityError` if the exact value is not a real integer.
    """
    z, phased = chebyshev_point(kind)
    value = eval_exact(scaled_deriv_poly(N, s), z)
    if phased:
        value = gauss_pow(-I, N - 1) * value
    if not value.is_integer():
        raise IdentityError(f"{kind} N={N} s={s}: Chebyshev route gave non-integer {value}")
    return value.re.numerator
