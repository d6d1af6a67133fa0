"""Exact scalars and a few numeric primitives.

Rationals are plain :class:`fractions.Fraction`; :class:`GaussianRational`
adds an imaginary part on top of them.  The complex Gamma function lives here
too because it is the only transcendental routine the rest of the package
needs.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "Fraction",
    "GaussianRational",
    "GammaPoleError",
    "I",
    "binomial",
    "complex_gamma",
    "cospi",
    "csinpi",
    "gauss_arith",
    "gauss_pow",
    "parse_number",
    "sinpi",
    "to_gaussian",
]

RationalLike = Union[int, Fraction]


class GammaPoleError(ValueError):
    """Raised when Gamma is requested too close to a nonpositive integer."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient ``C(n, k)`` with ``C(n, k) = 0`` outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial: upper index must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class GaussianRational:
    """A complex number ``re + im*i`` with both parts exact rationals.

    Instances are immutable and hashable.  Ints and Fractions mix in freely;
    Python floats and complexes do not, so exact results never pick up
    rounding by accident.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @classmethod
    def _coerce(cls, other) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """``|self|**2``, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        if o.im == 0:
            return GaussianRational(self.re / o.re, self.im / o.re)
        n = o.norm()
        c = o.conjugate()
        return GaussianRational(
            (self.re * c.re - self.im * c.im) / n, (self.re * c.im + self.im * c.re) / n
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return gauss_pow(self, e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}*i"
        if self.re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{self.re}{sign}{imag}"


I = GaussianRational(0, 1)


def to_gaussian(x) -> GaussianRational:
    """Lift an int, Fraction or GaussianRational into the Gaussian rationals."""
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(_as_fraction(x), 0)


def gauss_arith(a, b, op: str) -> GaussianRational:
    """Apply ``op`` (one of add, sub, mul, div) to two Gaussian rationals."""
    a, b = to_gaussian(a), to_gaussian(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def gauss_pow(a, e: int) -> GaussianRational:
    """Integer power by repeated squaring; negative powers go through the inverse."""
    a = to_gaussian(a)
    if e < 0:
        if a.is_zero():
            raise ZeroDivisionError("zero raised to a negative power")
        a, e = GaussianRational(1) / a, -e
    result = GaussianRational(1)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


# -- literal parsing -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+)|(\d+)|(.))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        flt, integer, ch = m.groups()
        if flt is not None:
            out.append(("float", float(flt)))
        elif integer is not None:
            out.append(("int", int(integer)))
        elif ch is not None and not ch.isspace():
            out.append(("op", ch))
        pos = m.end()
    return out


class _Parser:
    """Recursive-descent reader for literals like ``(3/2)+(1/4)i`` or ``i/2``.

    Grammar (juxtaposition before ``i`` or ``(`` binds like multiplication)::

        expr   := term (('+'|'-') term)*
        term   := unary (('*'|'/') unary | ('i'|'(' expr ')'))*
        unary  := ('+'|'-') unary | atom
        atom   := INT | FLOAT | 'i' | '(' expr ')'
    """

    def __init__(self, tokens, exact: bool):
        self.tokens = tokens
        self.pos = 0
        self.exact = exact

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def unit(self, value):
        if self.exact:
            return GaussianRational(value) if not isinstance(value, GaussianRational) else value
        return complex(value)

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind, tok = self.peek()
            if (kind, tok) in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                value = value * rhs if tok == "*" else value / rhs
            elif kind == "op" and tok in ("i", "("):
                # implicit product only before i or a group: 3i, (3/4)i, 2(1+i)
                value = value * self.atom()
            else:
                return value

    def unary(self):
        kind, tok = self.peek()
        if (kind, tok) == ("op", "-"):
            self.take()
            return -self.unary()
        if (kind, tok) == ("op", "+"):
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind, tok = self.take()
        if kind == "int":
            return self.unit(tok)
        if kind == "float":
            return complex(tok)
        if (kind, tok) == ("op", "i"):
            return I if self.exact else 1j
        if (kind, tok) == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return value
        raise ValueError(f"unexpected token {tok!r}")


def parse_number(text: str) -> "GaussianRational | complex":
    """Parse an exact literal into a GaussianRational, or a float literal into complex.

    A literal is float iff it contains a decimal point or an exponent
    anywhere; otherwise every part is read exactly.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty number literal")
    has_float = any(kind == "float" for kind, _ in tokens)
    return _Parser(tokens, exact=not has_float).parse()


# -- Gamma -----------------------------------------------------------------

def sinpi(x: float) -> float:
    """``sin(pi*x)`` with exact zeros at integers."""
    x = math.fmod(x, 2.0)
    if x < 0:
        x += 2.0
    # x in [0, 2): fold onto [-1/4, 1/4] around the nearest quarter
    if x > 1.0:
        return -sinpi(x - 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    if x <= 0.25:
        return math.sin(math.pi * x)
    if x <= 0.75:
        return math.cos(math.pi * (x - 0.5))
    return math.sin(math.pi * (1.0 - x))


def cospi(x: float) -> float:
    """``cos(pi*x)`` with exact zeros at half-integers."""
    return sinpi(x + 0.5)


def csinpi(z: complex) -> complex:
    """``sin(pi*z)`` for complex ``z``, exact zero at real integers."""
    x, y = z.real, z.imag
    return complex(sinpi(x) * math.cosh(math.pi * y), cospi(x) * math.sinh(math.pi * y))


# g = 7, n = 9 Lanczos coefficients
_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_POLE_TOL = 1e-8


def complex_gamma(z: complex) -> complex:
    """Gamma function for complex arguments.

    Lanczos approximation on ``re(z) >= 1/2`` and the reflection formula
    below that.  Raises :class:`GammaPoleError` within 1e-8 of a pole.
    """
    z = complex(z)
    if z.real < 0.5:
        n = round(z.real)
        if n <= 0 and abs(z - n) < _POLE_TOL:
            raise GammaPoleError(f"Gamma has a pole at {n}")
        return math.pi / (csinpi(z) * complex_gamma(1.0 - z))
    z -= 1.0
    acc = _LANCZOS[0]
    for k in range(1, len(_LANCZOS)):
        acc += _LANCZOS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc
