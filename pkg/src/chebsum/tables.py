"""Closed forms of the two series families as printable rational functions."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .chebpoly import IntPolynomial, render_poly
from .exactnum import to_gaussian
from .series import Direction, DomainError, closed_form_polynomials, closed_form_rational

__all__ = ["TableSpec", "render_closed_form", "table_rows"]


def _factor_display(num: IntPolynomial) -> str:
    """``content * z^m * (primitive part)``, the way the sums are usually printed."""
    coeffs = num.coeffs
    if not coeffs:
        return "0"
    low = next(k for k, c in enumerate(coeffs) if c)
    content = 0
    for c in coeffs:
        content = math.gcd(content, c)
    if coeffs[-1] < 0:
        content = -content
    prim = [c // content for c in coeffs[low:]]
    prefix = {1: "", -1: "-"}.get(content, str(content))
    if low == 1:
        prefix += "z"
    elif low > 1:
        prefix += f"z^{low}"
    rest = render_poly(prim)
    if len([c for c in prim if c]) == 1:
        # prim is the constant 1
        return prefix if prefix not in ("", "-") else prefix + "1"
    if not prefix:
        return f"({rest})"
    return f"{prefix}({rest})"


def render_closed_form(N: int, direction=Direction.POS) -> str:
    """Canonical text of the ``N``-th closed form.

    Numerator: integer content and power of ``z`` pulled out, remaining
    polynomial in descending degree.  Denominator: ``(1-z)^m`` for positive
    powers, ``(z-1)^m`` for negative powers.
    """
    direction = Direction.parse(direction)
    num, m = closed_form_polynomials(N, direction)
    base = "(1-z)" if direction is Direction.POS else "(z-1)"
    den = base if m == 1 else f"{base}^{m}"
    return f"{_factor_display(num)}/{den}"


@dataclass(frozen=True)
class TableSpec:
    """Table 1 holds positive powers (``|z| < 1``), table 2 negative powers (``|z| > 1``)."""

    table: int
    n_max: int
    z_samples: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.table not in (1, 2):
            raise ValueError("table must be 1 or 2")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        samples = tuple(to_gaussian(z) for z in self.z_samples)
        for z in samples:
            m2 = z.norm()
            if self.table == 1 and not m2 < 1:
                raise DomainError(f"table 1 samples need |z| < 1, got {z}")
            if self.table == 2 and not m2 > 1:
                raise DomainError(f"table 2 samples need |z| > 1, got {z}")
        object.__setattr__(self, "z_samples", samples)

    @property
    def direction(self) -> Direction:
        return Direction.POS if self.table == 1 else Direction.NEG


def table_rows(spec: TableSpec) -> list[dict]:
    """One row per ``N``: canonical closed form and exact values at the samples."""
    rows = []
    for N in range(1, spec.n_max + 1):
        row = {"N": N, "sum": render_closed_form(N, spec.direction)}
        for z in spec.z_samples:
            row[f"z={z}"] = str(closed_form_rational(N, z, spec.direction))
        rows.append(row)
    return rows
