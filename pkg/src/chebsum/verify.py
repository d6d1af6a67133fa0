"""Identity-verification suites behind ``chebsum verify``.

Each suite sweeps one family of identities over a bounded range and returns
a :class:`VerifyReport`.  Exact identities are compared with ``==`` on
integers, Fractions or Gaussian rationals; numerical ones record the
tolerance they were held to.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .chebpoly import coefficient_a, scaled_deriv_poly, symbolic_derivative, u_poly
from .continuation import (
    Weight,
    abel_power_sum,
    binom_alternating,
    binom_alternating_piecewise,
    boundary_sum,
    BoundaryPoint,
    euler_power_sum,
    gamma_regularized,
    pell_from_angle,
    pell_regularized,
    scaled_deriv_at_unit,
    vandermonde_sum,
)
from .exactnum import GaussianRational, I, complex_gamma, gauss_pow
from .sequences import (
    FIBONACCI,
    PELL,
    IdentityError,
    base_term,
    chebyshev_point,
    convolved_term,
    convolved_via_chebyshev,
    fib,
    lucas_for,
    phi,
    phi_explicit,
)
from .series import (
    Direction,
    closed_form_rational,
    closed_form_surd,
    collect_left_side,
    expand_closed_form,
    fib_conv_sum,
    fib_from_boundary,
    lemma2_coefficient,
    magic_value,
    partial_sum,
    pell_gf_check,
    phi_conv_sum,
    phi_conv_sum_surd,
    SeriesQuery,
    terms_needed,
)
from .tables import render_closed_form

__all__ = [
    "Bounds",
    "CaseResult",
    "SUITES",
    "VerifyReport",
    "CONVERGENT_POS_POINTS",
    "CONVERGENT_NEG_POINTS",
    "FIB_SUM_EXAMPLES",
    "run",
]

EXACT = "exact"


@dataclass
class CaseResult:
    case: str
    passed: bool
    exactness: str = EXACT
    expected: str | None = None
    actual: str | None = None


@dataclass
class VerifyReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def cases_run(self) -> int:
        return len(self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, actual, exactness: str = EXACT, passed: bool | None = None):
        if passed is None:
            passed = expected == actual
        self.cases.append(
            CaseResult(case, bool(passed), exactness,
                       None if passed else str(expected), None if passed else str(actual))
        )

    def to_dict(self) -> dict:
        tally: dict[str, int] = {}
        for c in self.cases:
            tally[c.exactness] = tally.get(c.exactness, 0) + 1
        return {
            "suite": self.suite,
            "cases_run": self.cases_run,
            "passed": self.ok,
            "seconds": round(self.seconds, 3),
            "exactness": tally,
            "notes": list(self.notes),
            "failures": [
                {"case": c.case, "expected": c.expected, "actual": c.actual, "exactness": c.exactness}
                for c in self.failures
            ],
        }


@dataclass
class Bounds:
    """Optional overrides; ``None`` means each suite uses its own default."""

    n_max: int | None = None
    s_max: int | None = None
    eps: float | None = None
    seed: int = 0

    def n(self, default: int) -> int:
        return default if self.n_max is None else self.n_max

    def s(self, default: int) -> int:
        return default if self.s_max is None else self.s_max

    def tol(self, default) -> Fraction:
        return Fraction(default) if self.eps is None else Fraction(self.eps)


def _close(a: complex, b: complex, rel: float) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b))


def _approx(tol) -> str:
    return f"approx({float(tol):g})"


CONVERGENT_POS_POINTS = (
    GaussianRational(Fraction(1, 2)),
    GaussianRational(Fraction(-1, 2)),
    I / 2,
    -I / 2,
    GaussianRational(Fraction(1, 4), Fraction(1, 4)),
    GaussianRational(Fraction(3, 8)),
)
CONVERGENT_NEG_POINTS = (
    GaussianRational(2),
    GaussianRational(-2),
    2 * I,
    GaussianRational(Fraction(3, 2)),
    GaussianRational(Fraction(3, 2), Fraction(3, 2)),
)

# sum (i/2)^sigma F_N^(sigma) for N = 1..5
FIB_SUM_EXAMPLES = {
    1: Fraction(4, 5) * GaussianRational(1, Fraction(1, 2)),
    2: Fraction(4, 25) * GaussianRational(3, 4),
    3: Fraction(4, 125) * GaussianRational(19, 42),
    4: Fraction(16, 625) * GaussianRational(3, 79),
    5: Fraction(64, 3125) * GaussianRational(-39, Fraction(1159, 8)),
}


def suite_lemma2(b: Bounds) -> VerifyReport:
    """Coefficients of ``P(N, sigma)`` against the binomial expansion of ``(1-z)^-(N-j)``."""
    r = VerifyReport("lemma2")
    for N in range(1, b.n(20) + 1):
        for sigma in range(b.s(60) + 1):
            for j in range((N - 1) // 2 + 1):
                r.check(f"N={N} sigma={sigma} j={j}", lemma2_coefficient(N, sigma, j), coefficient_a(N, sigma, j))
    return r


def suite_lemma3(b: Bounds) -> VerifyReport:
    """Certified partial sums against the rational closed forms, plus formal-series agreement."""
    r = VerifyReport("lemma3")
    eps = b.tol(Fraction(1, 2**40))
    for direction, points in ((Direction.POS, CONVERGENT_POS_POINTS), (Direction.NEG, CONVERGENT_NEG_POINTS)):
        for z in points:
            for N in range(1, b.n(12) + 1):
                S = terms_needed(N, z, direction, eps)
                diff = partial_sum(SeriesQuery(N, z, direction, S)) - closed_form_rational(N, z, direction)
                r.check(f"{direction.value} N={N} z={z} S={S}", "< eps", diff, _approx(eps),
                        passed=diff.norm() < eps * eps)
    for N in range(1, min(b.n(8), 8) + 1):
        K = 40
        r.check(f"formal N={N} K={K}", expand_closed_form(N, K), collect_left_side(N, K))
    return r


def _random_point(rng: random.Random, lo: float, hi: float) -> complex:
    rad = rng.uniform(lo, hi)
    ang = rng.uniform(-math.pi, math.pi)
    return complex(rad * math.cos(ang), rad * math.sin(ang))


def suite_thm4(b: Bounds) -> VerifyReport:
    """Square-root closed forms against rational closed forms, and branch-flip invariance."""
    r = VerifyReport("thm4")
    rng = random.Random(b.seed)
    n_max = b.n(12)
    for direction, lo, hi in ((Direction.POS, 0.05, 0.95), (Direction.NEG, 1.05, 4.0)):
        for k in range(100):
            z = _random_point(rng, lo, hi)
            N = rng.randint(1, n_max)
            surd = closed_form_surd(N, z, direction)
            rational = closed_form_rational(N, z, direction)
            flipped = closed_form_surd(N, z, direction, branch=-1)
            r.check(f"{direction.value} N={N} z={z:.6g}", rational, surd, _approx(1e-10),
                    passed=_close(surd, rational, 1e-10))
            r.check(f"branch {direction.value} N={N} z={z:.6g}", surd, flipped, _approx(1e-12),
                    passed=_close(surd, flipped, 1e-12))
    return r


def suite_cor1(b: Bounds) -> VerifyReport:
    """Weighted sums of convolved Fibonacci numbers at weight ``i/2``."""
    r = VerifyReport("cor1")
    for N, expected in FIB_SUM_EXAMPLES.items():
        r.check(f"example N={N}", expected, fib_conv_sum(N))
    eps = b.tol(1e-9)
    z = I / 2
    for N in range(1, b.n(10) + 1):
        S = terms_needed(N, z, Direction.POS, eps)
        total = sum((gauss_pow(z, s) * convolved_term(FIBONACCI, N, s) for s in range(S + 1)), GaussianRational(0))
        diff = total - fib_conv_sum(N)
        r.check(f"partial N={N} S={S}", "< eps", diff, _approx(eps), passed=diff.norm() < eps * eps)
    return r


def suite_cor2(b: Bounds) -> VerifyReport:
    """Weighted sums of convolved k-sections, exact against truncated sums and float surds."""
    r = VerifyReport("cor2")
    eps = b.tol(1e-9)
    for k in range(2, 9):
        z, phased = chebyshev_point(phi(k))
        weight = 1 / z
        for N in range(1, b.n(6) + 1):
            exact = phi_conv_sum(N, k)
            S = terms_needed(N, z, Direction.NEG, eps)
            total = sum(
                (gauss_pow(weight, s) * convolved_term(phi(k), N, s) for s in range(S + 1)),
                GaussianRational(0),
            )
            diff = total - exact
            r.check(f"partial k={k} N={N} S={S}", "< eps", diff, _approx(eps), passed=diff.norm() < eps * eps)
            surd = phi_conv_sum_surd(N, k)
            r.check(f"surd k={k} N={N}", complex(exact), surd, _approx(1e-10),
                    passed=_close(complex(exact), surd, 1e-10))
            if k % 2 == 0:
                r.check(f"real k={k} N={N}", 0, exact.im)
    return r


def suite_cor3(b: Bounds) -> VerifyReport:
    """Fibonacci numbers from the series at ``z0 = (1 + i sqrt 15)/8``."""
    r = VerifyReport("cor3")
    for N in range(1, b.n(15) + 1):
        value = fib_from_boundary(N)
        r.check(f"N={N}", fib(N), value, _approx(1e-7), passed=abs(value - fib(N)) <= 1e-7)
    return r


def suite_lemma4(b: Bounds) -> VerifyReport:
    """``P(N, s)(+-1)`` and the Vandermonde-type sum."""
    r = VerifyReport("lemma4")
    for N in range(1, b.n(30) + 1):
        for s in range(b.s(30) + 1):
            target = math.comb(N + 2 * s, N - 1)
            r.check(f"vandermonde N={N} s={s}", target, vandermonde_sum(N, s))
            for sign in (1, -1):
                try:
                    value = scaled_deriv_at_unit(N, s, sign)
                except IdentityError as exc:
                    r.check(f"N={N} s={s} sign={sign}", sign ** (N - 1) * target, exc)
                else:
                    r.check(f"N={N} s={s} sign={sign}", sign ** (N - 1) * target, value)
    return r


def suite_eq14(b: Bounds) -> VerifyReport:
    """Alternating binomial sums: closed form at ``-1`` against the sine formula."""
    r = VerifyReport("eq14")
    for N in range(1, b.n(64) + 1):
        neg = binom_alternating(N, Direction.NEG)
        r.check(f"N={N}", binom_alternating_piecewise(N), neg)
        r.check(f"directions N={N}", neg, binom_alternating(N, Direction.POS))
    worked = {1: Fraction(1, 2), 2: Fraction(1, 2), 3: Fraction(1, 4), 4: Fraction(0)}
    for N, v in worked.items():
        r.check(f"worked N={N}", v, binom_alternating(N))
    return r


EULER_EXPECTED = {
    Weight.ALTERNATING: (Fraction(1, 2), Fraction(-1, 4), Fraction(0), Fraction(1, 8)),
    Weight.IMAGINARY: (GaussianRational(Fraction(1, 2), Fraction(1, 2)), GaussianRational(Fraction(-1, 2)),
                       GaussianRational(0, Fraction(-1, 2)), GaussianRational(1)),
}


def suite_euler(b: Bounds) -> VerifyReport:
    """Regularized power sums: exact low orders and an Abel-summation cross-check."""
    r = VerifyReport("euler")
    for weight, values in EULER_EXPECTED.items():
        for p, v in enumerate(values):
            r.check(f"{weight.value} p={p}", v, euler_power_sum(p, weight))
        for p in range(b.n(5) + 1):
            exact = complex(euler_power_sum(p, weight))
            abel = abel_power_sum(p, weight)
            r.check(f"abel {weight.value} p={p}", exact, abel, _approx(1e-4), passed=abs(exact - abel) <= 1e-4)
    return r


def suite_gamma(b: Bounds) -> VerifyReport:
    """Gamma continuation at integers, and the Gamma recurrence on a grid."""
    r = VerifyReport("gamma")
    for N in range(1, b.n(12) + 1):
        expected = math.factorial(N - 1) * binom_alternating(N)
        got = gamma_regularized(N)
        r.check(f"N={N}", float(expected), got, _approx(1e-11),
                passed=abs(got - float(expected)) <= 1e-11 * abs(float(expected)))
    for x in _grid(-4.5, 6.0, 22):
        for y in _grid(-4.0, 4.0, 17):
            z = complex(x, y)
            if _near_pole(z) or _near_pole(z + 1):
                continue
            lhs = complex_gamma(z + 1)
            rhs = z * complex_gamma(z)
            r.check(f"recurrence z={z}", rhs, lhs, _approx(1e-11), passed=_close(lhs, rhs, 1e-11))
    return r


def _grid(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _near_pole(z: complex, tol: float = 1e-6) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < tol


def suite_sequences(b: Bounds) -> VerifyReport:
    """Convolved sequences by recurrence against the Chebyshev-derivative route."""
    r = VerifyReport("sequences")
    for kind in (FIBONACCI, PELL):
        for N in range(1, b.n(20) + 1):
            for s in range(b.s(20) + 1):
                r.check(f"{kind} N={N} s={s}", convolved_term(kind, N, s), _via_cheb(kind, N, s))
    for k in range(1, 9):
        kind = phi(k)
        for N in range(1, min(b.n(15), 15) + 1):
            for s in range(min(b.s(15), 15) + 1):
                r.check(f"{kind} N={N} s={s}", convolved_term(kind, N, s), _via_cheb(kind, N, s))
    for N in range(1, 21):
        for k in range(1, 11):
            expected = fib(N * k) // fib(k)
            r.check(f"phi explicit N={N} k={k}", expected, phi_explicit(N, k))
            r.check(f"phi recurrence N={N} k={k}", expected, base_term(phi(k), N))
    for s in range(41):
        r.check(f"F_2 s={s}", s + 1, convolved_term(FIBONACCI, 2, s))
        r.check(f"F_5 s={s}", (s + 1) * (s + 2) * (s + 4) * (s + 15) // 24, convolved_term(FIBONACCI, 5, s))
        r.check(f"P_5 s={s}", (s + 1) * (s + 2) * (4 * s * s + 40 * s + 87) // 6, convolved_term(PELL, 5, s))
        for k in range(1, 9):
            L = lucas_for(k)
            expected = math.comb(s + 3, 3) * L**3 - (s + 1) * (s + 2) * (-1) ** k * L
            r.check(f"Phi_4 k={k} s={s}", expected, convolved_term(phi(k), 4, s))
    return r


def _via_cheb(kind, N, s):
    try:
        return convolved_via_chebyshev(kind, N, s)
    except IdentityError as exc:
        return exc


def suite_pell(b: Bounds) -> VerifyReport:
    """Regularized Pell sums at ``z = i`` and Pell numbers from ``exp(i pi/3)``."""
    r = VerifyReport("pell")
    expected = {
        1: GaussianRational(Fraction(1, 2), Fraction(1, 2)),
        2: I,
        3: GaussianRational(-1, Fraction(3, 2)),
        4: GaussianRational(-3, 1),
    }
    for N, v in expected.items():
        r.check(f"regularized N={N}", v, pell_regularized(N).value)
    for N in range(1, b.n(10) + 1):
        rv = pell_regularized(N)
        r.check(f"trig N={N}", 0.0, rv.discrepancy, _approx(1e-10), passed=rv.discrepancy <= 1e-10)
        value = pell_from_angle(N)
        target = base_term(PELL, N)
        r.check(f"angle N={N}", target, value, _approx(1e-8), passed=abs(value - target) <= 1e-8)
    for N in range(1, b.n(10) + 1):
        for t, direction in ((Fraction(1), Direction.POS), (Fraction(1), Direction.NEG),
                             (Fraction(1, 2), Direction.POS), (Fraction(1, 2), Direction.NEG)):
            rv = boundary_sum(N, BoundaryPoint(t), direction)
            r.check(f"boundary N={N} t={t} {direction.value}", 0.0, rv.discrepancy, _approx(1e-10),
                    passed=rv.exact and rv.discrepancy <= 1e-10)
    return r


def suite_gf(b: Bounds) -> VerifyReport:
    """Pell generating functions against the convolution recurrence."""
    r = VerifyReport("gf")
    K = b.n(8)
    for s in range(b.s(4) + 1):
        r.check(f"K={K} s={s}", True, pell_gf_check(K, s))
    return r


REFERENCE_FORMS = {
    (1, Direction.POS): "1/(1-z)",
    (3, Direction.POS): "(4z^2+z-1)/(1-z)^3",
    (4, Direction.POS): "4z(2z^2+z-1)/(1-z)^4",
    (1, Direction.NEG): "z/(z-1)",
    (3, Direction.NEG): "z^2(4z^3-z+1)/(z-1)^3",
    (4, Direction.NEG): "4z^4(2z^3-z+1)/(z-1)^4",
}


def suite_tables(b: Bounds) -> VerifyReport:
    """Rendered closed forms against the small-N table entries that are consistent with the series."""
    r = VerifyReport("tables")
    for (N, direction), text in REFERENCE_FORMS.items():
        r.check(f"{direction.value} N={N}", text, render_closed_form(N, direction))
    return r


def suite_gegenbauer(b: Bounds) -> VerifyReport:
    """Coefficient formula for ``P(N, s)`` against repeated differentiation of ``U``."""
    r = VerifyReport("gegenbauer")
    for N in range(1, b.n(25) + 1):
        for s in range(b.s(25) + 1):
            lhs = scaled_deriv_poly(N, s) * (2**s * math.factorial(s))
            rhs = symbolic_derivative(u_poly(N + s - 1), s)
            r.check(f"N={N} s={s}", rhs, lhs)
    return r


def suite_magic(b: Bounds) -> VerifyReport:
    """Gegenbauer sums at argument 1/2 against their trigonometric values."""
    r = VerifyReport("magic")
    r.notes.append("series weight read as (1/2)^sigma, so the sum is the positive-power closed form at z = 1/2")
    for N in range(0, b.n(40)):
        mv = magic_value(N)
        r.check(f"N={N}", mv.trig, mv.series)
    return r


SUITES: dict[str, Callable[[Bounds], VerifyReport]] = {
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "thm4": suite_thm4,
    "cor1": suite_cor1,
    "cor2": suite_cor2,
    "cor3": suite_cor3,
    "lemma4": suite_lemma4,
    "eq14": suite_eq14,
    "euler": suite_euler,
    "gamma": suite_gamma,
    "sequences": suite_sequences,
    "pell": suite_pell,
    "gf": suite_gf,
    "tables": suite_tables,
    "gegenbauer": suite_gegenbauer,
    "magic": suite_magic,
}


def run(name: str, bounds: Bounds | None = None) -> list[VerifyReport]:
    """Run one suite, or every suite for ``name == "all"``."""
    bounds = bounds or Bounds()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(name)
    reports = []
    for n in names:
        start = time.perf_counter()
        report = SUITES[n](bounds)
        report.seconds = time.perf_counter() - start
        reports.append(report)
    return reports
