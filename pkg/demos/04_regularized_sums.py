"""
Divergent sums on the unit circle
=================================

On |z| = 1 the series diverge, but the closed form continues to every
boundary point except z = 1.  At z = -1 that gives exact values for
alternating sums, and solving a triangular system gives Euler's classic
regularized power sums.  An Abel-summation computation checks them without
using any closed form.
"""
import math
from fractions import Fraction

from chebsum import (
    BoundaryPoint,
    Weight,
    abel_power_sum,
    binom_alternating,
    boundary_sum,
    euler_power_sum,
    gamma_regularized,
    pell_regularized,
)

print("1 - 1 + 1 - ...       =", boundary_sum(1, BoundaryPoint(1)).value)
for p in range(6):
    exact = euler_power_sum(p)
    print(f"sum (-1)^n n^{p} = {str(exact):>6}   Abel: {abel_power_sum(p).real:+.12f}")
for p in range(4):
    print(f"sum i^n n^{p} = {euler_power_sum(p, Weight.IMAGINARY)}")

print("\nregularized Pell sums at z = i:", [str(pell_regularized(N).value) for N in range(1, 5)])

# (N-1)! times the alternating sum continues to Gamma(z) 2^(-z/2) sin(z pi/4)
print("\nsum (-1)^s C(N+2s, N-1), then (N-1)! times it, then the Gamma form:")
for N in range(1, 9):
    b = binom_alternating(N)
    print(f"  N={N}: {str(b):>6}   {str(math.factorial(N - 1) * b):>6}   {gamma_regularized(N).real:+.6f}")
print("  N=2.5:", gamma_regularized(2.5))

rv = boundary_sum(3, BoundaryPoint(Fraction(1, 3)))
print(f"\nN=3 at exp(i pi/3): {complex(rv):.12f}  ({rv.provenance})")
