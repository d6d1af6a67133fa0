"""
Scaled derivatives of Chebyshev U polynomials
=============================================

Differentiate U_{N+s-1} s times and divide by 2^s s!.  The result always has
degree N - 1 and integer coefficients, and it is the Gegenbauer polynomial
C_{N-1}^{(s+1)}.
"""
import math

from chebsum import gegenbauer_poly, scaled_deriv_poly, u_poly
from chebsum.chebpoly import symbolic_derivative

for n in range(6):
    print(f"U_{n}(z) = {u_poly(n)}")

# the coefficient formula against brute-force differentiation
N = 4
for s in range(5):
    p = scaled_deriv_poly(N, s)
    brute = symbolic_derivative(u_poly(N + s - 1), s)
    assert p * (2**s * math.factorial(s)) == brute
    print(f"P({N}, {s}) = {p}")

print("C_3^(3) =", gegenbauer_poly(3, 3), " (same as P(4, 2))")
