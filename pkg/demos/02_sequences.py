"""
Fibonacci, Pell and k-sections from one polynomial family
=========================================================

Convolution powers of Fibonacci-type sequences are values of P(N, s) at
Gaussian rational points: i/2 for Fibonacci, i for Pell, L_k/2 or i L_k/2
for F_{Nk}/F_k.
"""
from chebsum import FIBONACCI, PELL, convolved_term, convolved_via_chebyshev, phi
from chebsum.sequences import chebyshev_point

for kind in (FIBONACCI, PELL, phi(2), phi(3)):
    z, phased = chebyshev_point(kind)
    row = [convolved_term(kind, N, 2) for N in range(1, 9)]
    assert row == [convolved_via_chebyshev(kind, N, 2) for N in range(1, 9)]
    print(f"{str(kind):>10} at z = {z}{' (phased)' if phased else ''}: s=2 row {row}")

# the s-th convolution of Fibonacci numbers, N = 3, is (s+1)(s+4)/2
print([convolved_term(FIBONACCI, 3, s) for s in range(8)])
