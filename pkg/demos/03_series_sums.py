"""
Summing the two series families
===============================

sum_sigma z^sigma P(N, sigma)(z) converges for |z| < 1, and
sum_sigma z^-sigma P(N, sigma)(z) converges for |z| > 1.  Both have finite
rational closed forms.  A proven tail bound tells us how many terms make the
exact partial sum agree with the closed form to 2^-40.
"""
from fractions import Fraction

from chebsum import (
    Direction,
    I,
    closed_form_rational,
    closed_form_surd,
    convergent_sum,
    fib_conv_sum,
    render_closed_form,
)

for N in range(1, 6):
    print(f"N={N}:  {render_closed_form(N):<28} {render_closed_form(N, Direction.NEG)}")

z = Fraction(3, 8)
result = convergent_sum(5, z)
print(f"\nN=5 at z=3/8: {result.terms} terms, partial sum {float(result.value.re):.15f}")
print(f"closed form            {float(closed_form_rational(5, z).re):.15f}")
print(f"square-root form       {closed_form_surd(5, 0.375).real:.15f}")

# weight i/2 turns the series into weighted sums of convolved Fibonacci numbers
for N in range(1, 6):
    print(f"sum (i/2)^s F_{N}^(s) = {fib_conv_sum(N)}")
print("at z = i/2 itself:", closed_form_rational(3, I / 2))
