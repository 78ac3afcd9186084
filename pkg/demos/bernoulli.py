"""
Degenerate Bernoulli numbers of order alpha
===========================================

Two routes to the same polynomials, and their l -> 0 limit.
"""
from fractions import Fraction

from degenstir.bernoulli import bernoulli_closed_form_table, bernoulli_series, classical_bernoulli_order

for alpha in (1, 2, Fraction(1, 2)):
    s = bernoulli_series(alpha, 6)
    c = bernoulli_closed_form_table(alpha, 6)
    print(f"alpha={alpha}: routes agree = {s.values == c.values}")
    for n in range(4):
        print("  ", n, s[n].to_str())

# at l = 0 we get the classical numbers B_n (B_1 = -1/2)
print([str(v) for v in bernoulli_series(1, 8).evaluate(0)])
print([str(v) for v in classical_bernoulli_order(1, 8)])
