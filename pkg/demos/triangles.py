"""
Degenerate Stirling triangles
=============================

Build the triangle three independent ways and look at a few rows.
"""
from fractions import Fraction

from degenstir.stirling import first_mismatch, triangle

# each entry is a polynomial in l with rational coefficients
rec = triangle(8, "recurrence")
for n in range(5):
    print(n, [e.to_str() for e in rec.row(n)])

# the other two constructions give identical entries
print("mismatch vs Euler sum:", first_mismatch(rec, triangle(8, "euler-sum")))
print("mismatch vs EGF:", first_mismatch(rec, triangle(8, "egf")))

# l = 0 is the classical triangle, l = 1 collapses to the identity matrix
print("l=0 row 6:", [str(v) for v in rec.evaluate(0)[6]])
print("l=1 row 6:", [str(v) for v in rec.evaluate(1)[6]])
print("l=1/2 row 4:", [str(v) for v in rec.evaluate(Fraction(1, 2))[4]])

print(rec.to_markdown(Fraction(1, 3)))
