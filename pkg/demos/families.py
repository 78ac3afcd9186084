"""
Polynomial families and trigonometric sums
==========================================
"""
import math
from fractions import Fraction

from degenstir import families as fam

for name in fam.FAMILIES:
    print(name, fam.family_build(name, 3, 2).value.to_str())

# a couple of the exact identities
print("S closed forms:", all(fam.s_closed_form_checks(n, r) for n in range(6) for r in range(6)))
print("T closed form:", all(fam.t_closed_form_check(n, r) for n in range(6) for r in range(6)))
print("power sums:", all(fam.power_sum_bridge_check(n, r) for n in range(6) for r in range(1, 6)))

# the first n+1 sums of (k)_{r,l}, tabulated at l = 1/2
print([str(fam.snr_family(n, 2).evaluate(1, Fraction(1, 2))) for n in range(6)])

# cosine and sine sums against their closed forms
for r in range(4):
    rec = fam.trig_record(r, math.pi / 3, Fraction(1, 3))
    print(r, f"{rec['cos_partial']:.12f} {rec['cos_closed']:.12f} err={rec['abs_err']:.1e}")
