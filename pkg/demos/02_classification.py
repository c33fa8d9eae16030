"""
Which parameters carry an operator
==================================

Scan a small grid and compare the predicted dimension with the exact
kernel of the reduced system.
"""
from fractions import Fraction

from sbocalc import brute_force_xi, classify

lams = [Fraction(k) for k in range(-6, 3)] + [Fraction(1, 2)]

for m in (1, 2, 3):
    print(f"m = {m}")
    for a in range(0, 6):
        row = []
        for lam in lams:
            c = classify(lam, lam + a, m)
            k = len(brute_force_xi(lam, a, m))
            assert k == c.dimension
            row.append("#" if k else ".")
        print(f"  a = {a}: " + "".join(row))

# the subcase tag tells which closed form applies
print(classify(-4, 1, 3))
