"""
Comparison with the operator on 1-forms
=======================================

The difference of the m = 1 and m = -1 operators, read through the
identifications of span(u1, u2, u3) with C^3 and of the two line bundles
with 1-forms on the plane, is a constant multiple of the conformally
covariant operator on 1-forms.
"""
from fractions import Fraction

from sbocalc import OneForm3, TriPoly, compare_kkp, kkp_operator
from sbocalc.diffops import kkp_lhs

lam = Fraction(1, 2)
for a in range(4):
    ok, witness = compare_kkp(lam, lam + a, 4)
    print(f"a = {a}: agree = {ok}")

# one 1-form worked out
omega = OneForm3(TriPoly.monomial((1, 0, 2)), None, TriPoly.monomial((1, 1, 1)))
names = ("z", "zbar", "x3")
lhs = kkp_lhs(lam, lam + 2, omega)
rhs = kkp_operator(lam, lam + 2)(omega)
for label, u, v in zip(("dx1", "dx2"), lhs, rhs):
    print(label, ":", u.to_str(names), "=", "2 *", "(" + v.to_str(names) + ")")
