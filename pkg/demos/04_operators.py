"""
From symbols to operators
=========================

Turn the solution symbol into a differential operator and compare with
the closed-form operator, then apply it to a polynomial section.
"""
from sbocalc import PolySection, TriPoly, apply, emit_operator, symbol_inverse
from sbocalc.diffops import dual_operator
from sbocalc.solver import solution_psi

lam, nu, m = -4, 1, 3
D = emit_operator(lam, nu, m)
print(D.to_text())
print(D.to_latex())

psi = solution_psi(lam, nu - lam, m)
print("inverse symbol agrees:", symbol_inverse(psi, m) == D)
print("m -> -m by duality:   ", dual_operator(D) == emit_operator(lam, nu, -m))

# sections are polynomials in (z, zbar, x3)
z, zbar, x3 = TriPoly.var(1), TriPoly.var(2), TriPoly.var(3)
F = PolySection((z * zbar ** 3 * x3, zbar ** 3 * x3 ** 2, zbar ** 4 * x3))
print("D F =", apply(D, F).to_str(("z", "zbar", "x3")))
