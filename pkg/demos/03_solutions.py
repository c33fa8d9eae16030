"""
Closed forms against the nullspace
==================================

At an admissible point the kernel is a line; the closed-form generator
lies on it.
"""
from sbocalc import FParams, brute_force_xi, build_psi, closed_form_solution, m_coeffs
from sbocalc.solver import proportionality

lam, a, m = -4, 5, 3

(kernel,) = brute_force_xi(lam, a, m).basis
closed = closed_form_solution(lam, a, m)
print("kernel:     ", kernel.normalized())
print("closed form:", closed)
print("ratio:      ", proportionality(kernel, closed))

# the symbol built from the triple solves the original system
p = FParams.from_lambda_a(lam, a, m)
psi = build_psi(p, closed)
for s, M in enumerate(m_coeffs(p, psi), 1):
    print(f"M_{s} =", M)
