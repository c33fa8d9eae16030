"""
Renormalized Gegenbauer polynomials
===================================

The renormalized family never vanishes identically, even at the
nonpositive integers where the classical polynomials collapse.
"""
from fractions import Fraction

from sbocalc import gegenbauer_imag, gegenbauer_renorm, op_G, op_S

# the first few members at a generic parameter
mu = Fraction(1, 2)
for ell in range(5):
    print(f"C~_{ell}^{mu}(z) =", gegenbauer_renorm(mu, ell).to_str("z"))

# at mu = -2 the degree-4 polynomial is the constant 1/2
print("C~_4^-2(z) =", gegenbauer_renorm(-2, 4).to_str("z"))

# both differential operators kill their polynomial
print("G C~ =", op_G(mu, 4, gegenbauer_renorm(mu, 4)))
print("S C~(it) =", op_S(mu, 4, gegenbauer_imag(mu, 4)))

# the imaginary version has coefficients in Q(i)
print("C~_3^mu(it) =", gegenbauer_imag(mu, 3))
