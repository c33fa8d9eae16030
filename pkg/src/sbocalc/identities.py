"""Batteries of exact identities among Gegenbauer polynomials and operators.

Every ``check_*`` function returns a list of failure descriptions; an empty
list means every instance held exactly.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List

from .diffops import LAPLACE2, DX3, apply_scalar, real_to_complex, script_d_poly
from .exact import I, as_gaussian, rational_floor
from .gegenbauer import (
    gamma_factor,
    gegenbauer_imag,
    gegenbauer_renorm,
    koss_scalar,
    op_G,
    op_S,
)
from .poly import TriPoly, UniPoly

DEFAULT_MUS = [Fraction(x) for x in range(-6, 7)] + [Fraction(1, 2), Fraction(-5, 2), Fraction(2, 3)]
DEFAULT_MAX_ELL = 12


def _t(j: int) -> UniPoly:
    return UniPoly.monomial(j)


def check_annihilation(mus: Iterable = DEFAULT_MUS, max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    """``G`` kills ``C~(z)`` and ``S`` kills ``C~(it)``."""
    bad = []
    for mu in mus:
        for ell in range(max_ell + 1):
            if not op_G(mu, ell, gegenbauer_renorm(mu, ell)).is_zero():
                bad.append(f"G C~ != 0 at mu={mu}, ell={ell}")
            if not op_S(mu, ell, gegenbauer_imag(mu, ell)).is_zero():
                bad.append(f"S C~(it) != 0 at mu={mu}, ell={ell}")
    return bad


def check_s_g_relation(mus: Iterable = DEFAULT_MUS, max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    """``S(f(it))(t) = G(f)(it)`` on monomials ``z^j``."""
    bad = []
    for mu in mus:
        for ell in range(max_ell + 1):
            for j in range(max_ell + 1):
                f = UniPoly.monomial(j)
                lhs = op_S(mu, ell, f.substitute_scale(I))
                rhs = op_G(mu, ell, f).substitute_scale(I)
                if lhs != rhs:
                    bad.append(f"S/G mismatch at mu={mu}, ell={ell}, j={j}")
    return bad


def check_s_shift_identities(mus: Iterable = DEFAULT_MUS, max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    """``S^{mu+1}_l - S^mu_l = 2(l - theta)`` and ``t S^{mu+1}_{l-1} - S^mu_l t = 2 d/dt``."""
    bad = []
    for mu in mus:
        for ell in range(max_ell + 1):
            for j in range(max_ell + 1):
                g = _t(j)
                lhs = op_S(mu + 1, ell, g) - op_S(mu, ell, g)
                if lhs != (g.scale(ell) - g.euler()).scale(2):
                    bad.append(f"first shift identity fails at mu={mu}, ell={ell}, j={j}")
                if ell >= 1:
                    lhs = op_S(mu + 1, ell - 1, g).shift(1) - op_S(mu, ell, g.shift(1))
                    if lhs != g.derivative().scale(2):
                        bad.append(f"second shift identity fails at mu={mu}, ell={ell}, j={j}")
    return bad


def check_derivative_identities(mus: Iterable = DEFAULT_MUS, max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    bad = []
    for mu in mus:
        for ell in range(max_ell + 1):
            c = gegenbauer_imag(mu, ell)
            up = gegenbauer_imag(mu + 1, ell - 1)
            if c.derivative() != up.scale(2 * I * gamma_factor(mu, ell)):
                bad.append(f"derivative identity fails at mu={mu}, ell={ell}")
            if c.euler() - c.scale(ell) != gegenbauer_imag(mu + 1, ell - 2).scale(2):
                bad.append(f"Euler identity fails at mu={mu}, ell={ell}")
    return bad


def check_three_term(mus: Iterable = DEFAULT_MUS, max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    bad = []
    for mu in mus:
        mu = as_gaussian(mu)
        for ell in range(max_ell + 1):
            c = gegenbauer_imag(mu, ell)
            c_up = gegenbauer_imag(mu + 1, ell)
            c_up1 = gegenbauer_imag(mu + 1, ell - 1)
            c_up2 = gegenbauer_imag(mu + 1, ell - 2)
            lhs = c.scale(mu + ell) + c_up2
            if lhs != c_up.scale(mu + rational_floor(Fraction(ell + 1, 2))):
                bad.append(f"first three-term relation fails at mu={mu}, ell={ell}")
            rhs = c_up1.shift(1).scale(I * gamma_factor(mu, ell)) - c.scale(Fraction(ell, 2))
            if c_up2 != rhs:
                bad.append(f"second three-term relation fails at mu={mu}, ell={ell}")
            total = (
                c_up1.shift(1).scale(I)
                - c_up.scale(gamma_factor(mu, ell + 1))
                + c.scale(gamma_factor(mu - Fraction(1, 2), ell + 1))
            )
            if not total.is_zero():
                bad.append(f"third three-term relation fails at mu={mu}, ell={ell}")
    return bad


def check_degree_reflection(mus: Iterable = (), max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    """``C~_l^{-k}`` and ``C~_{2k-l}^{-k}`` agree up to the Gamma-ratio factor.

    Runs over ``0 <= l <= 2k <= max_ell``; ``mus`` is ignored since the
    parameter is pinned to ``-k``.
    """
    bad = []
    for k in range(max_ell // 2 + 1):
        for ell in range(2 * k + 1):
            lhs = gegenbauer_renorm(-k, ell).scale(koss_scalar(k, ell))
            if lhs != gegenbauer_renorm(-k, 2 * k - ell):
                bad.append(f"degree reflection fails at k={k}, ell={ell}")
    return bad


def check_parity(mus: Iterable = DEFAULT_MUS, max_ell: int = DEFAULT_MAX_ELL) -> List[str]:
    bad = []
    for mu in mus:
        for ell in range(max_ell + 1):
            c = gegenbauer_renorm(mu, ell)
            if c.is_zero() or any((e - ell) % 2 for e in c.exponents()):
                bad.append(f"parity fails at mu={mu}, ell={ell}")
            if ell % 2 == 0 and not c.coeff(0):
                bad.append(f"constant term vanishes at mu={mu}, ell={ell}")
    return bad


GEGENBAUER_CHECKS = {
    "annihilation": check_annihilation,
    "s_g_relation": check_s_g_relation,
    "s_shift": check_s_shift_identities,
    "derivative": check_derivative_identities,
    "three_term": check_three_term,
    "degree_reflection": check_degree_reflection,
    "parity": check_parity,
}


# -- operator identities ---------------------------------------------------------

def real_monomials(max_degree: int):
    for deg in range(max_degree + 1):
        for e1 in range(deg, -1, -1):
            for e2 in range(deg - e1, -1, -1):
                yield (e1, e2, deg - e1 - e2)


@lru_cache(maxsize=None)
def _complex_monomial(e) -> TriPoly:
    return real_to_complex(TriPoly.monomial(e))


def _same_on_monomials(lhs: TriPoly, rhs: TriPoly, max_degree: int) -> bool:
    for e in real_monomials(max_degree):
        f = _complex_monomial(e)
        if apply_scalar(lhs, f, restrict=False) != apply_scalar(rhs, f, restrict=False):
            return False
    return True


def check_operator_identities(mus: Iterable = DEFAULT_MUS, max_ell: int = 8) -> List[str]:
    """Three-term relations of the order-``ell`` operators, tested on monomials."""
    bad = []
    D = script_d_poly
    for mu in mus:
        mu = as_gaussian(mu)
        for ell in range(max_ell + 1):
            deg = ell + 2
            lhs = D(mu, ell).scale(mu + ell) - D(mu + 1, ell - 2) * LAPLACE2
            rhs = D(mu + 1, ell).scale(mu + rational_floor(Fraction(ell + 1, 2)))
            if not _same_on_monomials(lhs, rhs, deg):
                bad.append(f"first operator identity fails at mu={mu}, ell={ell}")
            if ell >= 1:
                lhs = D(mu + 1, ell - 2) * LAPLACE2 + (D(mu + 1, ell - 1) * DX3).scale(gamma_factor(mu, ell))
                rhs = D(mu, ell).scale(Fraction(ell, 2))
                if not _same_on_monomials(lhs, rhs, deg):
                    bad.append(f"second operator identity fails at mu={mu}, ell={ell}")
                lhs = (
                    D(mu + 1, ell - 2) * DX3
                    - D(mu + 1, ell - 1).scale(gamma_factor(mu, ell))
                    + D(mu, ell - 1).scale(gamma_factor(mu - Fraction(1, 2), ell))
                )
                if not _same_on_monomials(lhs, TriPoly(), deg):
                    bad.append(f"third operator identity fails at mu={mu}, ell={ell}")
    return bad
