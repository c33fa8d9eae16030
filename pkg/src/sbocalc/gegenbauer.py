"""Renormalized Gegenbauer polynomials and their differential operators.

The renormalization divides the classical Gegenbauer polynomial by
``Gamma(mu + floor((l+1)/2)) / Gamma(mu)``.  The result is a polynomial in
``mu`` for each degree, so it never vanishes identically, even at the
nonpositive integers of ``mu`` where the classical family degenerates.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import I, GaussianRational, as_gaussian, gamma_ratio
from .poly import UniPoly


class NegativeDegreeError(ValueError):
    """A degree that must be nonnegative was negative."""


def gegenbauer_renorm(mu, ell: int) -> UniPoly:
    """Renormalized Gegenbauer polynomial of degree ``ell`` in ``z``.

    Returns the zero polynomial for ``ell < 0``.

    >>> str(gegenbauer_renorm(3, 2).to_str("z"))
    '-1 + 8*z^2'
    """
    if ell < 0:
        return UniPoly()
    mu = as_gaussian(mu)
    half_up = (ell + 1) // 2
    terms = {}
    for k in range(ell // 2 + 1):
        # length ell - k - half_up is >= 0 for k <= ell // 2
        c = gamma_ratio(mu + half_up, ell - k - half_up)
        c = c * Fraction((-1) ** k * 2 ** (ell - 2 * k), factorial(k) * factorial(ell - 2 * k))
        terms[ell - 2 * k] = c
    return UniPoly(terms)


def gegenbauer_imag(mu, ell: int) -> UniPoly:
    """``C~_ell^mu(i t)`` as a polynomial in ``t``."""
    return gegenbauer_renorm(mu, ell).substitute_scale(I)


def gamma_factor(mu, ell: int) -> GaussianRational:
    """1 for odd ``ell``, ``mu + ell/2`` for even ``ell``."""
    if ell < 0:
        raise NegativeDegreeError(f"gamma_factor needs ell >= 0, got {ell}")
    if ell % 2:
        return as_gaussian(1)
    return as_gaussian(mu) + Fraction(ell, 2)


def op_G(mu, ell: int, f: UniPoly) -> UniPoly:
    """Gegenbauer operator ``(1-z^2) f'' - (2mu+1) z f' + ell(ell+2mu) f``."""
    mu = as_gaussian(mu)
    f1 = f.derivative()
    f2 = f1.derivative()
    return f2 - f2.shift(2) - f1.shift(1).scale(2 * mu + 1) + f.scale(ell * (ell + 2 * mu))


def op_S(mu, ell: int, g: UniPoly) -> UniPoly:
    """Imaginary Gegenbauer operator ``-((1+t^2) g'' + (1+2mu) t g' - ell(ell+2mu) g)``."""
    mu = as_gaussian(mu)
    g1 = g.derivative()
    g2 = g1.derivative()
    inner = g2 + g2.shift(2) + g1.shift(1).scale(1 + 2 * mu) - g.scale(ell * (ell + 2 * mu))
    return -inner


def koss_scalar(k: int, ell: int) -> GaussianRational:
    """Factor relating degrees ``ell`` and ``2k - ell`` at ``mu = -k``.

    ``koss_scalar(k, ell) * C~_ell^{-k} == C~_{2k-ell}^{-k}`` for
    ``0 <= ell <= 2k``.
    """
    low = (2 * k - ell + 1) // 2
    return gamma_ratio(-k + low, (ell + 1) // 2 - low)
