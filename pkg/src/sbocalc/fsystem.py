"""The F-system for vector-valued symmetry breaking operators.

Step 1 reduces the unknown symbol ``psi`` to a triple of one-variable
polynomials ``(g_lo, g_mid, g_hi)`` via harmonic generators and the
T-saturation map.  Step 2 applies the Fourier-transformed action of one
nilpotent generator and collects the vector coefficients ``M_1, M_2, M_3``,
or, equivalently, the six ordinary differential expressions ``L_1..L_6``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import I, GaussianRational, as_gaussian
from .gegenbauer import op_S
from .poly import (
    ParityError,
    ParityPoly,
    TriPoly,
    UniPoly,
    VecTriPoly,
    euler_operator,
    laplacian3,
)


class ZeroMError(ValueError):
    """``m = 0`` is outside the scope of this package."""


def _check_m(m: int) -> None:
    if m == 0:
        raise ZeroMError("m = 0 is not covered (it is the scalar-valued branching case)")


@dataclass(frozen=True)
class FParams:
    """Parameters ``(lambda, nu, m)`` together with ``a = nu - lambda``."""

    lam: GaussianRational
    nu: GaussianRational
    m: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "lam", as_gaussian(self.lam))
        object.__setattr__(self, "nu", as_gaussian(self.nu))
        _check_m(self.m)
        if self.nu - self.lam != self.a:
            raise ValueError(f"nu - lambda = {self.nu - self.lam} differs from a = {self.a}")

    @classmethod
    def from_lambda_a(cls, lam, a: int, m: int) -> "FParams":
        lam = as_gaussian(lam)
        return cls(lam, lam + a, m, a)


class GeneratorTriple:
    """The unknowns ``(g_{|m|-1}, g_{|m|}, g_{|m|+1})`` of the reduced system.

    Bounds are ``a-|m|+1``, ``a-|m|`` and ``a-|m|-1``; plain
    :class:`UniPoly` inputs are validated against them.
    """

    __slots__ = ("m", "a", "g_lo", "g_mid", "g_hi")

    def __init__(self, m: int, a: int, g_lo, g_mid, g_hi):
        _check_m(m)
        p = abs(m)
        self.m = m
        self.a = a
        self.g_lo = _as_parity(a - p + 1, g_lo)
        self.g_mid = _as_parity(a - p, g_mid)
        self.g_hi = _as_parity(a - p - 1, g_hi)

    @property
    def polys(self):
        return (self.g_lo.body, self.g_mid.body, self.g_hi.body)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.polys)

    def coefficients(self):
        """Coefficient vector in the fixed order used for normalization."""
        out = []
        for g in (self.g_lo, self.g_mid, self.g_hi):
            out.extend(g.body.coeff(e) for e in g.basis_exponents())
        return out

    def scale(self, c) -> "GeneratorTriple":
        return GeneratorTriple(self.m, self.a, *(g.scale(c) for g in self.polys))

    def normalized(self) -> "GeneratorTriple":
        """Scale so that the first nonzero coefficient equals 1."""
        for c in self.coefficients():
            if c:
                return self.scale(c.inverse())
        return self

    def __eq__(self, other):
        if not isinstance(other, GeneratorTriple):
            return NotImplemented
        return (self.m, self.a, self.polys) == (other.m, other.a, other.polys)

    def __hash__(self):
        return hash((self.m, self.a, self.polys))

    def __repr__(self):
        lo, mid, hi = (g.to_str() for g in self.polys)
        return f"GeneratorTriple(m={self.m}, a={self.a}, ({lo}), ({mid}), ({hi}))"


def _as_parity(bound: int, g) -> ParityPoly:
    if isinstance(g, ParityPoly):
        if g.bound != bound:
            raise ParityError(f"expected bound {bound}, got {g.bound}")
        return g
    if g is None:
        g = UniPoly()
    elif not isinstance(g, UniPoly):
        g = UniPoly.constant(g)
    return ParityPoly(bound, g)


# -- Step 1 -----------------------------------------------------------------

def index_set_K(m: int) -> set:
    _check_m(m)
    return {abs(m - 1), abs(m), abs(m + 1)}


@lru_cache(maxsize=None)
def _linear_power(sign: int, k: int) -> TriPoly:
    """``(zeta1 + sign*i*zeta2)**k``."""
    return TriPoly({(1, 0, 0): 1, (0, 1, 0): I * sign}) ** k


def plus_power(k: int) -> TriPoly:
    return _linear_power(1, k)


def minus_power(k: int) -> TriPoly:
    return _linear_power(-1, k)


def harmonic_generator(k: int, m: int) -> VecTriPoly:
    """The generator of the ``k``-th harmonic summand for the character ``m``."""
    if k not in index_set_K(m):
        raise IndexError(f"k = {k} is not in K({m}) = {sorted(index_set_K(m))}")
    comps = [TriPoly(), TriPoly(), TriPoly()]
    if m > 0:
        comps[k - m + 1] = plus_power(k)
    else:
        comps[-m - k + 1] = minus_power(k)
    return VecTriPoly(comps)


@lru_cache(maxsize=None)
def _q2_power(j: int) -> TriPoly:
    return TriPoly({(2, 0, 0): 1, (0, 2, 0): 1}) ** j


@lru_cache(maxsize=None)
def _t_monomial(b: int, e: int) -> TriPoly:
    return _q2_power((b - e) // 2).mul_monomial((0, 0, e))


def t_saturate(b: int, g) -> TriPoly:
    """Homogeneous polynomial of degree ``b``: ``t^(b-2j) -> zeta3^(b-2j) Q2^j``.

    ``g`` may be a :class:`ParityPoly` or a :class:`UniPoly`; either way it
    must lie in the parity space of bound ``b``.
    """
    body = g.body if isinstance(g, ParityPoly) else g
    out = TriPoly()
    for e, c in body.items():
        if e > b or (b - e) % 2:
            raise ParityError(f"t^{e} cannot be saturated at degree {b}")
        out = out + _t_monomial(b, e).scale(c)
    return out


def build_psi(p: FParams, triple: GeneratorTriple) -> VecTriPoly:
    """Assemble the symbol ``psi`` from a generator triple."""
    m, a = p.m, p.a
    if triple.m != m or triple.a != a:
        raise ValueError("triple does not match the parameters")
    q = abs(m)
    parts = (
        (q - 1, triple.g_lo.body),
        (q, triple.g_mid.body),
        (q + 1, triple.g_hi.body),
    )
    comps = [TriPoly(), TriPoly(), TriPoly()]
    for k, g in parts:
        if g.is_zero():
            continue
        piece = t_saturate(a - k, g)
        if m > 0:
            comps[k - q + 1] = piece * plus_power(k)
        else:
            comps[q + 1 - k] = piece * minus_power(k)
    return VecTriPoly(comps)


# -- Step 2 -----------------------------------------------------------------

def hat_dpi_scalar(lam, p: TriPoly) -> TriPoly:
    """``(2 lambda + 2 E) d/dzeta1 p - zeta1 * Laplacian p``."""
    lam = as_gaussian(lam)
    d1 = p.derivative(1)
    return d1.scale(2 * lam) + euler_operator(d1).scale(2) - laplacian3(p).mul_monomial((1, 0, 0))


def m_coeffs(p: FParams, psi: VecTriPoly):
    """Vector coefficients ``(M_1, M_2, M_3)`` of the transformed operator on ``psi``."""
    lam = p.lam
    s1, s2, s3 = psi.components
    m1 = hat_dpi_scalar(lam, s1) - s1.derivative(2).scale(2 * I) + s2.derivative(3).scale(2)
    m2 = hat_dpi_scalar(lam, s2) - s1.derivative(3) + s3.derivative(3)
    m3 = hat_dpi_scalar(lam, s3) - s2.derivative(3).scale(2) + s3.derivative(2).scale(2 * I)
    return m1, m2, m3


def l_operators(p: FParams, f0: UniPoly, f1: UniPoly, f2: UniPoly):
    """The six expressions ``L_1 .. L_6`` of the reduced ODE system.

    They are written for ``m >= 1``.  For ``m <= -1`` the same expressions at
    ``|m|`` are evaluated on ``(f0, -f1, f2)``, which is what the duality
    between the two signs of ``m`` dictates.
    """
    lam, a, m = p.lam, p.a, p.m
    if m < 0:
        m, f1 = -m, -f1
    lam1 = lam - 1
    k = m * (lam + a - 1)
    L1 = op_S(lam, a + m - 1, f0)
    L2 = op_S(lam, a - m - 1, f2)
    L3 = op_S(lam1, a + m, f1) - f0.derivative().scale(2)
    L4 = op_S(lam1, a - m, f1) + f2.derivative().scale(2)
    L5 = f0.scale(-k + lam1) + f0.euler() + f1.derivative()
    L6 = f2.scale(k + lam1) + f2.euler() - f1.derivative()
    return L1, L2, L3, L4, L5, L6


def l_operators_triple(p: FParams, triple: GeneratorTriple):
    return l_operators(p, *triple.polys)


# -- explicit T-saturated form of M_s (independent reassembly) ----------------

def _t_checked(b: int, g: UniPoly) -> TriPoly:
    """T-saturation allowing a negative bound only for a vanishing argument."""
    if b < 0:
        if not g.is_zero():
            raise ParityError(f"nonzero argument saturated at negative degree {b}")
        return TriPoly()
    return t_saturate(b, g)


_Z1SQ = TriPoly({(2, 0, 0): 1})
_Z2SQ = TriPoly({(0, 2, 0): 1})
_Z1Z2 = TriPoly({(1, 1, 0): 1})


def _bracket(b: int, p1: UniPoly, p2: UniPoly, p3: UniPoly, b4: int, p4: UniPoly) -> TriPoly:
    return (
        _Z1SQ * _t_checked(b, p1)
        + _Z2SQ * _t_checked(b, p2)
        + _Z1Z2 * _t_checked(b, p3)
        + _t_checked(b4, p4)
    )


def m_coeffs_explicit(p: FParams, triple: GeneratorTriple):
    """``M_s`` reassembled from the T-saturated closed expressions (``m >= 1``).

    Since ``M_1`` carries the factor ``(zeta1 + i zeta2)^(m-2)``, which is not
    polynomial for ``m = 1``, the first entry returned is
    ``(zeta1 + i zeta2) * M_1``; the other two are ``M_2`` and ``M_3``.
    """
    lam, a, m = p.lam, p.a, p.m
    if m < 1:
        raise ValueError("explicit form is written for m >= 1")
    g0, g1, g2 = triple.polys
    lam1 = lam - 1

    def shift_op(c, g):  # (c - theta_t) g
        return g.scale(c) - g.euler()

    s0 = op_S(lam1, a - m + 1, g0)
    r0 = shift_op(a - m + 1, g0).scale(2)
    b1 = _bracket(
        a - m - 1,
        s0 + g1.derivative().scale(2),
        r0 - g1.derivative().scale(2),
        s0.scale(I) - r0.scale(I) + g1.derivative().scale(4 * I),
        a - m + 1,
        g0.scale(2 * (m - 1) * (lam + a)),
    )
    M1_times = b1 * plus_power(m - 1)

    s1 = op_S(lam1, a - m, g1)
    b2 = _bracket(
        a - m - 2,
        s1 + g2.derivative(),
        -g2.derivative(),
        s1.scale(I) + g2.derivative().scale(2 * I),
        a - m,
        g1.scale(2 * m * (lam + a - 1)) - g0.derivative(),
    )
    M2 = b2 * plus_power(m - 1)

    s2 = op_S(lam1, a - m - 1, g2)
    r2 = shift_op(a - m - 1, g2).scale(2)
    b3 = _bracket(
        a - m - 3,
        s2,
        -r2,
        s2.scale(I) + r2.scale(I),
        a - m - 1,
        g2.scale(2 * (m + 1) * (lam + a - 2)) - g1.derivative().scale(2),
    )
    M3 = b3 * plus_power(m)
    return M1_times, M2, M3
