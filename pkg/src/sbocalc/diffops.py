"""Constant-coefficient differential operators from R^3 to R^2.

Operators are polynomials in ``(d/dz, d/dzbar, d/dx3)`` stored as
:class:`TriPoly` with the exponent triple ``(j, k, l)`` standing for
``d_z^j d_zbar^k d_x3^l``.  Sections are polynomials in ``(z, zbar, x3)``,
with ``z`` and ``zbar`` treated as independent variables.  Real
coordinates are converted through ``x1 = (z + zbar)/2`` and
``x2 = (z - zbar)/(2i)``, so that ``d_x1 = d_z + d_zbar`` and
``d_x2 = i (d_z - d_zbar)``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import prod
from typing import Optional, Sequence

from .exact import I, GaussianRational, as_gaussian, rational_floor
from .fsystem import ZeroMError
from .gegenbauer import gamma_factor, gegenbauer_renorm
from .poly import TriPoly, VecTriPoly
from .solver import NotAdmissibleError, classify, constants_abc, natural_value


class NotNaturalError(ValueError):
    """An order that must be a natural number is not one."""


# -- coordinates -------------------------------------------------------------

DZ = TriPoly({(1, 0, 0): 1})
DZBAR = TriPoly({(0, 1, 0): 1})
DX3 = TriPoly({(0, 0, 1): 1})
DX1 = DZ + DZBAR
DX2 = (DZ - DZBAR).scale(I)
LAPLACE2 = (DZ * DZBAR).scale(4)

# x1, x2, x3 written in (z, zbar, x3)
_X1 = TriPoly({(1, 0, 0): Fraction(1, 2), (0, 1, 0): Fraction(1, 2)})
_X2 = TriPoly({(1, 0, 0): -I / 2, (0, 1, 0): I / 2})
_X3 = TriPoly({(0, 0, 1): 1})


def real_to_complex(p: TriPoly) -> TriPoly:
    """Rewrite a polynomial in ``(x1, x2, x3)`` in the variables ``(z, zbar, x3)``."""
    return p.substitute((_X1, _X2, _X3))


def real_operator(p: TriPoly) -> TriPoly:
    """Rewrite a polynomial in ``(d_x1, d_x2, d_x3)`` in ``(d_z, d_zbar, d_x3)``."""
    return p.substitute((DX1, DX2, DX3))


# -- operators ----------------------------------------------------------------

class DiffOp:
    """A list of scalar operators, one per target component, optionally
    followed by restriction to ``x3 = 0``.

    A scalar operator has one component; a vector operator on sections with
    values in ``span(u1, u2, u3)`` has three.
    """

    __slots__ = ("components", "restrict")

    def __init__(self, components: Sequence[TriPoly], restrict: bool = True):
        self.components = tuple(c if c is not None else TriPoly() for c in components)
        self.restrict = restrict

    @classmethod
    def scalar(cls, op: TriPoly, restrict: bool = True) -> "DiffOp":
        return cls((op,), restrict)

    @property
    def op(self) -> TriPoly:
        if len(self.components) != 1:
            raise ValueError("not a scalar operator")
        return self.components[0]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "DiffOp") -> "DiffOp":
        return DiffOp([a + b for a, b in zip(self.components, other.components)],
                      self.restrict or other.restrict)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + other.scale(-1)

    def scale(self, c) -> "DiffOp":
        return DiffOp([a.scale(c) for a in self.components], self.restrict)

    def compose(self, other: TriPoly) -> "DiffOp":
        """``self`` after the unrestricted scalar operator ``other``."""
        return DiffOp([a * other for a in self.components], self.restrict)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.components == other.components and self.restrict == other.restrict

    def __hash__(self):
        return hash((self.components, self.restrict))

    def __repr__(self):
        return f"DiffOp({self.to_text()!r})"

    # -- rendering --------------------------------------------------------
    def to_json_obj(self) -> dict:
        names = [f"u{s + 1}" for s in range(len(self.components))]
        return {
            "components": {
                n: [
                    {"dz": j, "dzbar": k, "dx3": l, "coeff": str(c)}
                    for (j, k, l), c in comp.items()
                ]
                for n, comp in zip(names, self.components)
            }
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def to_text(self) -> str:
        parts = []
        for s, comp in enumerate(self.components):
            if comp.is_zero():
                continue
            body = comp.to_str(("dz", "dzbar", "dx3"))
            rest = "Rest o " if self.restrict else ""
            parts.append(f"{rest}({body}) (x) u{s + 1}^v")
        return " + ".join(parts) if parts else "0"

    def to_latex(self) -> str:
        parts = []
        for s, comp in enumerate(self.components):
            if comp.is_zero():
                continue
            terms = [_latex_term(c, e) for e, c in comp.items()]
            body = " ".join(terms)
            if body.startswith("+ "):
                body = body[2:]
            elif body.startswith("- "):
                body = "-" + body[2:]
            rest = r"\operatorname{Rest}_{x_3=0} \circ " if self.restrict else ""
            dual = rf" \otimes u_{{{s + 1}}}^\vee" if len(self.components) > 1 else ""
            parts.append(rf"{rest}\left({body}\right){dual}")
        return "\n+ ".join(parts) if parts else "0"


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(abs(q.numerator))
    return rf"\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_coeff(c: GaussianRational) -> tuple:
    """Sign and magnitude text of a coefficient."""
    re_, im_ = c.re, c.im
    if im_ == 0:
        return ("-" if re_ < 0 else "+", _latex_rational(re_), re_ in (1, -1))
    if re_ == 0:
        mag = "" if abs(im_) == 1 else _latex_rational(im_)
        return ("-" if im_ < 0 else "+", f"{mag} i".strip(), False)
    sign_im = "-" if im_ < 0 else "+"
    mag_im = "" if abs(im_) == 1 else _latex_rational(im_)
    sign_re = "-" if re_ < 0 else ""
    return ("+", rf"\left({sign_re}{_latex_rational(re_)} {sign_im} {mag_im} i\right)".replace("  ", " "), False)


def _latex_term(c: GaussianRational, e) -> str:
    j, k, l = e
    n = j + k + l
    sign, mag, unit = _latex_coeff(c)
    if n == 0:
        return f"{sign} {mag}"
    den = []
    for var, p in (("z", j), (r"\bar{z}", k), ("x_3", l)):
        if p == 1:
            den.append(rf"\partial {var}")
        elif p > 1:
            den.append(rf"\partial {var}^{{{p}}}")
    num = r"\partial" if n == 1 else rf"\partial^{{{n}}}"
    frac = rf"\frac{{{num}}}{{{' '.join(den)}}}"
    if unit:
        return f"{sign} {frac}"
    return f"{sign} {mag} {frac}"


# -- sections and application -----------------------------------------------

class PolySection:
    """Three polynomials in ``(z, zbar, x3)``, the coefficients of u1, u2, u3."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[TriPoly]):
        self.components = tuple(c if c is not None else TriPoly() for c in components)

    @classmethod
    def from_real(cls, components: Sequence[TriPoly]) -> "PolySection":
        return cls([real_to_complex(c) for c in components])

    def __repr__(self):
        return "PolySection(" + ", ".join(c.to_str(("z", "zbar", "x3")) for c in self.components) + ")"


def _falling(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def apply_scalar(op: TriPoly, f: TriPoly, restrict: bool = True) -> TriPoly:
    """Apply a constant-coefficient operator to a polynomial in ``(z, zbar, x3)``."""
    out = {}
    for (j, k, l), c in op.terms.items():
        for (a, b, d), v in f.terms.items():
            if a < j or b < k or d < l:
                continue
            e = (a - j, b - k, d - l)
            if restrict and e[2]:
                continue
            w = c * v * (_falling(a, j) * _falling(b, k) * _falling(d, l))
            out[e] = out[e] + w if e in out else w
    return TriPoly(out)


def apply(D: DiffOp, F) -> TriPoly:
    """``sum_s D_s F_s`` followed by ``x3 = 0`` when ``D`` restricts."""
    comps = F.components if isinstance(F, PolySection) else (F,)
    if len(comps) != len(D.components):
        raise ValueError("operator and section have different numbers of components")
    out = TriPoly()
    for op, f in zip(D.components, comps):
        out = out + apply_scalar(op, f, D.restrict)
    return out


# -- Gegenbauer-type scalar operators ------------------------------------------

def script_d_poly(mu, ell: int) -> TriPoly:
    """Symbol of ``(I_ell C~_ell^mu)(-Laplacian, d_x3)`` in ``(d_z, d_zbar, d_x3)``."""
    if ell < 0:
        return TriPoly()
    out = {}
    for e, c in gegenbauer_renorm(mu, ell).terms.items():
        k = (ell - e) // 2
        out[(k, k, e)] = c * (-4) ** k
    return TriPoly(out)


def script_d(mu, ell: int) -> DiffOp:
    """The homogeneous order-``ell`` operator, without restriction."""
    return DiffOp.scalar(script_d_poly(mu, ell), restrict=False)


def _ctilde_poly(lam, nu) -> TriPoly:
    """Symbol of the scalar operator attached to ``(lam, nu)``; zero for negative order."""
    lam = as_gaussian(lam)
    d = as_gaussian(nu) - lam
    if not d.is_integer():
        raise NotNaturalError(f"nu - lambda = {d} is not an integer")
    return script_d_poly(lam - 1, int(d))


def scalar_ctilde(lam, nu) -> DiffOp:
    """``Rest o (I_a C~_a^(lam-1))(-4 d_z d_zbar, d_x3)`` with ``a = nu - lam``."""
    if natural_value(as_gaussian(nu) - as_gaussian(lam)) is None:
        raise NotNaturalError(f"nu - lambda = {as_gaussian(nu) - as_gaussian(lam)} is not in N")
    return DiffOp.scalar(_ctilde_poly(lam, nu))


# -- the closed-form operators -----------------------------------------------

def _dpow(j: int, k: int) -> TriPoly:
    return TriPoly({(j, k, 0): 1})


def emit_operator(lam, nu, m: int) -> DiffOp:
    """The generator of the space of differential symmetry breaking operators."""
    if m == 0:
        raise ZeroMError("m = 0 is not covered")
    lam = as_gaussian(lam)
    nu = as_gaussian(nu)
    if classify(lam, nu, m).dimension == 0:
        raise NotAdmissibleError(f"no operator at lambda={lam}, nu={nu}, m={m}")
    a = int(nu - lam)
    q = abs(m)
    comps = [TriPoly(), TriPoly(), TriPoly()]
    ct = _ctilde_poly
    if q == 1:
        if a == 0:
            comps[0 if m == 1 else 2] = TriPoly.constant(1)
            return DiffOp(comps)
        c1 = lam + rational_floor(as_gaussian(a - 1) / 2)
        g = gamma_factor(lam - 1, a)
        outer = ct(lam + 1, nu + 1).scale(c1)
        if m == 1:
            comps[0] = outer
            comps[1] = (ct(lam + 1, nu) * DZBAR).scale(2 * g)
            comps[2] = (ct(lam + 1, nu - 1) * _dpow(0, 2)).scale(4)
        else:
            comps[0] = (ct(lam + 1, nu - 1) * _dpow(2, 0)).scale(4)
            comps[1] = (ct(lam + 1, nu) * DZ).scale(-2 * g)
            comps[2] = outer
        return DiffOp(comps)
    if a == q - 1:
        if m > 0:
            comps[0] = _dpow(0, q - 1)
        else:
            comps[2] = _dpow(q - 1, 0)
        return DiffOp(comps)
    k = constants_abc(lam, nu, m)
    n = int(nu)
    lead = ct(lam + 1, 2 - n - q).scale(k.A * k.B * Fraction(2) ** (2 * n - 1))
    mid = ct(lam, nu - q).scale(-k.C) + (DX3 * ct(lam + 1, nu - q)).scale(k.B)
    low = ct(lam + 1, nu - q).scale(2 * k.B)
    if m > 0:
        comps[0] = lead * _dpow(n, n + q - 1)
        comps[1] = mid * _dpow(0, q)
        comps[2] = low * _dpow(0, q + 1)
    else:
        comps[0] = low * _dpow(q + 1, 0)
        comps[1] = -(mid * _dpow(q, 0))
        comps[2] = lead * _dpow(n + q - 1, n)
    return DiffOp(comps)


def dual_operator(D: DiffOp) -> DiffOp:
    """Swap u1 and u3, negate u2 and exchange ``d_z`` with ``d_zbar``."""
    swap = [TriPoly({(k, j, l): c for (j, k, l), c in comp.items()}) for comp in D.components]
    return DiffOp((swap[2], -swap[1], swap[0]), D.restrict)


# -- symbols -----------------------------------------------------------------

def symbol_normalization(a: int, m: int) -> GaussianRational:
    """Scalar removed by :func:`symbol_inverse` for a symbol of degree ``a``.

    With this choice the inverse symbol of the closed-form solution equals
    :func:`emit_operator` exactly.
    """
    q = abs(m)
    if a == q - 1:
        return as_gaussian(2 ** (q - 1))
    if q == 1:
        return -(I ** a)
    return I ** (a - q) * 2 ** q


def _homogeneous_degree(psi: VecTriPoly) -> Optional[int]:
    degs = set()
    for c in psi.components:
        degs |= c.total_degrees()
    if not degs:
        return None
    if len(degs) != 1:
        raise ValueError("symbol is not homogeneous")
    return degs.pop()


def symbol_inverse(psi: VecTriPoly, m: int, normalize: bool = True) -> DiffOp:
    """Differential operator with symbol ``psi``, restricted to ``x3 = 0``.

    ``zeta_j`` becomes ``d_x_j``; with ``normalize`` the result is divided by
    :func:`symbol_normalization`.
    """
    comps = [real_operator(c) for c in psi.components]
    D = DiffOp(comps)
    if not normalize:
        return D
    a = _homogeneous_degree(psi)
    if a is None:
        return D
    return D.scale(symbol_normalization(a, m).inverse())


_ZETA_DZ = TriPoly({(1, 0, 0): Fraction(1, 2), (0, 1, 0): -I / 2})
_ZETA_DZBAR = TriPoly({(1, 0, 0): Fraction(1, 2), (0, 1, 0): I / 2})
_ZETA3 = TriPoly({(0, 0, 1): 1})


def symbol(D: DiffOp) -> VecTriPoly:
    """Inverse of the unnormalized :func:`symbol_inverse` (restriction dropped)."""
    return VecTriPoly(c.substitute((_ZETA_DZ, _ZETA_DZBAR, _ZETA3)) for c in D.components)


# -- comparison with the operator on 1-forms ------------------------------------

class OneForm3:
    """``f1 dx1 + f2 dx2 + f3 dx3`` with coefficients in ``(x1, x2, x3)``."""

    __slots__ = ("f1", "f2", "f3")

    def __init__(self, f1=None, f2=None, f3=None):
        self.f1 = f1 if f1 is not None else TriPoly()
        self.f2 = f2 if f2 is not None else TriPoly()
        self.f3 = f3 if f3 is not None else TriPoly()

    @property
    def components(self):
        return (self.f1, self.f2, self.f3)

    def __repr__(self):
        names = ("x1", "x2", "x3")
        return "OneForm3(" + ", ".join(f.to_str(names) for f in self.components) + ")"


CODIFFERENTIAL_SIGN = -1


def kkp_operator(lam, nu, codiff_sign: int = CODIFFERENTIAL_SIGN):
    """The operator on 1-forms, as a map ``OneForm3 -> (dx1, dx2)`` coefficients.

    The returned callable takes a :class:`OneForm3` with real-coordinate
    coefficients and returns the pair of ``dx1``, ``dx2`` coefficients as
    polynomials in ``(z, zbar)``.
    """
    lam = as_gaussian(lam)
    nu = as_gaussian(nu)
    a = natural_value(nu - lam)
    if a is None:
        raise NotNaturalError(f"nu - lambda = {nu - lam} is not in N")
    if a == 0:
        def rest(omega: OneForm3):
            return tuple(apply_scalar(TriPoly.constant(1), real_to_complex(f)) for f in (omega.f1, omega.f2))
        return rest
    c_dd = _ctilde_poly(lam + 1, nu - 1)
    c_iota = _ctilde_poly(lam, nu - 1).scale(-gamma_factor(lam - Fraction(3, 2), a))
    c_id = _ctilde_poly(lam, nu).scale((lam + a - 1) / 2)
    partials = (DX1, DX2, DX3)

    def op(omega: OneForm3):
        f = [real_to_complex(g) for g in omega.components]
        out = []
        for j in (0, 1):
            dj = partials[j]
            # d d^* omega, dx_j part: d_j of the codifferential
            codiff = TriPoly()
            for k in range(3):
                codiff = codiff + apply_scalar(dj * partials[k], f[k], restrict=False)
            term = apply_scalar(c_dd, codiff.scale(codiff_sign))
            term = term + apply_scalar(c_iota * dj, f[2])
            term = term + apply_scalar(c_id, f[j])
            out.append(term)
        return tuple(out)

    return op


def kkp_constant(a: int) -> int:
    return 1 if a == 0 else 2


# identification of span(u1, u2, u3) with C^3, and its inverse
KKP_A = (
    (1, 0, -1),
    (-I, 0, -I),
    (0, -1, 0),
)
KKP_A_INV = (
    (Fraction(1, 2), I / 2, 0),
    (0, 0, -1),
    (Fraction(-1, 2), I / 2, 0),
)


def kkp_lhs(lam, nu, omega: OneForm3):
    """``iota o (D^1 - D^-1) o A^-1`` applied to ``omega`` as ``(dx1, dx2)`` coefficients."""
    f = [real_to_complex(g) for g in omega.components]
    sec = PolySection(
        [sum((fj.scale(c) for fj, c in zip(f, row)), TriPoly()) for row in KKP_A_INV]
    )
    d_plus = apply(emit_operator(lam, nu, 1), sec)
    d_minus = apply(emit_operator(lam, nu, -1), sec)
    return d_plus - d_minus, (d_plus + d_minus).scale(-I)


def monomial_one_forms(max_degree: int):
    """All ``x^e dx_j`` with ``|e| <= max_degree``, in a fixed order."""
    for deg in range(max_degree + 1):
        for e1 in range(deg, -1, -1):
            for e2 in range(deg - e1, -1, -1):
                e = (e1, e2, deg - e1 - e2)
                for j in range(3):
                    comps = [None, None, None]
                    comps[j] = TriPoly.monomial(e)
                    yield OneForm3(*comps)


def compare_kkp(lam, nu, max_degree: int, operator=None):
    """Check ``iota (D^1 - D^-1) A^-1 = K C^{1,1}`` on monomial 1-forms.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    first failing 1-form.
    """
    lam = as_gaussian(lam)
    nu = as_gaussian(nu)
    a = natural_value(nu - lam)
    if a is None:
        raise NotNaturalError(f"nu - lambda = {nu - lam} is not in N")
    if operator is None:
        operator = kkp_operator(lam, nu)
    K = kkp_constant(a)
    for omega in monomial_one_forms(max_degree):
        lhs = kkp_lhs(lam, nu, omega)
        rhs = operator(omega)
        if lhs[0] != rhs[0].scale(K) or lhs[1] != rhs[1].scale(K):
            return False, omega
    return True, None
