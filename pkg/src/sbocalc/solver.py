"""Classification, closed-form solutions and the brute-force oracle.

Two independent routes produce the solution space of the reduced system:

* :func:`closed_form_solution` evaluates the explicit Gegenbauer formulas;
* :func:`brute_force_xi` assembles the linear map from the free coefficients
  of ``(g_lo, g_mid, g_hi)`` to the coefficients of ``L_1 .. L_6`` and
  computes its exact kernel.

:func:`brute_force_sol` is a third route that skips the ODE reduction and
solves ``M_1 = M_2 = M_3 = 0`` directly on the symbol ``psi``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .exact import ONE, ZERO, I, GaussianRational, PoleError, as_gaussian, rational_floor
from .fsystem import (
    FParams,
    GeneratorTriple,
    ZeroMError,
    build_psi,
    l_operators,
    m_coeffs,
)
from .gegenbauer import gamma_factor, gegenbauer_imag
from .poly import UniPoly, VecTriPoly, basis_exponents


class NotAdmissibleError(ValueError):
    """The parameters admit no nonzero solution."""


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    dimension: int
    case_tag: Optional[str] = None
    subcase: Optional[str] = None


def natural_value(x) -> Optional[int]:
    """``x`` as a nonnegative int if it is one exactly, else ``None``."""
    x = as_gaussian(x)
    if x.is_integer() and int(x) >= 0:
        return int(x)
    return None


def _subcase(lam: GaussianRational, a: int, q: int) -> Optional[str]:
    if a == q - 1:
        head = "1"
        allowed = [-a]
    elif a == q:
        head = "2"
        allowed = [-a, 1 - a]
    elif a > q:
        head = "3"
        allowed = [-a, 1 - a, 2 - a]
    else:
        return None
    if q == 1:
        return head + ".I"
    if lam in allowed:
        return head + ".II"
    return None


def classify(lam, nu, m: int) -> Classification:
    """Dimension of the solution space and which family the triple belongs to."""
    if m == 0:
        raise ZeroMError("m = 0 is not covered")
    lam = as_gaussian(lam)
    nu = as_gaussian(nu)
    q = abs(m)
    a = natural_value(nu - lam)
    if q == 1:
        if a is None:
            return Classification(0)
        return Classification(1, "Case1", _subcase(lam, a, q))
    in_case2 = (
        lam.is_integer()
        and int(lam) <= 1 - q
        and nu in (0, 1, 2)
    )
    if not in_case2:
        return Classification(0)
    return Classification(1, "Case2", _subcase(lam, a, q))


# -- constants --------------------------------------------------------------

@dataclass(frozen=True)
class ConstantsABC:
    A: GaussianRational
    B: GaussianRational
    C: GaussianRational


def constants_abc(lam, nu, m: int) -> ConstantsABC:
    lam = as_gaussian(lam)
    nu = as_gaussian(nu)
    q = abs(m)
    n = natural_value(nu)
    if n is None or n > 2:
        raise NotAdmissibleError(f"nu = {nu} is not in {{0, 1, 2}}")
    base = lam + rational_floor((-lam - q) / 2)
    if n == 0:
        A = base
    elif n == 1:
        A = -ONE
    else:
        if not base:
            raise PoleError(f"A is undefined: lambda + floor((-lambda-|m|)/2) = 0 at {lam}, {m}")
        A = base.inverse()
    ell = natural_value(nu - lam - q)
    if ell is None:
        raise NotAdmissibleError("constants need nu - lambda >= |m|")
    B = -2 * gamma_factor(lam - 1, ell)
    C = q * (nu - 1) + lam - 2
    return ConstantsABC(A, B, C)


# -- closed forms -------------------------------------------------------------

def closed_form_solution(lam, a: int, m: int) -> GeneratorTriple:
    """Explicit generator of the solution space (``m >= 1``).

    For ``m <= -1`` the generator is obtained by duality: the triple
    ``(g_lo, -g_mid, g_hi)`` of the ``|m|`` solution.
    """
    lam = as_gaussian(lam)
    if m < 0:
        t = closed_form_solution(lam, a, -m)
        return GeneratorTriple(m, a, t.g_lo.body, -t.g_mid.body, t.g_hi.body)
    if classify(lam, lam + a, m).dimension == 0:
        raise NotAdmissibleError(f"no solution at lambda={lam}, a={a}, m={m}")
    if a == m - 1:
        return GeneratorTriple(m, a, UniPoly.constant(1), UniPoly(), UniPoly())
    if m == 1:
        c0 = -(lam + rational_floor(as_gaussian(a - 1) / 2))
        g0 = gegenbauer_imag(lam, a).scale(c0)
        g1 = gegenbauer_imag(lam, a - 1).scale(-I * gamma_factor(lam - 1, a))
        g2 = gegenbauer_imag(lam, a - 2)
        return GeneratorTriple(1, a, g0, g1, g2)
    nu = lam + a
    n = int(nu)
    k = constants_abc(lam, nu, m)
    sign = -1 if n % 2 == 0 else 1  # (-1)^(nu+1)
    g0 = gegenbauer_imag(lam, a - m + 1 - 2 * n).scale(sign * I * k.A * k.B)
    low = gegenbauer_imag(lam, a - m - 1)
    g1 = gegenbauer_imag(lam - 1, a - m).scale(-k.C) + low.shift(1).scale(I * k.B)
    g2 = low.scale(I * k.B)
    return GeneratorTriple(m, a, g0, g1, g2)


def solution_psi(lam, a: int, m: int) -> VecTriPoly:
    """The symbol of the closed-form solution, for either sign of ``m``.

    For ``m <= -1`` this is the dual of the ``|m|`` symbol.
    """
    if m > 0:
        p = FParams.from_lambda_a(lam, a, m)
        return build_psi(p, closed_form_solution(lam, a, m))
    return duality_phi(solution_psi(lam, a, -m))


# -- exact linear algebra -----------------------------------------------------

def rref(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form and pivot columns (Gauss-Jordan).

    The pivot in each column is the first remaining row with a nonzero entry.
    """
    M = [[as_gaussian(x) for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: Optional[int] = None) -> List[List[GaussianRational]]:
    """Basis of ``{v : M v = 0}``, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


# -- brute force ------------------------------------------------------------

@dataclass(frozen=True)
class XiBasis:
    params: FParams
    basis: tuple

    def __post_init__(self):
        for t in self.basis:
            if any(not L.is_zero() for L in l_operators(self.params, *t.polys)):
                raise AssertionError(f"basis element {t} does not solve the system")

    def __len__(self):
        return len(self.basis)


def _unknowns(a: int, m: int):
    q = abs(m)
    cols = []
    for slot, bound in enumerate((a - q + 1, a - q, a - q - 1)):
        for e in basis_exponents(bound):
            cols.append((slot, e))
    return cols


def _triple_from_vector(a: int, m: int, cols, v) -> GeneratorTriple:
    parts = [{}, {}, {}]
    for (slot, e), c in zip(cols, v):
        if c:
            parts[slot][e] = c
    return GeneratorTriple(m, a, *(UniPoly(d) for d in parts))


def _unit_triple(a: int, m: int, slot: int, e: int):
    polys = [UniPoly(), UniPoly(), UniPoly()]
    polys[slot] = UniPoly.monomial(e)
    return polys


def _kernel_triples(a, m, cols, images):
    """Kernel of the map sending unknown ``j`` to the sparse vector ``images[j]``."""
    keys = sorted({k for img in images for k in img})
    index = {k: i for i, k in enumerate(keys)}
    rows = [[ZERO] * len(cols) for _ in keys]
    for j, img in enumerate(images):
        for k, c in img.items():
            rows[index[k]][j] = c
    vecs = nullspace(rows, len(cols))
    return tuple(_triple_from_vector(a, m, cols, v) for v in vecs)


def xi_kernel(lam, a: int, m: int, operators=l_operators) -> tuple:
    """Kernel of ``(g_lo, g_mid, g_hi) -> operators(...)`` as generator triples.

    ``operators`` defaults to :func:`l_operators`; any callable with the same
    signature can be substituted, which is how checker sanity tests inject
    a deliberately wrong system.
    """
    p = FParams.from_lambda_a(lam, a, m)
    cols = _unknowns(a, m)
    images = []
    for slot, e in cols:
        Ls = operators(p, *_unit_triple(a, m, slot, e))
        images.append({(r, k): c for r, L in enumerate(Ls) for k, c in L.terms.items()})
    return _kernel_triples(a, m, cols, images)


def brute_force_xi(lam, a: int, m: int) -> XiBasis:
    """Exact kernel of ``(g_lo, g_mid, g_hi) -> (L_1, ..., L_6)``."""
    if m < 1:
        raise ValueError("brute_force_xi is defined for m >= 1")
    p = FParams.from_lambda_a(lam, a, m)
    return XiBasis(p, xi_kernel(lam, a, m))


def brute_force_sol(lam, a: int, m: int) -> tuple:
    """Kernel of ``(g_lo, g_mid, g_hi) -> (M_1, M_2, M_3)`` through the symbol ``psi``.

    Works for either sign of ``m`` and never touches ``L_1 .. L_6``.
    """
    p = FParams.from_lambda_a(lam, a, m)
    cols = _unknowns(a, m)
    images = []
    for slot, e in cols:
        psi = build_psi(p, GeneratorTriple(m, a, *_unit_triple(a, m, slot, e)))
        Ms = m_coeffs(p, psi)
        images.append({(s, k): c for s, M in enumerate(Ms) for k, c in M.terms.items()})
    return _kernel_triples(a, m, cols, images)


def proportionality(u: GeneratorTriple, v: GeneratorTriple) -> Optional[GaussianRational]:
    """The scalar ``c`` with ``u = c v``, or ``None`` if there is none."""
    cu, cv = u.coefficients(), v.coefficients()
    if len(cu) != len(cv):
        return None
    c = None
    for x, y in zip(cu, cv):
        if not y:
            if x:
                return None
            continue
        if c is None:
            c = x / y
        elif x != c * y:
            return None
    if c is None or not c:
        return None
    return c


# -- duality ----------------------------------------------------------------

def duality_phi(psi: VecTriPoly) -> VecTriPoly:
    """``(psi1, psi2, psi3)(z1, z2, z3) -> (psi3, -psi2, psi1)(z1, -z2, z3)``."""
    s1, s2, s3 = (c.substitute_signs(1, -1, 1) for c in psi.components)
    return VecTriPoly((s3, -s2, s1))
