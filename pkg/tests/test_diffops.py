from fractions import Fraction

import pytest
from hypothesis import given

from sbocalc.diffops import (
    DX1,
    DX2,
    DX3,
    DZ,
    DZBAR,
    KKP_A,
    KKP_A_INV,
    LAPLACE2,
    DiffOp,
    NotNaturalError,
    OneForm3,
    PolySection,
    apply,
    apply_scalar,
    compare_kkp,
    dual_operator,
    emit_operator,
    kkp_operator,
    real_to_complex,
    scalar_ctilde,
    script_d,
    script_d_poly,
    symbol,
    symbol_inverse,
    symbol_normalization,
)
from sbocalc.exact import I
from sbocalc.fsystem import ZeroMError
from sbocalc.gegenbauer import gamma_factor
from sbocalc.poly import TriPoly, VecTriPoly
from sbocalc.solver import NotAdmissibleError, classify, solution_psi
from strategies import tripolys

F = Fraction
Z = TriPoly({(1, 0, 0): 1})
ZBAR = TriPoly({(0, 1, 0): 1})
X3 = TriPoly({(0, 0, 1): 1})
Z1, Z2, Z3 = TriPoly.var(1), TriPoly.var(2), TriPoly.var(3)


# -- coordinates ---------------------------------------------------------------

def test_real_derivatives_in_complex_coordinates():
    x1 = real_to_complex(TriPoly.monomial((1, 0, 0)))
    x2 = real_to_complex(TriPoly.monomial((0, 1, 0)))
    assert apply_scalar(DX1, x1, restrict=False) == 1
    assert apply_scalar(DX1, x2, restrict=False) == 0
    assert apply_scalar(DX2, x2, restrict=False) == 1
    assert apply_scalar(DX2, x1, restrict=False) == 0
    assert x1 + x2.scale(I) == Z


def test_laplacian_in_complex_coordinates():
    assert DX1 * DX1 + DX2 * DX2 == LAPLACE2


# -- scalar operators ----------------------------------------------------------

def test_scalar_ctilde_examples():
    lam = F(3, 5)
    assert scalar_ctilde(lam, lam) == DiffOp.scalar(TriPoly.constant(1))
    assert scalar_ctilde(lam, lam + 1) == DiffOp.scalar(DX3.scale(2))
    expected = (DX3 * DX3).scale(2 * lam) + (DZ * DZBAR).scale(4)
    assert scalar_ctilde(lam, lam + 2) == DiffOp.scalar(expected)
    with pytest.raises(NotNaturalError):
        scalar_ctilde(lam, lam - 1)
    with pytest.raises(NotNaturalError):
        scalar_ctilde(lam, lam + F(1, 2))


def test_script_d_examples():
    assert script_d(F(1, 3), 0).op == 1
    assert script_d(F(1, 3), 1).op == DX3.scale(2)
    assert script_d(F(1, 3), -1).op.is_zero()
    assert not script_d(0, 2).restrict
    for lam in (F(1, 2), -3, 2):
        for a in range(5):
            assert scalar_ctilde(lam, lam + a).op == script_d_poly(lam - 1, a)


def test_script_d_identity_at_order_two():
    mu = F(2, 7)
    lhs = script_d_poly(mu + 1, 0) * LAPLACE2 + (script_d_poly(mu + 1, 1) * DX3).scale(gamma_factor(mu, 2))
    rhs = script_d_poly(mu, 2)
    for mono in [(0, 0, 2), (2, 0, 0)]:
        f = real_to_complex(TriPoly.monomial(mono))
        assert apply_scalar(lhs, f, restrict=False) == apply_scalar(rhs, f, restrict=False)


# -- application ---------------------------------------------------------------

def test_apply_examples():
    lam = F(1, 2)
    sec = PolySection((Z * ZBAR + X3, Z + X3 * X3, ZBAR))
    assert apply(emit_operator(lam, lam, 1), sec) == Z * ZBAR
    assert apply(emit_operator(lam, lam, 1), PolySection((None, None, None))).is_zero()
    D = DiffOp((DZBAR, TriPoly(), TriPoly()))
    assert apply(D, PolySection((Z * ZBAR + X3 * X3, None, None))) == Z


def test_apply_without_restriction_keeps_x3():
    D = DiffOp.scalar(DZ, restrict=False)
    assert apply(D, Z * X3) == X3


def test_apply_checks_lengths():
    with pytest.raises(ValueError):
        apply(DiffOp.scalar(DZ), PolySection((Z, Z, Z)))


# -- closed-form operators -----------------------------------------------------

def test_particular_operators():
    lam = F(2, 9)
    D = emit_operator(lam, lam, 1)
    assert D.components == (TriPoly.constant(1), TriPoly(), TriPoly())
    D = emit_operator(lam, lam, -1)
    assert D.components == (TriPoly(), TriPoly(), TriPoly.constant(1))
    for m in range(2, 6):
        lam = 1 - m
        D = emit_operator(lam, lam + m - 1, m)
        assert D.components == (DZBAR ** (m - 1), TriPoly(), TriPoly())
        D = emit_operator(lam, lam + m - 1, -m)
        assert D.components == (TriPoly(), TriPoly(), DZ ** (m - 1))
        assert D.restrict


def test_negative_two_carries_dz_in_third_slot():
    D = emit_operator(-1, 0, -2)
    assert D.components[2] == DZ
    assert D.components[0].is_zero() and D.components[1].is_zero()


def test_emit_rejects_outside_classification():
    with pytest.raises(NotAdmissibleError):
        emit_operator(-3, 3, 4)
    with pytest.raises(ZeroMError):
        emit_operator(1, 1, 0)


def test_operator_for_degree_one():
    lam = F(1, 2)
    D = emit_operator(lam, lam + 1, 1)
    # (lam + floor(0/2)) C~_{lam+1, lam+2} = lam * 2 d_x3, then 2 gamma(lam-1, 1) d_zbar
    assert D.components[0] == DX3.scale(2 * lam)
    assert D.components[1] == DZBAR.scale(2)
    assert D.components[2].is_zero()


def admissible_points():
    for m in range(1, 5):
        for a in range(0, 7):
            for lam in [F(1, 2), F(-3), F(2, 3)] + [F(-k) for k in range(a - 2, a + 1)]:
                if classify(lam, lam + a, m).dimension == 1:
                    yield lam, a, m


def test_symbol_inverse_matches_emitted_operator():
    for lam, a, m in admissible_points():
        for sign in (1, -1):
            psi = solution_psi(lam, a, sign * m)
            assert symbol_inverse(psi, sign * m) == emit_operator(lam, lam + a, sign * m)


def test_symbol_inverse_particular_case():
    for m in range(1, 6):
        psi = VecTriPoly(((Z1 + Z2.scale(I)) ** (m - 1), TriPoly(), TriPoly()))
        raw = symbol_inverse(psi, m, normalize=False)
        assert raw.components[0] == DZBAR.scale(2) ** (m - 1)
        assert symbol_inverse(psi, m).components[0] == DZBAR ** (m - 1)
    assert symbol_inverse(VecTriPoly.zero(), 3).is_zero()


def test_symbol_normalization_values():
    assert symbol_normalization(2, 3) == 4
    assert symbol_normalization(0, 1) == 1
    assert symbol_normalization(3, 1) == I
    assert symbol_normalization(5, 3) == 8 * I ** 2


@given(tripolys(), tripolys(), tripolys())
def test_symbol_round_trip(p, q, r):
    psi = VecTriPoly((p, q, r))
    assert symbol(symbol_inverse(psi, 1, normalize=False)) == psi


def test_dual_operator():
    for lam, a, m in admissible_points():
        nu = lam + a
        assert dual_operator(emit_operator(lam, nu, m)) == emit_operator(lam, nu, -m)


# -- rendering -----------------------------------------------------------------

def test_json_rendering():
    obj = emit_operator(0, 0, 1).to_json_obj()
    assert obj == {"components": {"u1": [{"dz": 0, "dzbar": 0, "dx3": 0, "coeff": "1"}], "u2": [], "u3": []}}


def test_text_rendering():
    assert emit_operator(-2, 0, 3).to_text() == "Rest o (dzbar^2) (x) u1^v"


# -- comparison on 1-forms -----------------------------------------------------

def test_identification_matrices_are_inverse():
    for i in range(3):
        for j in range(3):
            entry = sum(KKP_A[i][k] * KKP_A_INV[k][j] for k in range(3))
            assert entry == (1 if i == j else 0)


def test_kkp_examples():
    assert compare_kkp(F(2, 3), F(2, 3), 3) == (True, None)
    assert compare_kkp(F(1, 2), F(3, 2), 4) == (True, None)
    f = real_to_complex(TriPoly.monomial((1, 0, 0)))
    dx1, dx2 = kkp_operator(F(1, 2), F(1, 2))(OneForm3(TriPoly.monomial((1, 0, 0))))
    assert dx1 == f and dx2.is_zero()
    zero = kkp_operator(F(1, 2), F(5, 2))(OneForm3())
    assert all(c.is_zero() for c in zero)


def test_kkp_dx3_form_degree_one():
    lam = F(1, 3)
    omega = OneForm3(None, None, TriPoly.monomial((1, 0, 0)))
    dx1, dx2 = kkp_operator(lam, lam + 1)(omega)
    # the iota term contributes -gamma(lam - 3/2, 1) * C~_{lam, lam} d_x1 x1 = -1
    # and the d d^* term -C~_{lam+1, lam} d_x1 d_x3 x1 = 0
    assert dx1 == -1
    assert dx2.is_zero()


def test_kkp_rejects_non_natural():
    with pytest.raises(NotNaturalError):
        compare_kkp(0, F(1, 2), 2)


def test_kkp_checker_detects_perturbation():
    lam, nu = F(1, 2), F(5, 2)
    good = kkp_operator(lam, nu)

    def perturbed(omega):
        dx1, dx2 = good(omega)
        return dx1 + apply_scalar(DX3, real_to_complex(omega.f1)), dx2

    ok, witness = compare_kkp(lam, nu, 3, operator=perturbed)
    assert not ok
    assert isinstance(witness, OneForm3)


def test_kkp_wrong_codifferential_sign_fails():
    lam, nu = F(1, 2), F(5, 2)
    ok, _ = compare_kkp(lam, nu, 3, operator=kkp_operator(lam, nu, codiff_sign=1))
    assert not ok
