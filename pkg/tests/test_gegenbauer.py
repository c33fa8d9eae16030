from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sbocalc.exact import I, gamma_ratio
from sbocalc.gegenbauer import (
    NegativeDegreeError,
    gamma_factor,
    gegenbauer_imag,
    gegenbauer_renorm,
    op_G,
    op_S,
)
from sbocalc.identities import (
    DEFAULT_MUS,
    check_annihilation,
    check_degree_reflection,
    check_derivative_identities,
    check_parity,
    check_s_g_relation,
    check_s_shift_identities,
    check_three_term,
)
from sbocalc.poly import UniPoly, basis_exponents
from sbocalc.solver import nullspace
from strategies import unipolys

F = Fraction
MUS = [F(3), F(-2), F(1, 2), F(2, 3), F(-5, 2), F(0)]


def listed(mu, ell):
    """Renormalized polynomials of degree 0..6 written out by hand."""
    table = {
        0: {0: 1},
        1: {1: 2},
        2: {2: 2 * (mu + 1), 0: -1},
        3: {3: F(4, 3) * (mu + 2), 1: -2},
        4: {4: F(2, 3) * (mu + 2) * (mu + 3), 2: -2 * (mu + 2), 0: F(1, 2)},
        5: {5: F(4, 15) * (mu + 3) * (mu + 4), 3: -F(4, 3) * (mu + 3), 1: 1},
        6: {
            6: F(4, 45) * (mu + 3) * (mu + 4) * (mu + 5),
            4: -F(2, 3) * (mu + 3) * (mu + 4),
            2: mu + 3,
            0: -F(1, 6),
        },
    }
    return UniPoly(table[ell])


@pytest.mark.parametrize("mu", MUS)
@pytest.mark.parametrize("ell", range(7))
def test_matches_written_list(mu, ell):
    assert gegenbauer_renorm(mu, ell) == listed(mu, ell)


def classical(mu, ell):
    """Classical Gegenbauer polynomial from the three-term recurrence."""
    z = UniPoly.monomial(1)
    prev, cur = UniPoly.constant(1), z.scale(2 * mu)
    if ell == 0:
        return prev
    for n in range(1, ell):
        nxt = (z * cur).scale(2 * (n + mu)) - prev.scale(n + 2 * mu - 1)
        prev, cur = cur, nxt.scale(F(1, n + 1))
    return cur


@pytest.mark.parametrize("mu", [F(1, 2), F(2, 3), F(3), F(7, 4), F(5, 2)])
@pytest.mark.parametrize("ell", range(11))
def test_agrees_with_classical_recurrence(mu, ell):
    # away from the degenerate values the renormalization is a plain scalar
    factor = gamma_ratio(mu, (ell + 1) // 2)
    assert classical(mu, ell) == gegenbauer_renorm(mu, ell).scale(factor)


def test_examples():
    assert gegenbauer_renorm(3, 2) == UniPoly({2: 8, 0: -1})
    assert gegenbauer_renorm(7, 0) == 1
    assert gegenbauer_renorm(-2, 4) == F(1, 2)
    assert gegenbauer_renorm(5, -1).is_zero()


def test_imaginary_examples():
    assert gegenbauer_imag(F(2, 3), 1) == UniPoly({1: 2 * I})
    mu = F(5, 7)
    assert gegenbauer_imag(mu, 2) == UniPoly({2: -2 * (mu + 1), 0: -1})
    assert gegenbauer_imag(mu, -3).is_zero()


def test_gamma_factor():
    assert gamma_factor(F(9, 5), 3) == 1
    assert gamma_factor(3, 4) == 5
    assert gamma_factor(-2, 4) == 0
    with pytest.raises(NegativeDegreeError):
        gamma_factor(1, -1)


def test_op_G_examples():
    assert op_G(4, 0, UniPoly.constant(1)).is_zero()
    assert op_G(1, 1, UniPoly.monomial(2)) == UniPoly({0: 2, 2: -5})
    assert op_S(3, 2, UniPoly()).is_zero()


@pytest.mark.parametrize("mu", DEFAULT_MUS)
def test_gegenbauer_kernel_is_one_dimensional(mu):
    # the kernel of G on the parity space of degree ell is spanned by C~
    for ell in range(9):
        exps = basis_exponents(ell)
        cols = [op_G(mu, ell, UniPoly.monomial(e)) for e in exps]
        rows = [[c.coeff(r) for c in cols] for r in range(ell + 1)]
        kernel = nullspace(rows, len(exps))
        assert len(kernel) == 1
        f = UniPoly(dict(zip(exps, kernel[0])))
        c = gegenbauer_renorm(mu, ell)
        lead = max(c.exponents())
        assert f.scale(c.coeff(lead)) == c.scale(f.coeff(lead))


@given(unipolys(8), st.sampled_from(DEFAULT_MUS), st.integers(0, 8))
def test_s_and_g_are_conjugate(f, mu, ell):
    assert op_S(mu, ell, f.substitute_scale(I)) == op_G(mu, ell, f).substitute_scale(I)


@pytest.mark.parametrize(
    "check",
    [
        check_annihilation,
        check_s_g_relation,
        check_s_shift_identities,
        check_derivative_identities,
        check_three_term,
        check_degree_reflection,
        check_parity,
    ],
)
def test_identity_batteries(check):
    assert check(DEFAULT_MUS, 8) == []


def test_derivative_identity_at_low_degree():
    # d/dt C~_1(it) = 2i, and C~_0^{mu+1} = 1 with gamma(mu, 1) = 1
    mu = F(1, 3)
    assert gegenbauer_imag(mu, 1).derivative() == 2 * I
    # d/dt C~_2(it) = -4(mu+1) t, and 2i gamma(mu,2) C~_1^{mu+1}(it) = 2i (mu+1) 2it
    assert gegenbauer_imag(mu, 2).derivative() == UniPoly({1: -4 * (mu + 1)})


def test_degree_reflection_small_case():
    # at mu = -1 the degree-2 polynomial collapses to a constant
    assert gegenbauer_renorm(-1, 2) == -1
    assert gegenbauer_renorm(-1, 0) == 1
