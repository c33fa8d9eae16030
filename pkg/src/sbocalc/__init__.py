"""Exact computation of differential symmetry breaking operators from
vector-valued sections on the 3-sphere to line bundles on the 2-sphere.

The modules build on each other: :mod:`exact` (Q(i) arithmetic), :mod:`poly`
(sparse polynomials), :mod:`gegenbauer`, :mod:`fsystem` (the reduced
equations), :mod:`solver` (classification and kernels) and :mod:`diffops`
(the operators themselves).
"""
from .diffops import (
    DiffOp,
    NotNaturalError,
    OneForm3,
    PolySection,
    apply,
    compare_kkp,
    emit_operator,
    kkp_operator,
    scalar_ctilde,
    script_d,
    symbol,
    symbol_inverse,
)
from .exact import (
    GaussianRational,
    NonRealError,
    PoleError,
    Rational,
    gamma_ratio,
    parse_gaussian,
    rational_floor,
    rising_factorial,
)
from .fsystem import (
    FParams,
    GeneratorTriple,
    ZeroMError,
    build_psi,
    harmonic_generator,
    hat_dpi_scalar,
    index_set_K,
    l_operators,
    m_coeffs,
    t_saturate,
)
from .gegenbauer import (
    NegativeDegreeError,
    gamma_factor,
    gegenbauer_imag,
    gegenbauer_renorm,
    op_G,
    op_S,
)
from .poly import (
    ParityError,
    ParityPoly,
    TriPoly,
    UniPoly,
    VecTriPoly,
    differentiate,
    differentiate_t,
    euler_operator,
    euler_t,
    laplacian3,
)
from .solver import (
    Classification,
    ConstantsABC,
    NotAdmissibleError,
    XiBasis,
    brute_force_sol,
    brute_force_xi,
    classify,
    closed_form_solution,
    constants_abc,
    duality_phi,
    nullspace,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ConstantsABC",
    "DiffOp",
    "FParams",
    "GaussianRational",
    "GeneratorTriple",
    "NegativeDegreeError",
    "NonRealError",
    "NotAdmissibleError",
    "NotNaturalError",
    "OneForm3",
    "ParityError",
    "ParityPoly",
    "PoleError",
    "PolySection",
    "Rational",
    "TriPoly",
    "UniPoly",
    "VecTriPoly",
    "XiBasis",
    "ZeroMError",
    "apply",
    "brute_force_sol",
    "brute_force_xi",
    "build_psi",
    "classify",
    "closed_form_solution",
    "compare_kkp",
    "constants_abc",
    "differentiate",
    "differentiate_t",
    "duality_phi",
    "emit_operator",
    "euler_operator",
    "euler_t",
    "gamma_factor",
    "gamma_ratio",
    "gegenbauer_imag",
    "gegenbauer_renorm",
    "harmonic_generator",
    "hat_dpi_scalar",
    "index_set_K",
    "kkp_operator",
    "l_operators",
    "laplacian3",
    "m_coeffs",
    "nullspace",
    "op_G",
    "op_S",
    "parse_gaussian",
    "rational_floor",
    "rising_factorial",
    "scalar_ctilde",
    "script_d",
    "symbol",
    "symbol_inverse",
    "t_saturate",
]
