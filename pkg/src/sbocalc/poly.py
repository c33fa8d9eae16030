"""Sparse polynomials with exact Q(i) coefficients.

Polynomials are dictionaries from exponents to nonzero coefficients.  The
univariate kind (:class:`UniPoly`) carries the ODE unknowns in ``t`` or
``z``; the trivariate kind (:class:`TriPoly`) lives in ``(zeta1, zeta2,
zeta3)``; :class:`VecTriPoly` is a 3-vector of those.
"""
from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .exact import ONE, ZERO, GaussianRational, as_gaussian


class ParityError(ValueError):
    """A polynomial does not lie in the required parity space."""


NEG_INF = float("-inf")


def _clean(terms: Mapping) -> dict:
    out = {}
    for e, c in terms.items():
        c = as_gaussian(c)
        if c:
            out[e] = c
    return out


def _fmt_coeff(c: GaussianRational, mono: str) -> str:
    s = str(c)
    if not mono:
        return s
    if "+" in s[1:] or "-" in s[1:]:
        s = f"({s})"
    if s == "1":
        return mono
    if s == "-1":
        return "-" + mono
    return f"{s}*{mono}"


class _SparseBase:
    __slots__ = ("_terms",)

    @classmethod
    def _raw(cls, terms: dict):
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if isinstance(other, (int, GaussianRational)) or hasattr(other, "denominator"):
            return self == type(self).constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = as_gaussian(c)
        if not c:
            return self._raw({})
        return self._raw({e: v * c for e, v in self._terms.items()})

    def coeff(self, e) -> GaussianRational:
        return self._terms.get(e, ZERO)

    def map_coeffs(self, f):
        return self._raw(_clean({e: f(c) for e, c in self._terms.items()}))

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        return type(self).constant(other)


class UniPoly(_SparseBase):
    """Univariate polynomial ``{exponent: coefficient}``.

    >>> p = UniPoly({3: 2, 1: -1})
    >>> str(p.derivative())
    '-1 + 6*t^2'
    """

    __slots__ = ()

    def __init__(self, terms: Mapping[int, object] | None = None):
        terms = terms or {}
        for e in terms:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent {e!r}")
        self._terms = _clean(terms)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "UniPoly":
        return cls({e: c})

    @property
    def degree(self):
        """Largest exponent; ``-inf`` for the zero polynomial."""
        return max(self._terms) if self._terms else NEG_INF

    def exponents(self):
        return sorted(self._terms)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, ZERO) + c1 * c2
        return UniPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``t**k``."""
        return UniPoly._raw({e + k: c for e, c in self._terms.items()})

    def derivative(self) -> "UniPoly":
        return UniPoly._raw({e - 1: c * e for e, c in self._terms.items() if e})

    def euler(self) -> "UniPoly":
        return UniPoly._raw({e: c * e for e, c in self._terms.items() if e})

    def substitute_scale(self, s) -> "UniPoly":
        """Return ``p(s*t)``."""
        s = as_gaussian(s)
        return UniPoly._raw(_clean({e: c * s ** e for e, c in self._terms.items()}))

    def __call__(self, x):
        x = as_gaussian(x)
        acc = ZERO
        if not self._terms:
            return acc
        for e in range(int(self.degree), -1, -1):
            acc = acc * x + self._terms.get(e, ZERO)
        return acc

    def to_str(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            parts.append(_fmt_coeff(c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.to_str("t")

    def __repr__(self):
        return f"UniPoly({self.to_str()!r})"


def euler_t(f: UniPoly) -> UniPoly:
    """``t f'(t)``."""
    return f.euler()


def differentiate_t(f: UniPoly) -> UniPoly:
    return f.derivative()


class ParityPoly:
    """Element of the space spanned by ``t**(b-2j)``, ``j >= 0``.

    A negative bound forces the zero polynomial.
    """

    __slots__ = ("bound", "body")

    def __init__(self, bound: int, body: UniPoly | Mapping | None = None):
        if body is None:
            body = UniPoly()
        elif not isinstance(body, UniPoly):
            body = UniPoly(body)
        for e in body.exponents():
            if e > bound or (bound - e) % 2:
                raise ParityError(f"t^{e} does not lie in the parity space of bound {bound}")
        self.bound = bound
        self.body = body

    @classmethod
    def zero(cls, bound: int) -> "ParityPoly":
        return cls(bound, UniPoly())

    def basis_exponents(self):
        return basis_exponents(self.bound)

    def dimension(self) -> int:
        return len(basis_exponents(self.bound))

    def __eq__(self, other):
        if isinstance(other, ParityPoly):
            return self.bound == other.bound and self.body == other.body
        return NotImplemented

    def __hash__(self):
        return hash((self.bound, self.body))

    def __repr__(self):
        return f"ParityPoly({self.bound}, {self.body.to_str()!r})"


def basis_exponents(bound: int):
    """Ascending exponents ``e <= bound`` with ``e = bound (mod 2)``."""
    if bound < 0:
        return []
    return list(range(bound % 2, bound + 1, 2))


Exp3 = Tuple[int, int, int]


class TriPoly(_SparseBase):
    """Polynomial in ``(zeta1, zeta2, zeta3)``; keys are exponent triples."""

    __slots__ = ()

    def __init__(self, terms: Mapping[Exp3, object] | None = None):
        terms = terms or {}
        for e in terms:
            if len(e) != 3 or any(x < 0 for x in e):
                raise ValueError(f"bad exponent triple {e!r}")
        self._terms = _clean({tuple(e): c for e, c in terms.items()})

    @classmethod
    def constant(cls, c) -> "TriPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, e: Exp3, c=1) -> "TriPoly":
        return cls({tuple(e): c})

    @classmethod
    def var(cls, axis: int) -> "TriPoly":
        e = [0, 0, 0]
        e[axis - 1] = 1
        return cls({tuple(e): 1})

    def total_degrees(self):
        return {sum(e) for e in self._terms}

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self._terms)

    def __mul__(self, other):
        if not isinstance(other, TriPoly):
            return self.scale(other)
        out: dict = {}
        for (a1, a2, a3), c1 in self._terms.items():
            for (b1, b2, b3), c2 in other._terms.items():
                e = (a1 + b1, a2 + b2, a3 + b3)
                out[e] = out.get(e, ZERO) + c1 * c2
        return TriPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = TriPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_monomial(self, e: Exp3, c=ONE) -> "TriPoly":
        c = as_gaussian(c)
        if not c:
            return TriPoly._raw({})
        x, y, w = e
        return TriPoly._raw(
            {(a + x, b + y, d + w): v * c for (a, b, d), v in self._terms.items()}
        )

    def derivative(self, axis: int) -> "TriPoly":
        k = axis - 1
        out = {}
        for e, c in self._terms.items():
            n = e[k]
            if n:
                f = list(e)
                f[k] = n - 1
                out[tuple(f)] = c * n
        return TriPoly._raw(out)

    def substitute_signs(self, s1: int = 1, s2: int = 1, s3: int = 1) -> "TriPoly":
        """Return ``p(s1*zeta1, s2*zeta2, s3*zeta3)`` for signs ``s_j = +-1``."""
        out = {}
        for e, c in self._terms.items():
            sign = (s1 ** e[0]) * (s2 ** e[1]) * (s3 ** e[2])
            out[e] = c if sign == 1 else -c
        return TriPoly._raw(out)

    def substitute(self, images) -> "TriPoly":
        """Return ``p(images[0], images[1], images[2])``."""
        powers = [[TriPoly.constant(1)] for _ in range(3)]
        out = TriPoly()
        for e, c in self._terms.items():
            term = TriPoly.constant(c)
            for k in range(3):
                pw = powers[k]
                while len(pw) <= e[k]:
                    pw.append(pw[-1] * images[k])
                term = term * pw[e[k]]
            out = out + term
        return out

    def to_str(self, names=("zeta1", "zeta2", "zeta3")) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            parts.append(_fmt_coeff(c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"TriPoly({self.to_str()!r})"


def differentiate(p: TriPoly, axis: int) -> TriPoly:
    if axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    return p.derivative(axis)


def euler_operator(p: TriPoly) -> TriPoly:
    """``sum_j zeta_j d/dzeta_j``, i.e. multiply each monomial by its degree."""
    return TriPoly._raw({e: c * sum(e) for e, c in p._terms.items() if sum(e)})


def laplacian3(p: TriPoly) -> TriPoly:
    out = TriPoly()
    for axis in (1, 2, 3):
        out = out + p.derivative(axis).derivative(axis)
    return out


class VecTriPoly:
    """Triple ``(psi1, psi2, psi3)`` of :class:`TriPoly` in the basis u1, u2, u3."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[TriPoly] = (None, None, None)):
        comps = tuple(c if c is not None else TriPoly() for c in components)
        if len(comps) != 3:
            raise ValueError("VecTriPoly needs exactly three components")
        self.components = comps

    @classmethod
    def zero(cls) -> "VecTriPoly":
        return cls((TriPoly(), TriPoly(), TriPoly()))

    def __getitem__(self, k: int) -> TriPoly:
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "VecTriPoly"):
        return VecTriPoly(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other: "VecTriPoly"):
        return VecTriPoly(a - b for a, b in zip(self.components, other.components))

    def __neg__(self):
        return VecTriPoly(-a for a in self.components)

    def scale(self, c) -> "VecTriPoly":
        return VecTriPoly(a.scale(c) for a in self.components)

    def map(self, f) -> "VecTriPoly":
        return VecTriPoly(f(a) for a in self.components)

    def __eq__(self, other):
        if isinstance(other, VecTriPoly):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "VecTriPoly(" + ", ".join(repr(str(c)) for c in self.components) + ")"
