"""Sparse exact multivariate polynomials and the hypersurfaces they cut out.

Monomials are ordered graded-lexicographically with larger exponents of
earlier variables first: x0^d, x0^(d-1) x1, ..., x_n^d for each degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, CoincidentPoints, SingularPoint
from .linalg import RationalMatrix, nullspace_basis, rank, row_echelon, to_rational
from .projective import ProjectivePoint

Exponent = tuple[int, ...]


def monomial_key(exp: Exponent) -> tuple:
    """Sort key realising the graded-lex order (earlier sorts first)."""
    return (sum(exp), tuple(-e for e in exp))


def monomials(num_vars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, in graded-lex order."""
    out = []
    for combo in combinations_with_replacement(range(num_vars), degree):
        e = [0] * num_vars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomial_count(num_vars: int, degree: int) -> int:
    return comb(num_vars + degree - 1, degree)


class SparsePolynomial:
    """Polynomial over Q stored as ``{exponent tuple: nonzero Fraction}``."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {num_vars} variables")
            acc[exp] = acc.get(exp, Fraction(0)) + to_rational(c)
        self.num_vars = num_vars
        self.terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "SparsePolynomial":
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, {tuple(e): 1})

    @classmethod
    def constant(cls, num_vars: int, c) -> "SparsePolynomial":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def from_coefficients(cls, num_vars: int, basis: Sequence[Exponent], coeffs: Sequence) -> "SparsePolynomial":
        return cls(num_vars, zip(basis, coeffs))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]))

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exp) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    def _check(self, other: "SparsePolynomial") -> None:
        if other.num_vars != self.num_vars:
            raise ArityMismatch(f"{self.num_vars} vs {other.num_vars} variables")

    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        return SparsePolynomial.constant(self.num_vars, other)

    def __add__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        return SparsePolynomial(self.num_vars, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            c = to_rational(other)
            return SparsePolynomial(self.num_vars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return SparsePolynomial(self.num_vars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePolynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self, i: int) -> "SparsePolynomial":
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return SparsePolynomial(self.num_vars, out)

    def gradient(self) -> list["SparsePolynomial"]:
        return [self.derivative(i) for i in range(self.num_vars)]

    def hessian(self) -> list[list["SparsePolynomial"]]:
        grad = self.gradient()
        return [[grad[i].derivative(j) for j in range(self.num_vars)] for i in range(self.num_vars)]

    def __call__(self, point) -> Fraction:
        return evaluate(self, point)

    def normalized(self) -> "SparsePolynomial":
        """Scalar multiple whose first coefficient in graded-lex order is 1."""
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        return self * (1 / lead)


def _coords(point) -> tuple[Fraction, ...]:
    if isinstance(point, ProjectivePoint):
        return point.coords
    return tuple(to_rational(x) for x in point)


def evaluate(f: SparsePolynomial, point) -> Fraction:
    """Exact value of ``f`` at the given coordinate vector.

    For a projective point the value depends on the representative; only
    whether it is zero is meaningful for homogeneous ``f``.

    Raises:
        ArityMismatch: if the point has the wrong number of coordinates.
    """
    x = _coords(point)
    if len(x) != f.num_vars:
        raise ArityMismatch(f"polynomial in {f.num_vars} variables evaluated at {len(x)} coordinates")
    total = Fraction(0)
    for exp, c in f.terms.items():
        v = c
        for xi, e in zip(x, exp):
            if e:
                v *= xi**e
        total += v
    return total


@dataclass(frozen=True)
class Hypersurface:
    """Zero locus of a nonzero homogeneous polynomial in d+1 variables."""

    ambient_dim: int
    equation: SparsePolynomial

    def __post_init__(self):
        if self.equation.is_zero():
            raise ValueError("the zero polynomial does not define a hypersurface")
        if not self.equation.is_homogeneous():
            raise ValueError("hypersurface equations must be homogeneous")
        if self.equation.num_vars != self.ambient_dim + 1:
            raise ArityMismatch(f"P^{self.ambient_dim} needs {self.ambient_dim + 1} variables")

    @classmethod
    def of(cls, equation: SparsePolynomial) -> "Hypersurface":
        return cls(equation.num_vars - 1, equation)

    @property
    def degree(self) -> int:
        return self.equation.degree

    def contains(self, p) -> bool:
        return evaluate(self.equation, p) == 0

    @cached_property
    def gradient(self) -> list[SparsePolynomial]:
        return self.equation.gradient()

    @cached_property
    def hessian(self) -> list[list[SparsePolynomial]]:
        return self.equation.hessian()

    def partials_at(self, p) -> tuple[Fraction, ...]:
        return tuple(evaluate(g, p) for g in self.gradient)

    def is_singular_at(self, p) -> bool:
        return all(x == 0 for x in self.partials_at(p))


def gradient_map(h: Hypersurface, p) -> ProjectivePoint:
    """The point (dF/dX_0(p) : ... : dF/dX_d(p)) of the dual projective space.

    Raises:
        SingularPoint: every partial derivative vanishes at ``p``.
    """
    values = h.partials_at(p)
    if all(x == 0 for x in values):
        raise SingularPoint(f"all partial derivatives vanish at {p!r}")
    return ProjectivePoint(values)


def hessian_matrix_at(h: Hypersurface, p) -> RationalMatrix:
    return RationalMatrix([[evaluate(hij, p) for hij in row] for row in h.hessian])


def hessian_rank_at(h: Hypersurface, p) -> int:
    return rank(hessian_matrix_at(h, p))


def restrict_to_line(f: SparsePolynomial, p, q) -> SparsePolynomial:
    """f(s*p + t*q) as a polynomial in the two variables (s, t).

    Raises:
        CoincidentPoints: ``p`` and ``q`` are the same projective point.
    """
    pp = p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)
    qq = q if isinstance(q, ProjectivePoint) else ProjectivePoint(q)
    if len(pp) != f.num_vars or len(qq) != f.num_vars:
        raise ArityMismatch("line endpoints do not match the number of variables")
    if pp == qq:
        raise CoincidentPoints("a line needs two distinct points")
    linear = [SparsePolynomial(2, {(1, 0): a, (0, 1): b}) for a, b in zip(pp.coords, qq.coords)]
    powers: dict[tuple[int, int], SparsePolynomial] = {}

    def power(i: int, e: int) -> SparsePolynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = linear[i] ** e
        return powers[key]

    out = SparsePolynomial(2)
    for exp, c in f.terms.items():
        term = SparsePolynomial.constant(2, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def evaluation_matrix(samples: Sequence, degree: int) -> tuple[RationalMatrix, list[Exponent]]:
    """Rows: samples; columns: degree-``degree`` monomials in graded-lex order."""
    pts = [_coords(s) for s in samples]
    num_vars = len(pts[0])
    if any(len(x) != num_vars for x in pts):
        raise ArityMismatch("samples live in different ambient spaces")
    basis = monomials(num_vars, degree)
    rows = []
    for x in pts:
        pw = [[Fraction(1)] + [None] * degree for _ in x]
        for i, xi in enumerate(x):
            for e in range(1, degree + 1):
                pw[i][e] = pw[i][e - 1] * xi
        row = []
        for exp in basis:
            v = Fraction(1)
            for i, e in enumerate(exp):
                if e:
                    v *= pw[i][e]
            row.append(v)
        rows.append(row)
    return RationalMatrix(rows, len(basis)), basis


def interpolate_hypersurface(samples: Sequence, degree: int) -> list[SparsePolynomial]:
    """Basis of the degree-``degree`` forms vanishing at every sample.

    The basis is the reduced echelon form of the kernel, so each element has
    leading graded-lex coefficient 1 and the result depends only on the
    space itself, not on which samples were drawn.
    """
    if not samples:
        raise ValueError("interpolation needs at least one sample")
    m, basis = evaluation_matrix(samples, degree)
    kernel = nullspace_basis(m)
    if kernel.ncols == 0:
        return []
    rref, _ = row_echelon(kernel.transpose())
    num_vars = len(basis[0])
    return [SparsePolynomial.from_coefficients(num_vars, basis, row) for row in rref[: kernel.ncols]]
