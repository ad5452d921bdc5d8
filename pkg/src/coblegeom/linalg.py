"""Exact rational matrices: rank, nullspace and solving over Q.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest terms
with a positive denominator. Nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a float has already lost the exact value.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _height(x: Fraction) -> int:
    return abs(x.numerator) * x.denominator


class RationalMatrix:
    """Immutable rectangular matrix of Fractions."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("column count does not match rows")
        else:
            width = ncols or 0
        self._rows = data
        self._ncols = width

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "RationalMatrix":
        if not cols:
            return cls([[] for _ in range(nrows or 0)], 0)
        return cls(zip(*cols), len(cols))

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self._ncols)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows), self.nrows) if self._rows else RationalMatrix([], 0)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        out = [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows]
        return RationalMatrix(out, other.ncols)

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match column count")
        v = [to_rational(x) for x in vec]
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self._rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows)
        return f"RationalMatrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def rank(self) -> int:
        return rank(self)

    def nullspace(self) -> "RationalMatrix":
        return nullspace_basis(self)


def _as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def row_echelon(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns.

    The pivot in each column is the candidate entry of smallest height
    ``|numerator| * denominator``; this keeps intermediate entries short.
    """
    m = _as_matrix(m)
    a = [list(r) for r in m.rows]
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            x = a[i][c]
            if x and (best is None or _height(x) < _height(a[best][c])):
                best = i
        if best is None:
            continue
        a[r], a[best] = a[best], a[r]
        piv = a[r][c]
        if piv != 1:
            inv = 1 / piv
            a[r] = [x * inv for x in a[r]]
        prow = a[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = a[i][c]
            if f:
                ri = a[i]
                for j in nz:
                    ri[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    """Exact rank over Q."""
    return len(row_echelon(m)[1])


def nullspace_basis(m) -> RationalMatrix:
    """Right kernel basis as the columns of a ``cols x (cols - rank)`` matrix.

    Each basis vector has a 1 in one free column and 0 in the others, so the
    basis is determined by ``m`` alone.
    """
    m = _as_matrix(m)
    ncols = m.ncols
    rref, pivots = row_echelon(m)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rref[i][f]
        basis.append(v)
    return RationalMatrix.from_columns(basis, nrows=ncols)


def left_nullspace_basis(m) -> RationalMatrix:
    """Columns span ``{y : y^T m = 0}``."""
    return nullspace_basis(_as_matrix(m).transpose())


def solve(m, b: Sequence) -> tuple[Fraction, ...]:
    """The unique solution of ``m x = b``.

    Raises:
        ValueError: if the system is inconsistent or underdetermined.
    """
    m = _as_matrix(m)
    if len(b) != m.nrows:
        raise ValueError("right-hand side length does not match row count")
    aug = RationalMatrix([list(r) + [to_rational(x)] for r, x in zip(m.rows, b)])
    rref, pivots = row_echelon(aug)
    if m.ncols in pivots:
        raise ValueError("inconsistent system")
    if len(pivots) != m.ncols:
        raise ValueError("system does not have a unique solution")
    return tuple(rref[i][-1] for i in range(m.ncols))


def inverse(m) -> RationalMatrix:
    m = _as_matrix(m)
    n = m.nrows
    if n != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    aug = RationalMatrix([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m.rows)])
    rref, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return RationalMatrix([row[n:] for row in rref[:n]], n)


def determinant(m) -> Fraction:
    """Determinant by elimination."""
    m = _as_matrix(m)
    n = m.nrows
    if n != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.rows]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = a[i][c] / piv
            if f:
                for j in range(c, n):
                    a[i][j] -= f * a[c][j]
    return det
