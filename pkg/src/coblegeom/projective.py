"""Points and labeled point configurations in projective space over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import InsufficientGeneralPosition
from .linalg import RationalMatrix, inverse, rank, solve, to_rational


class ProjectivePoint:
    """A point of P^d given by d+1 homogeneous coordinates, not all zero.

    Two points compare equal when their coordinate vectors are proportional.
    """

    __slots__ = ("coords", "_key")

    def __init__(self, coords: Iterable):
        c = tuple(to_rational(x) for x in coords)
        if not c:
            raise ValueError("a projective point needs at least one coordinate")
        lead = next((x for x in c if x != 0), None)
        if lead is None:
            raise ValueError("all homogeneous coordinates are zero")
        self.coords = c
        self._key = tuple(x / lead for x in c)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return "(" + ":".join(str(x) for x in self.coords) + ")"

    def normalized(self) -> "ProjectivePoint":
        """Representative whose first nonzero coordinate is 1."""
        return ProjectivePoint(self._key)

    def integral(self) -> "ProjectivePoint":
        """Representative with coprime integer coordinates, first nonzero one positive."""
        den = 1
        for x in self._key:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in self._key]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return ProjectivePoint(x // g for x in ints)

    def scaled(self, factor) -> "ProjectivePoint":
        f = to_rational(factor)
        if f == 0:
            raise ValueError("cannot scale by zero")
        return ProjectivePoint(x * f for x in self.coords)


def _point(p) -> ProjectivePoint:
    return p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)


@dataclass(frozen=True)
class ProjectiveConfiguration:
    """n labeled points of P^d; the label of ``points[i]`` is ``i + 1``."""

    ambient_dim: int
    points: tuple[ProjectivePoint, ...]

    def __init__(self, ambient_dim: int, points: Iterable):
        pts = tuple(_point(p) for p in points)
        if ambient_dim < 0:
            raise ValueError("ambient dimension must be non-negative")
        if not pts:
            raise ValueError("a configuration needs at least one point")
        for i, p in enumerate(pts, 1):
            if p.dim != ambient_dim:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {ambient_dim + 1}")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ProjectiveConfiguration":
        rows = list(rows)
        return cls(len(rows[0]) - 1, rows)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def __len__(self) -> int:
        return len(self.points)

    def point(self, label: int) -> ProjectivePoint:
        return self.points[label - 1]

    def matrix(self) -> RationalMatrix:
        """The n x (d+1) matrix whose rows are the stored coordinates."""
        return RationalMatrix([p.coords for p in self.points], self.ambient_dim + 1)

    def transform(self, a) -> "ProjectiveConfiguration":
        """Apply the (d+1)x(d+1) matrix ``a`` to every point (as column vectors)."""
        a = a if isinstance(a, RationalMatrix) else RationalMatrix(a)
        return ProjectiveConfiguration(self.ambient_dim, [a.apply(p.coords) for p in self.points])

    def relabel(self, perm: Sequence[int]) -> "ProjectiveConfiguration":
        """New configuration whose point with label i is this one's point ``perm[i-1]``."""
        if sorted(perm) != list(self.labels):
            raise ValueError("not a permutation of the labels")
        return ProjectiveConfiguration(self.ambient_dim, [self.point(j) for j in perm])

    def rescale(self, factors: Sequence) -> "ProjectiveConfiguration":
        return ProjectiveConfiguration(self.ambient_dim, [p.scaled(f) for p, f in zip(self.points, factors, strict=True)])

    def span_dimension(self, labels: Iterable[int]) -> int:
        """Vector-space dimension of the span of the chosen points."""
        rows = [self.point(i).coords for i in labels]
        return rank(rows) if rows else 0


def in_general_position(points: Sequence[ProjectivePoint]) -> bool:
    """True when every d+1 of the given points are linearly independent."""
    d1 = len(points[0])
    if len(points) < d1:
        return rank([p.coords for p in points]) == len(points)
    return all(rank([p.coords for p in sub]) == d1 for sub in combinations(points, d1))


def frame_matrix(frame: Sequence[ProjectivePoint]) -> RationalMatrix:
    """Matrix sending e_0..e_d to the first d+1 frame points and (1,..,1) to the last.

    ``frame`` has d+2 points in general position.
    """
    basis, last = frame[:-1], frame[-1]
    cols = RationalMatrix.from_columns([p.coords for p in basis])
    c = solve(cols, last.coords)
    return RationalMatrix.from_columns([[x * ci for x in p.coords] for p, ci in zip(basis, c)])


def common_frame(a: ProjectiveConfiguration, b: ProjectiveConfiguration) -> tuple[int, ...] | None:
    """Lexicographically first label tuple of size d+2 in general position in both."""
    k = a.ambient_dim + 2
    for labels in combinations(a.labels, k):
        if in_general_position([a.point(i) for i in labels]) and in_general_position([b.point(i) for i in labels]):
            return labels
    return None


def find_projective_equivalence(a: ProjectiveConfiguration, b: ProjectiveConfiguration) -> RationalMatrix | None:
    """An invertible matrix T with T a_i proportional to b_i for every label, or None.

    Both configurations are moved to the standard frame on a common frame
    subset; they are equivalent exactly when the remaining points then agree.

    Raises:
        InsufficientGeneralPosition: no label subset of size d+2 is a frame in both.
    """
    if a.ambient_dim != b.ambient_dim or a.n != b.n:
        raise ValueError("configurations must share ambient dimension and labels")
    labels = common_frame(a, b)
    if labels is None:
        raise InsufficientGeneralPosition(
            f"no {a.ambient_dim + 2} labels are in general position in both configurations"
        )
    ma = frame_matrix([a.point(i) for i in labels])
    mb = frame_matrix([b.point(i) for i in labels])
    ma_inv, mb_inv = inverse(ma), inverse(mb)
    for pa, pb in zip(a.points, b.points):
        if ProjectivePoint(ma_inv.apply(pa.coords)) != ProjectivePoint(mb_inv.apply(pb.coords)):
            return None
    return mb @ ma_inv


def projective_equivalent(a: ProjectiveConfiguration, b: ProjectiveConfiguration) -> bool:
    return find_projective_equivalence(a, b) is not None
