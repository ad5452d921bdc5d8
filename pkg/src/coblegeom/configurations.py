"""GIT stability of point configurations, the Gale transform, and the conic test.

A configuration of n = r*g points in P^(r-1) is semistable when no k of its
points span a linear subspace of vector dimension s with k > g*s, and stable
when k < g*s for every subset whose span is a proper subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DegenerateConfiguration, DimensionMismatch, RowDegenerate
from .linalg import RationalMatrix, nullspace_basis, rank
from .projective import ProjectiveConfiguration, ProjectivePoint

STABLE = "stable"
STRICTLY_SEMISTABLE = "strictly-semistable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of the subset criterion.

    ``witness`` is the proper-span subset with the largest ratio k/s, ties
    broken by smaller s and then by the lexicographically first label tuple.
    That subset is always closed (it contains every point of its span).
    """

    status: str
    genus: int
    witness: tuple[int, ...]
    span_dim: int

    @property
    def size(self) -> int:
        return len(self.witness)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.size, self.span_dim)

    @property
    def semistable(self) -> bool:
        return self.status != UNSTABLE

    @property
    def stable(self) -> bool:
        return self.status == STABLE

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "genus": self.genus,
            "witness": list(self.witness),
            "span_dim": self.span_dim,
            "size": self.size,
        }


def genus_of(v: ProjectiveConfiguration, g: int | None = None) -> int:
    """Check n = (d+1)*g and return g (inferred from n when not given)."""
    r = v.ambient_dim + 1
    if g is None:
        if v.n % r:
            raise DimensionMismatch(f"{v.n} points cannot be r*g with r = {r}")
        g = v.n // r
    if v.n != r * g:
        raise DimensionMismatch(f"expected {r * g} points in P^{r - 1} for g = {g}, got {v.n}")
    if g < 2:
        raise DimensionMismatch(f"genus must be at least 2, got {g}")
    return g


def _classify(best_ratio: Fraction, g: int) -> str:
    if best_ratio > g:
        return UNSTABLE
    if best_ratio == g:
        return STRICTLY_SEMISTABLE
    return STABLE


def _better(cand: tuple, best: tuple | None) -> bool:
    # cand/best = (ratio, s, labels)
    if best is None:
        return True
    if cand[0] != best[0]:
        return cand[0] > best[0]
    if cand[1] != best[1]:
        return cand[1] < best[1]
    return cand[2] < best[2]


def git_verdict_bruteforce(v: ProjectiveConfiguration, g: int | None = None) -> StabilityVerdict:
    """Check the subset criterion on all 2^n - 1 nonempty label subsets."""
    g = genus_of(v, g)
    r = v.ambient_dim + 1
    n = v.n
    # subsets are bitmasks over labels; spans depend only on the distinct points hit
    index: dict[ProjectivePoint, int] = {}
    point_bit = [1 << index.setdefault(p, len(index)) for p in v.points]
    distinct = list(index)
    hit = [0] * (1 << n)
    size = [0] * (1 << n)
    span_of: dict[int, int] = {}
    best = None
    violates_semi = False
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        hit[mask] = h = hit[rest] | point_bit[low.bit_length() - 1]
        size[mask] = k = size[rest] + 1
        s = span_of.get(h)
        if s is None:
            s = span_of[h] = rank([p.coords for j, p in enumerate(distinct) if h >> j & 1])
        if k > g * s:
            violates_semi = True
        if s < r:
            ratio = Fraction(k, s)
            if best is None or ratio >= best[0]:
                cand = (ratio, s, tuple(j + 1 for j in range(n) if mask >> j & 1))
                if _better(cand, best):
                    best = cand
    status = _classify(best[0], g)
    assert (status == UNSTABLE) == violates_semi
    return StabilityVerdict(status, g, best[2], best[1])


def max_points_per_dimension(v: ProjectiveConfiguration) -> dict[int, int]:
    """For each s in 1..r-1, the most points lying in one s-dimensional subspace."""
    return _flats(v)[0]


def _flats(v: ProjectiveConfiguration):
    r = v.ambient_dim + 1
    n = v.n
    total = rank(v.matrix())
    # first label carrying each distinct point
    reps: dict[ProjectivePoint, int] = {}
    for i, p in enumerate(v.points, 1):
        reps.setdefault(p, i)
    distinct = sorted(reps.values())
    maxima: dict[int, int] = {}
    flats: list[tuple[int, tuple[int, ...]]] = []
    for s in range(1, r):
        if total < s:
            maxima[s] = n
            continue
        seen = set()
        top = 0
        for basis in combinations(distinct, s):
            rows = [v.point(i).coords for i in basis]
            if rank(rows) < s:
                continue
            members = tuple(j for j in range(1, n + 1) if rank(rows + [v.point(j).coords]) == s)
            if members in seen:
                continue
            seen.add(members)
            flats.append((s, members))
            top = max(top, len(members))
        maxima[s] = top
    return maxima, flats


def git_verdict(v: ProjectiveConfiguration, g: int | None = None) -> StabilityVerdict:
    """GIT verdict from the per-dimension maxima over linear subspaces.

    Only subspaces spanned by points need checking: a subset that spans s
    dimensions is contained in the span of s of its own points.

    Raises:
        DimensionMismatch: if n != (d+1)*g or g < 2.
    """
    g = genus_of(v, g)
    maxima, flats = _flats(v)
    best = None
    for s, members in flats:
        cand = (Fraction(len(members), s), s, members)
        if _better(cand, best):
            best = cand
    status = _classify(best[0], g)
    semistable = all(m <= g * s for s, m in maxima.items())
    stable = all(m < g * s for s, m in maxima.items())
    assert semistable == (status != UNSTABLE) and stable == (status == STABLE)
    return StabilityVerdict(status, g, best[2], best[1])


def gale(v: ProjectiveConfiguration, target_dim: int | None = None) -> ProjectiveConfiguration:
    """Gale transform of gamma = r+s+2 points of P^r into P^s.

    The rows of a kernel basis of G^T give the new points, so G^T G' = 0
    holds exactly with the diagonal scaling taken to be the identity.

    Raises:
        DimensionMismatch: too few points, or ``target_dim`` != gamma - r - 2.
        DegenerateConfiguration: the points span less than all of P^r.
        RowDegenerate: some transformed point would have all coordinates zero.
    """
    r = v.ambient_dim
    gamma = v.n
    s = gamma - r - 2
    if s < 0:
        raise DimensionMismatch(f"{gamma} points in P^{r} have no Gale transform (need at least {r + 2})")
    if target_dim is not None and target_dim != s:
        raise DimensionMismatch(f"{gamma} points of P^{r} transform into P^{s}, not P^{target_dim}")
    g_mat = v.matrix()
    if rank(g_mat) < r + 1:
        raise DegenerateConfiguration(f"the {gamma} points do not span P^{r}")
    kernel = nullspace_basis(g_mat.transpose())
    assert kernel.ncols == s + 1
    rows = kernel.rows
    for i, row in enumerate(rows, 1):
        if all(x == 0 for x in row):
            raise RowDegenerate(f"point {i} of the transform is undefined")
    return ProjectiveConfiguration(s, rows)


def gale_residual(v: ProjectiveConfiguration, w: ProjectiveConfiguration) -> RationalMatrix:
    """G^T G' for two configurations with the same labels."""
    return v.matrix().transpose() @ w.matrix()


def conic_monomials(p: ProjectivePoint) -> list[Fraction]:
    x, y, z = p.coords
    return [x * x, x * y, x * z, y * y, y * z, z * z]


def lies_on_conic(v: ProjectiveConfiguration) -> bool:
    """Whether six points of P^2 lie on one conic (possibly singular)."""
    if v.ambient_dim != 2 or v.n != 6:
        raise DimensionMismatch("the conic test takes 6 points of P^2")
    return rank([conic_monomials(p) for p in v.points]) < 6
