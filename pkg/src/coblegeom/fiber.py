"""Combinatorial model of a fiber of the fundamental map.

A bundle in the fiber over B = x_1 + ... + x_n (n = r*g) is recorded by the
covectors v_i in P^(r-1) attached to the support points: its dual is the
kernel of the evaluation V (x) O_C -> O_B. Support points are formal labels;
collisions between them are given as a partition of the labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .configurations import STABLE, STRICTLY_SEMISTABLE, UNSTABLE, StabilityVerdict
from .errors import DimensionMismatch, SupportOnBigDiagonal, Unsupported
from .linalg import RationalMatrix, rank
from .projective import ProjectiveConfiguration, ProjectivePoint

Partition = tuple[tuple[int, ...], ...]


def _normalize_collisions(collisions: Iterable[Iterable[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Blocks of the collision partition, singletons included, sorted."""
    seen: set[int] = set()
    blocks = []
    for block in collisions:
        b = tuple(sorted(set(block)))
        if not b:
            continue
        if any(i < 1 or i > n for i in b):
            raise ValueError(f"collision labels must lie in 1..{n}")
        if seen & set(b):
            raise ValueError("collision blocks overlap")
        seen |= set(b)
        blocks.append(b)
    blocks += [(i,) for i in range(1, n + 1) if i not in seen]
    return tuple(sorted(blocks))


@dataclass(frozen=True)
class FiberDatum:
    genus: int
    rank: int
    config: ProjectiveConfiguration
    collisions: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.genus < 2 or self.rank < 2:
            raise DimensionMismatch("genus and rank must both be at least 2")
        if self.config.ambient_dim != self.rank - 1:
            raise DimensionMismatch(f"covectors of a rank {self.rank} bundle live in P^{self.rank - 1}")
        if self.config.n != self.rank * self.genus:
            raise DimensionMismatch(f"expected {self.rank * self.genus} support points, got {self.config.n}")
        object.__setattr__(self, "collisions", _normalize_collisions(self.collisions, self.config.n))

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def distinct_support(self) -> bool:
        return all(len(b) == 1 for b in self.collisions)


@dataclass(frozen=True)
class KernelPresentation:
    """The r x n matrix whose column i is the chosen lift of v_i.

    The bundle has rank r, degree n and determinant O(x_1 + ... + x_n).
    """

    matrix: RationalMatrix
    labels: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    @property
    def degree(self) -> int:
        return self.matrix.ncols

    @property
    def determinant(self) -> str:
        return "O(" + " + ".join(f"x{i}" for i in self.labels) + ")"

    def equivalent(self, other: "KernelPresentation") -> bool:
        """Same kernel: the columns agree up to nonzero scalars."""
        if self.labels != other.labels or self.matrix.shape != other.matrix.shape:
            return False
        return all(
            ProjectivePoint(a) == ProjectivePoint(b) for a, b in zip(self.matrix.columns(), other.matrix.columns())
        )


def kernel_presentation(f: FiberDatum) -> KernelPresentation:
    """Covector matrix of the evaluation map at the support points.

    Raises:
        SupportOnBigDiagonal: some support points coincide.
    """
    if not f.distinct_support:
        blocks = [list(b) for b in f.collisions if len(b) > 1]
        raise SupportOnBigDiagonal(f"support points coincide: {blocks}")
    cols = [p.coords for p in f.config.points]
    return KernelPresentation(RationalMatrix.from_columns(cols), f.config.labels)


@dataclass(frozen=True)
class SubsheafSlope:
    labels: tuple[int, ...]
    degree: int  # k; the subsheaf has degree -k
    rank: int  # s

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.degree, self.rank)


@dataclass(frozen=True)
class SlopeReport:
    verdict: StabilityVerdict
    entries: tuple[SubsheafSlope, ...]


def slope_report(f: FiberDatum) -> SlopeReport:
    """Slopes -k/s of the subsheaves cut out by every nonempty label subset.

    The bundle is semistable when no slope drops below -g, and stable when
    the slope stays above -g for every subset spanning a proper subspace.
    """
    g, r, n = f.genus, f.rank, f.n
    cols = [p.coords for p in f.config.points]
    entries = []
    for k in range(1, n + 1):
        for labels in combinations(range(1, n + 1), k):
            s = rank([cols[i - 1] for i in labels])
            entries.append(SubsheafSlope(labels, k, s))
    proper = [e for e in entries if e.rank < r]
    # steepest subsheaf: lowest slope, then lowest rank, then first labels
    worst = min(proper, key=lambda e: (e.slope, e.rank, e.labels))
    bound = Fraction(-g)
    if any(e.slope < bound for e in entries):
        status = UNSTABLE
    elif any(e.slope == bound for e in proper):
        status = STRICTLY_SEMISTABLE
    else:
        status = STABLE
    return SlopeReport(StabilityVerdict(status, g, worst.labels, worst.rank), tuple(entries))


def detect_decomposable(f: FiberDatum) -> Partition | None:
    """Split the labels into r groups of g with equal covectors in each group.

    Returns the groups (sorted) when the covectors take exactly r values,
    each g times, on linearly independent directions; such a datum is the
    sum of the line bundles O(sum of the support points of a group).
    """
    groups: dict[ProjectivePoint, list[int]] = {}
    for i, p in enumerate(f.config.points, 1):
        groups.setdefault(p, []).append(i)
    if len(groups) != f.rank or any(len(ls) != f.genus for ls in groups.values()):
        return None
    if rank([p.coords for p in groups]) != f.rank:
        return None
    return tuple(sorted(tuple(ls) for ls in groups.values()))


def line_bundle_sum(partition: Partition) -> str:
    return " + ".join("O(" + "+".join(f"x{i}" for i in grp) + ")" for grp in partition)


def decomposable_datum(partition: Partition, genus: int) -> FiberDatum:
    """Coordinate-covector datum realising a given grouping: group j gets e_j*."""
    r = len(partition)
    n = sum(len(grp) for grp in partition)
    coords = [None] * n
    for j, grp in enumerate(partition):
        for i in grp:
            coords[i - 1] = [1 if c == j else 0 for c in range(r)]
    return FiberDatum(genus, r, ProjectiveConfiguration(r - 1, coords))


# (rank, genus) of the two worked fibers with six support points
CASE_STUDIES = {2: 3, 3: 2}


def set_partitions(labels: Sequence[int], block_size: int) -> list[Partition]:
    """Partitions of ``labels`` into blocks of one size, blocks sorted."""
    labels = sorted(labels)
    if not labels:
        return [()]
    first, rest = labels[0], labels[1:]
    out = []
    for others in combinations(rest, block_size - 1):
        block = (first,) + others
        remaining = [x for x in rest if x not in others]
        for tail in set_partitions(remaining, block_size):
            out.append((block,) + tail)
    return out


def _block_pattern(partition: Partition, block_of: dict[int, int]) -> tuple:
    return tuple(sorted(tuple(sorted(block_of[i] for i in grp)) for grp in partition))


@dataclass(frozen=True)
class DecomposableClass:
    representative: Partition
    multiplicity: int


def enumerate_decomposables(rank: int, collisions: Iterable[Iterable[int]] = ()) -> list[DecomposableClass]:
    """Totally decomposable bundles over six support points, merged under collisions.

    Two groupings are identified when a permutation preserving every
    collision block carries one to the other; with distinct support this
    gives 15 groupings into pairs (rank 3) and 10 into triples (rank 2).

    Raises:
        Unsupported: rank outside {2, 3}.
    """
    if rank not in CASE_STUDIES:
        raise Unsupported(f"decomposable enumeration covers ranks 2 and 3, not {rank}")
    g = CASE_STUDIES[rank]
    n = rank * g
    blocks = _normalize_collisions(collisions, n)
    block_of = {i: b for b, blk in enumerate(blocks) for i in blk}
    classes: dict[tuple, list[Partition]] = {}
    for part in set_partitions(range(1, n + 1), g):
        classes.setdefault(_block_pattern(part, block_of), []).append(part)
    return [DecomposableClass(parts[0], len(parts)) for parts in classes.values()]


@dataclass(frozen=True)
class IncidenceConfiguration:
    points: tuple
    lines: tuple
    flags: frozenset

    def points_on(self, line) -> list:
        return [p for p in self.points if (p, line) in self.flags]

    def lines_through(self, point) -> list:
        return [ln for ln in self.lines if (point, ln) in self.flags]

    def axioms(self) -> dict:
        per_line = {len(self.points_on(ln)) for ln in self.lines}
        per_point = {len(self.lines_through(p)) for p in self.points}
        return {
            "points": len(self.points),
            "lines": len(self.lines),
            "flags": len(self.flags),
            "points_per_line": sorted(per_line),
            "lines_per_point": sorted(per_point),
        }

    def is_15_3(self) -> bool:
        a = self.axioms()
        return (a["points"], a["lines"], a["flags"], a["points_per_line"], a["lines_per_point"]) == (
            15,
            15,
            45,
            [3],
            [3],
        )


def incidence_15_3(labels: Sequence[int] = (1, 2, 3, 4, 5, 6)) -> IncidenceConfiguration:
    """Points: the 15 splittings into pairs; lines: the 15 pairs; a pair lies on a splitting using it."""
    labels = tuple(labels)
    if len(labels) != 6 or len(set(labels)) != 6:
        raise DimensionMismatch("the 15_3 configuration needs 6 distinct labels")
    pts = tuple(set_partitions(labels, 2))
    lines = tuple(combinations(sorted(labels), 2))
    flags = frozenset((p, ln) for p in pts for ln in p)
    return IncidenceConfiguration(pts, lines, flags)


def degenerate_incidence(collisions: Iterable[Iterable[int]]) -> dict:
    """Distinct points and lines of the 15_3 configuration once labels collide."""
    blocks = _normalize_collisions(collisions, 6)
    block_of = {i: b for b, blk in enumerate(blocks) for i in blk}
    inc = incidence_15_3()
    pts = {_block_pattern(p, block_of) for p in inc.points}
    lines = {tuple(sorted(block_of[i] for i in ln)) for ln in inc.lines}
    flags = {(_block_pattern(p, block_of), tuple(sorted(block_of[i] for i in ln))) for p, ln in inc.flags}
    return {"points": len(pts), "lines": len(lines), "flags": len(flags)}


def fiber_dimension(r: int, g: int) -> int:
    """dim U(r, g) - dim C^(rg)."""
    _check_rg(r, g)
    return (r * r - r) * g - (r * r - 1)


def quotient_dimension(r: int, g: int) -> int:
    """dim (P^(r-1))^(rg) // PGL(r)."""
    _check_rg(r, g)
    return (r - 1) * r * g - (r * r - 1)


def _check_rg(r: int, g: int) -> None:
    if r < 2 or g < 2:
        raise DimensionMismatch("rank and genus must both be at least 2")
