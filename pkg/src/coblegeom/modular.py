"""The Segre cubic and the Igusa quartic, built from invariants of six points on a line.

For six points (u_i : w_i) of P^1 write b_ij = u_i w_j - u_j w_i. Each perfect
matching of {1..6} gives the invariant prod b_ij over its pairs. The fifteen
matching invariants span a 5-dimensional space; five independent ones map a
configuration to P^4, the image is a cubic threefold with ten nodes, and the
gradient image of that cubic is the dual quartic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NonuniqueCubic,
    NonuniqueQuartic,
    RankDeficiency,
    VanishingInvariants,
)
from .linalg import rank, row_echelon
from .polynomials import (
    Hypersurface,
    evaluate,
    gradient_map,
    hessian_rank_at,
    interpolate_hypersurface,
    monomial_count,
)
from .projective import ProjectiveConfiguration, ProjectivePoint
from .sampling import distinct_line_points, random_invertible, stream

Pair = tuple[int, int]
Matching = tuple[Pair, Pair, Pair]
Partition = tuple[tuple[int, ...], ...]

KAPPA_DIM = 5
SEGRE_SAMPLE_FLOOR = 42
IGUSA_SAMPLE_FLOOR = 90


def perfect_matchings(labels: Sequence[int]) -> list[tuple[Pair, ...]]:
    """All perfect matchings of an even label list, pairs sorted, in lex order."""
    labels = sorted(labels)
    if not labels:
        return [()]
    first, rest = labels[0], labels[1:]
    out = []
    for partner in rest:
        remaining = [x for x in rest if x != partner]
        for m in perfect_matchings(remaining):
            out.append(((first, partner),) + m)
    return sorted(out)


MATCHINGS: list[Matching] = perfect_matchings(range(1, 7))


def triple_partitions() -> list[Partition]:
    """The ten splittings of {1..6} into two triples, the triple holding 1 first."""
    out = []
    for rest in combinations(range(2, 7), 2):
        a = (1,) + rest
        b = tuple(x for x in range(1, 7) if x not in a)
        out.append((a, b))
    return out


def _check_six_on_line(v: ProjectiveConfiguration) -> None:
    if v.ambient_dim != 1 or v.n != 6:
        raise DimensionMismatch("matching invariants take 6 points of P^1")


def bracket(p: ProjectivePoint, q: ProjectivePoint) -> Fraction:
    (u1, w1), (u2, w2) = p.coords, q.coords
    return u1 * w2 - u2 * w1


def matching_values(v: ProjectiveConfiguration) -> dict[Matching, Fraction]:
    """The fifteen matching invariants of six labeled points of P^1."""
    _check_six_on_line(v)
    b = {(i, j): bracket(v.point(i), v.point(j)) for i, j in combinations(range(1, 7), 2)}
    return {m: b[m[0]] * b[m[1]] * b[m[2]] for m in MATCHINGS}


@dataclass(frozen=True)
class MatchingInvariantBasis:
    """Five independent matchings plus the relations giving the other ten.

    ``relations[m]`` are the coefficients of matching ``m`` in terms of
    ``selected``; each selected matching maps to its own unit vector.
    """

    selected: tuple[Matching, ...]
    relations: dict[Matching, tuple[Fraction, ...]] = field(hash=False)
    all_matchings: tuple[Matching, ...] = tuple(MATCHINGS)

    def kappa(self, v: ProjectiveConfiguration) -> ProjectivePoint:
        """The selected invariants as a point of P^4.

        Raises:
            VanishingInvariants: all invariants vanish (four or more coincident points).
        """
        vals = matching_values(v)
        coords = [vals[m] for m in self.selected]
        if all(x == 0 for x in coords):
            raise VanishingInvariants("every matching invariant vanishes on this configuration")
        return ProjectivePoint(coords).integral()

    def predicted(self, values: dict[Matching, Fraction]) -> dict[Matching, Fraction]:
        """All fifteen values reconstructed from the selected five."""
        base = [values[m] for m in self.selected]
        return {m: sum((c * x for c, x in zip(self.relations[m], base)), Fraction(0)) for m in self.all_matchings}


def random_line_configuration(rng, bound: int = 12) -> ProjectiveConfiguration:
    return ProjectiveConfiguration(1, distinct_line_points(rng, 6, bound))


def build_kappa(seed: int = 0, samples: int = 30, attempts: int = 3) -> MatchingInvariantBasis:
    """Pick the lex-first five independent matchings and record the relations.

    Raises:
        RankDeficiency: the sampled evaluation matrix never reaches rank 5.
    """
    rng = stream(seed, "kappa")
    for _ in range(attempts):
        rows = []
        for _ in range(samples):
            vals = matching_values(random_line_configuration(rng))
            rows.append([vals[m] for m in MATCHINGS])
        rref, pivots = row_echelon(rows)
        if len(pivots) != KAPPA_DIM:
            continue
        selected = tuple(MATCHINGS[j] for j in pivots)
        relations = {m: tuple(rref[i][j] for i in range(KAPPA_DIM)) for j, m in enumerate(MATCHINGS)}
        basis = MatchingInvariantBasis(selected, relations)
        fresh = stream(seed, "kappa-check")
        for _ in range(20):
            vals = matching_values(random_line_configuration(fresh))
            if basis.predicted(vals) != vals:
                raise RankDeficiency("recorded relations fail on a fresh configuration")
        return basis
    raise RankDeficiency(f"matching invariants never reached rank {KAPPA_DIM} on {samples} samples")


def evaluation_rank(seed: int = 0, samples: int = 30) -> int:
    """Rank of the samples x 15 matrix of matching invariants."""
    rng = stream(seed, "kappa")
    rows = []
    for _ in range(samples):
        vals = matching_values(random_line_configuration(rng))
        rows.append([vals[m] for m in MATCHINGS])
    return rank(rows)


def node_configuration(partition: Partition, a=(1, 0), b=(0, 1)) -> ProjectiveConfiguration:
    """Points of one triple at ``a``, the complementary triple at ``b``."""
    first, _ = partition
    return ProjectiveConfiguration(1, [a if i in first else b for i in range(1, 7)])


def node_points(basis: MatchingInvariantBasis) -> list[tuple[Partition, ProjectivePoint]]:
    """Images of the ten strictly semistable triple-triple configurations."""
    return [(part, basis.kappa(node_configuration(part))) for part in triple_partitions()]


def kappa_samples(basis: MatchingInvariantBasis, rng, count: int) -> list[ProjectivePoint]:
    return [basis.kappa(random_line_configuration(rng)) for _ in range(count)]


def default_samples(num_vars: int, degree: int, floor: int) -> int:
    """Monomial count plus 20%, never below ``floor``."""
    return max(math.ceil(monomial_count(num_vars, degree) * 6 / 5), floor)


def build_segre_cubic(basis: MatchingInvariantBasis, seed: int = 0, samples: int | None = None) -> Hypersurface:
    """The unique cubic through sampled kappa-images, in canonical scaling.

    Raises:
        NonuniqueCubic: the cubics through the samples do not form a single line.
    """
    count = samples or default_samples(5, 3, SEGRE_SAMPLE_FLOOR)
    pts = kappa_samples(basis, stream(seed, "segre-fit"), count)
    found = interpolate_hypersurface(pts, 3)
    if len(found) != 1:
        raise NonuniqueCubic(f"{len(found)}-dimensional space of cubics through {count} samples")
    return Hypersurface.of(found[0])


def smooth_cubic_samples(cubic: Hypersurface, basis: MatchingInvariantBasis, rng, count: int) -> list[ProjectivePoint]:
    """kappa-images at which the cubic is smooth."""
    out = []
    while len(out) < count:
        p = basis.kappa(random_line_configuration(rng))
        if not cubic.is_singular_at(p):
            out.append(p)
    return out


def dual_points(cubic: Hypersurface, pts: Sequence[ProjectivePoint]) -> list[ProjectivePoint]:
    return [gradient_map(cubic, p).integral() for p in pts]


def build_dual_quartic(
    cubic: Hypersurface,
    seed: int = 0,
    samples: int | None = None,
    basis: MatchingInvariantBasis | None = None,
) -> Hypersurface:
    """Quartic through the gradient images of smooth points of the cubic.

    Raises:
        NonuniqueQuartic: the quartics through the samples do not form a single line.
    """
    basis = basis or build_kappa(seed)
    count = samples or default_samples(5, 4, IGUSA_SAMPLE_FLOOR)
    pts = smooth_cubic_samples(cubic, basis, stream(seed, "igusa-fit"), count)
    found = interpolate_hypersurface(dual_points(cubic, pts), 4)
    if len(found) != 1:
        raise NonuniqueQuartic(f"{len(found)}-dimensional space of quartics through {count} samples")
    return Hypersurface.of(found[0])


def check_segre(cubic: Hypersurface, basis: MatchingInvariantBasis, seed: int = 0, holdout: int = 20) -> dict:
    """Holdout vanishing, node singularity and Hessian ranks, smoothness of generic images."""
    rng = stream(seed, "segre-holdout")
    held = kappa_samples(basis, rng, holdout)
    nodes = node_points(basis)
    node_pts = [p for _, p in nodes]
    alt = [basis.kappa(node_configuration(part, (2, 3), (-1, 5))) for part, _ in nodes]
    generic = kappa_samples(basis, rng, holdout)
    return {
        "holdout_vanishing": all(cubic.contains(p) for p in held),
        "node_count": len(node_pts),
        "nodes_distinct": len(set(node_pts)) == len(node_pts),
        "nodes_support_independent": alt == node_pts,
        "nodes_on_cubic": all(cubic.contains(p) for p in node_pts),
        "nodes_singular": all(cubic.is_singular_at(p) for p in node_pts),
        "node_hessian_ranks": [hessian_rank_at(cubic, p) for p in node_pts],
        "generic_gradient_nonzero": all(not cubic.is_singular_at(p) for p in generic),
    }


def check_biduality(
    cubic: Hypersurface,
    quartic: Hypersurface,
    basis: MatchingInvariantBasis,
    seed: int = 0,
    count: int = 30,
) -> dict:
    """Gradient images of the quartic at its sampled points must land back on the cubic."""
    rng = stream(seed, "biduality")
    pts = smooth_cubic_samples(cubic, basis, rng, count)
    duals = dual_points(cubic, pts)
    back = [gradient_map(quartic, q) for q in duals]
    return {
        "samples": count,
        "quartic_vanishes": all(quartic.contains(q) for q in duals),
        "returns_to_cubic": all(evaluate(cubic.equation, p) == 0 for p in back),
        "returns_to_start": back == pts,
    }


def check_quartic_holdout(
    cubic: Hypersurface, quartic: Hypersurface, basis: MatchingInvariantBasis, seed: int = 0, holdout: int = 20
) -> bool:
    pts = smooth_cubic_samples(cubic, basis, stream(seed, "igusa-holdout"), holdout)
    return all(quartic.contains(q) for q in dual_points(cubic, pts))


@dataclass(frozen=True)
class SegrePipelineResult:
    kappa_basis: MatchingInvariantBasis
    cubic: Hypersurface
    nodes: tuple[tuple[Partition, ProjectivePoint], ...]
    dual_quartic: Hypersurface | None
    checks: dict


def segre_pipeline(
    seed: int = 0,
    cubic_samples: int | None = None,
    quartic_samples: int | None = None,
    with_dual: bool = True,
) -> SegrePipelineResult:
    """Build kappa, the cubic, its nodes and (optionally) the dual quartic, with all checks."""
    basis = build_kappa(seed)
    cubic = build_segre_cubic(basis, seed, cubic_samples)
    checks = {"kappa_rank": evaluation_rank(seed), **check_segre(cubic, basis, seed)}
    quartic = None
    if with_dual:
        quartic = build_dual_quartic(cubic, seed, quartic_samples, basis)
        checks["quartic_holdout_vanishing"] = check_quartic_holdout(cubic, quartic, basis, seed)
        checks.update({f"biduality_{k}": v for k, v in check_biduality(cubic, quartic, basis, seed).items()})
    return SegrePipelineResult(basis, cubic, tuple(node_points(basis)), quartic, checks)


def pgl2_invariance(basis: MatchingInvariantBasis, seed: int = 0, trials: int = 100) -> bool:
    """kappa(A v) == kappa(v) for random configurations and random invertible A."""
    rng = stream(seed, "pgl2")
    for _ in range(trials):
        v = random_line_configuration(rng)
        a = random_invertible(rng, 2)
        if basis.kappa(v.transform(a)) != basis.kappa(v):
            return False
    return True
