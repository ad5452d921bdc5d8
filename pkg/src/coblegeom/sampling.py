"""Seeded generators for random exact inputs.

Every consumer asks for its own named stream derived from one integer seed,
so adding a draw in one place never shifts the numbers seen elsewhere.
"""

from __future__ import annotations

import random

from .linalg import RationalMatrix, rank
from .projective import ProjectiveConfiguration, ProjectivePoint


def stream(seed: int, name: str) -> random.Random:
    if seed < 0:
        raise ValueError("seeds are unsigned")
    return random.Random(f"coblegeom/{seed}/{name}")


def random_vector(rng: random.Random, length: int, bound: int) -> list[int]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(length)]
        if any(v):
            return v


def random_configuration(rng: random.Random, ambient_dim: int, n: int, bound: int = 9) -> ProjectiveConfiguration:
    return ProjectiveConfiguration(ambient_dim, [random_vector(rng, ambient_dim + 1, bound) for _ in range(n)])


def distinct_line_points(rng: random.Random, n: int, bound: int = 12) -> list[ProjectivePoint]:
    """n pairwise distinct points of P^1 with small integer coordinates."""
    pts: list[ProjectivePoint] = []
    while len(pts) < n:
        p = ProjectivePoint(random_vector(rng, 2, bound))
        if p not in pts:
            pts.append(p)
    return pts


def random_invertible(rng: random.Random, size: int, bound: int = 5) -> RationalMatrix:
    while True:
        m = RationalMatrix([[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)])
        if rank(m) == size:
            return m


def random_conic_configuration(rng: random.Random, n: int = 6, bound: int = 9) -> ProjectiveConfiguration:
    """n distinct points on a random smooth conic of P^2.

    Points (a^2 : ab : b^2) of the conic xz = y^2 are moved by a random
    invertible matrix.
    """
    params = distinct_line_points(rng, n, bound)
    pts = [[a * a, a * b, b * b] for a, b in (p.coords for p in params)]
    return ProjectiveConfiguration(2, pts).transform(random_invertible(rng, 3))
