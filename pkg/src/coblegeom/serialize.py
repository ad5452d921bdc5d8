"""JSON forms of the exact objects. Rationals travel as "p/q" strings."""

from __future__ import annotations

from typing import Any

from .configurations import StabilityVerdict
from .fiber import FiberDatum, KernelPresentation
from .linalg import RationalMatrix, format_rational, to_rational
from .polynomials import Hypersurface, SparsePolynomial
from .projective import ProjectiveConfiguration, ProjectivePoint


class MalformedInput(ValueError):
    pass


def _require(obj: Any, key: str, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedInput(f"missing field {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise MalformedInput(f"field {key!r} has the wrong type")
    return val


def _rational(x):
    if isinstance(x, float):
        raise MalformedInput(f"inexact number {x!r}; write rationals as \"p/q\" strings")
    try:
        return to_rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(str(exc)) from None


def point_to_json(p: ProjectivePoint) -> list[str]:
    return [format_rational(x) for x in p.coords]


def matrix_to_json(m: RationalMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.rows]


def matrix_from_json(rows) -> RationalMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInput("a matrix is a list of rows")
    try:
        return RationalMatrix([[_rational(x) for x in r] for r in rows])
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def config_to_json(v: ProjectiveConfiguration) -> dict:
    return {"ambient_dim": v.ambient_dim, "points": [point_to_json(p) for p in v.points]}


def config_from_json(obj) -> ProjectiveConfiguration:
    """Accepts a configuration object, or any report embedding one under ``"config"``."""
    if isinstance(obj, dict) and "config" in obj and "points" not in obj:
        obj = obj["config"]
    d = _require(obj, "ambient_dim", int)
    rows = _require(obj, "points", list)
    pts = matrix_from_json(rows).rows if rows else ()
    try:
        return ProjectiveConfiguration(d, pts)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def poly_to_json(f: SparsePolynomial) -> dict:
    return {
        "vars": f.num_vars,
        "terms": [{"exp": list(e), "coef": format_rational(c)} for e, c in f.sorted_terms()],
    }


def poly_from_json(obj) -> SparsePolynomial:
    n = _require(obj, "vars", int)
    terms = _require(obj, "terms", list)
    out = []
    for t in terms:
        exp = _require(t, "exp", list)
        if not all(isinstance(e, int) and e >= 0 for e in exp):
            raise MalformedInput("exponents are non-negative integers")
        out.append((tuple(exp), _rational(_require(t, "coef"))))
    try:
        return SparsePolynomial(n, out)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def hypersurface_from_json(obj) -> Hypersurface:
    try:
        return Hypersurface.of(poly_from_json(obj))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def verdict_to_json(v: StabilityVerdict) -> dict:
    return v.as_dict()


def datum_to_json(f: FiberDatum) -> dict:
    return {
        "genus": f.genus,
        "rank": f.rank,
        "collisions": [list(b) for b in f.collisions if len(b) > 1],
        "config": config_to_json(f.config),
    }


def datum_from_json(obj) -> FiberDatum:
    """Accepts a datum, or a report embedding one under ``"datum"``."""
    if isinstance(obj, dict) and "datum" in obj and "genus" not in obj:
        obj = obj["datum"]
    g = _require(obj, "genus", int)
    r = _require(obj, "rank", int)
    collisions = obj.get("collisions", []) if isinstance(obj, dict) else []
    if not isinstance(collisions, list) or not all(
        isinstance(b, list) and all(isinstance(i, int) for i in b) for b in collisions
    ):
        raise MalformedInput("collisions is a list of label lists")
    config = config_from_json(_require(obj, "config", dict))
    try:
        return FiberDatum(g, r, config, tuple(tuple(b) for b in collisions))
    except ValueError as exc:
        if hasattr(exc, "code"):
            raise
        raise MalformedInput(str(exc)) from None


def presentation_to_json(k: KernelPresentation) -> dict:
    return {
        "matrix": matrix_to_json(k.matrix),
        "labels": list(k.labels),
        "rank": k.rank,
        "degree": k.degree,
        "determinant": k.determinant,
    }
