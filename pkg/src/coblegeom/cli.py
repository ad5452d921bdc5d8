"""Command-line entry point. Every subcommand reads and writes JSON.

Exit status: 0 on success, 1 on malformed input, 2 on domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .configurations import gale, gale_residual, git_verdict, git_verdict_bruteforce, lies_on_conic, max_points_per_dimension
from .errors import DomainError
from .fiber import (
    degenerate_incidence,
    detect_decomposable,
    enumerate_decomposables,
    fiber_dimension,
    incidence_15_3,
    kernel_presentation,
    line_bundle_sum,
    quotient_dimension,
    slope_report,
)
from .modular import (
    build_dual_quartic,
    build_kappa,
    build_segre_cubic,
    check_biduality,
    segre_pipeline,
)
from .serialize import (
    MalformedInput,
    config_from_json,
    config_to_json,
    datum_from_json,
    datum_to_json,
    hypersurface_from_json,
    point_to_json,
    poly_to_json,
    presentation_to_json,
    verdict_to_json,
)

MONOMIAL_ORDER = "graded-lex, x0 > x1 > ...; canonical scaling: leading coefficient 1"

COMMANDS = ("stability", "gale", "conic", "fiber", "decomposables", "incidence", "segre", "igusa", "dual-check", "dims")


def _read_input(spec: str | None) -> Any:
    if spec is None:
        raise MalformedInput("this subcommand needs --input")
    try:
        if spec == "-":
            text = sys.stdin.read()
        elif spec.lstrip().startswith(("{", "[")):
            text = spec
        else:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(str(exc)) from None


def _collisions(args) -> list[list[int]]:
    out = []
    for item in args.collide or []:
        try:
            out.append([int(x) for x in item.split(",") if x.strip()])
        except ValueError:
            raise MalformedInput(f"--collide expects comma-separated labels, got {item!r}") from None
    return out


def _matchings_json(ms) -> list:
    return [[list(p) for p in m] for m in ms]


def cmd_stability(args) -> dict:
    data = _read_input(args.input)
    v = config_from_json(data)
    g = args.genus if args.genus is not None else (data.get("genus") if isinstance(data, dict) else None)
    verdict = git_verdict(v, g)
    oracle = git_verdict_bruteforce(v, g)
    maxima = max_points_per_dimension(v)
    return {
        "config": config_to_json(v),
        "genus": verdict.genus,
        "verdict": verdict_to_json(verdict),
        "max_points_per_dimension": {str(s): m for s, m in maxima.items()},
        "oracle_agrees": oracle == verdict,
    }


def cmd_gale(args) -> dict:
    v = config_from_json(_read_input(args.input))
    w = gale(v, args.target_dim)
    return {
        "source": config_to_json(v),
        "config": config_to_json(w),
        "residual_zero": gale_residual(v, w).is_zero(),
    }


def cmd_conic(args) -> dict:
    v = config_from_json(_read_input(args.input))
    return {"config": config_to_json(v), "on_conic": lies_on_conic(v)}


def cmd_fiber(args) -> dict:
    f = datum_from_json(_read_input(args.input))
    report = slope_report(f)
    git = git_verdict(f.config, f.genus)
    split = detect_decomposable(f)
    out = {
        "datum": datum_to_json(f),
        "verdict": verdict_to_json(report.verdict),
        "git_verdict": verdict_to_json(git),
        "agree": git == report.verdict,
        "slopes": [
            {"subset": list(e.labels), "k": e.degree, "s": e.rank, "slope": str(e.slope)} for e in report.entries
        ],
        "decomposable": None
        if split is None
        else {"partition": [list(grp) for grp in split], "bundle": line_bundle_sum(split)},
    }
    if f.distinct_support:
        out["presentation"] = presentation_to_json(kernel_presentation(f))
    else:
        out["presentation"] = None
    return out


def cmd_decomposables(args) -> dict:
    rank = args.rank
    collisions = _collisions(args)
    if args.input is not None:
        data = _read_input(args.input)
        if not isinstance(data, dict):
            raise MalformedInput("expected an object with rank and collisions")
        rank = data.get("rank", rank)
        collisions = data.get("collisions", collisions)
    if not isinstance(rank, int):
        raise MalformedInput("--rank is required")
    classes = enumerate_decomposables(rank, collisions)
    return {
        "rank": rank,
        "genus": {2: 3, 3: 2}[rank],
        "collisions": collisions,
        "distinct": len(classes),
        "total": sum(c.multiplicity for c in classes),
        "classes": [
            {
                "partition": [list(grp) for grp in c.representative],
                "multiplicity": c.multiplicity,
                "bundle": line_bundle_sum(c.representative),
            }
            for c in classes
        ],
    }


def cmd_incidence(args) -> dict:
    inc = incidence_15_3()
    out = {
        "points": [[list(p) for p in pt] for pt in inc.points],
        "lines": [list(ln) for ln in inc.lines],
        "flags": sorted([[[list(p) for p in pt], list(ln)] for pt, ln in inc.flags]),
        "axioms": inc.axioms(),
        "is_15_3": inc.is_15_3(),
    }
    collisions = _collisions(args)
    if collisions:
        out["collisions"] = collisions
        out["degenerate"] = degenerate_incidence(collisions)
    return out


def _segre_json(result) -> dict:
    return {
        "basis_matchings": _matchings_json(result.kappa_basis.selected),
        "cubic": poly_to_json(result.cubic.equation),
        "nodes": [
            {"partition": [list(t) for t in part], "point": point_to_json(p)} for part, p in result.nodes
        ],
    }


def cmd_segre(args) -> dict:
    result = segre_pipeline(args.seed, cubic_samples=args.samples, with_dual=False)
    return {**_segre_json(result), "checks": result.checks}


def cmd_igusa(args) -> dict:
    result = segre_pipeline(args.seed, quartic_samples=args.samples)
    return {**_segre_json(result), "quartic": poly_to_json(result.dual_quartic.equation), "checks": result.checks}


def cmd_dual_check(args) -> dict:
    basis = build_kappa(args.seed)
    if args.input is not None:
        data = _read_input(args.input)
        cubic = hypersurface_from_json(data.get("cubic") if isinstance(data, dict) else None)
        quartic = hypersurface_from_json(data.get("quartic") if isinstance(data, dict) else None)
    else:
        cubic = build_segre_cubic(basis, args.seed)
        quartic = build_dual_quartic(cubic, args.seed, args.samples, basis)
    checks = check_biduality(cubic, quartic, basis, args.seed, args.count)
    return {"cubic": poly_to_json(cubic.equation), "quartic": poly_to_json(quartic.equation), "checks": checks}


def cmd_dims(args) -> dict:
    if args.rank is None or args.genus is None:
        raise MalformedInput("dims needs --rank and --genus")
    fib = fiber_dimension(args.rank, args.genus)
    quo = quotient_dimension(args.rank, args.genus)
    return {"rank": args.rank, "genus": args.genus, "fiber": fib, "quotient": quo, "equal": fib == quo}


HANDLERS = {
    "stability": cmd_stability,
    "gale": cmd_gale,
    "conic": cmd_conic,
    "fiber": cmd_fiber,
    "decomposables": cmd_decomposables,
    "incidence": cmd_incidence,
    "segre": cmd_segre,
    "igusa": cmd_igusa,
    "dual-check": cmd_dual_check,
    "dims": cmd_dims,
}


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON file, '-' for stdin, or inline JSON")
    common.add_argument("--output", default="-", help="report path, '-' for stdout")
    common.add_argument("--seed", type=_u64, default=0)
    common.add_argument("--samples", type=_positive, default=None, help="interpolation sample count override")

    parser = argparse.ArgumentParser(prog="coblegeom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("stability", "dims"):
            p.add_argument("--genus", type=int)
        if name in ("decomposables", "dims"):
            p.add_argument("--rank", type=int)
        if name in ("decomposables", "incidence"):
            p.add_argument("--collide", action="append", metavar="I,J,...", help="labels whose support points coincide")
        if name == "gale":
            p.add_argument("--target-dim", type=int)
        if name == "dual-check":
            p.add_argument("--count", type=_positive, default=30, help="biduality samples")
    return parser


def _emit(payload: dict, output: str) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    header = {"command": args.command, "tool": {"name": "coblegeom", "version": __version__}, "seed": args.seed}
    try:
        body = HANDLERS[args.command](args)
        status = 0
    except MalformedInput as exc:
        body, status = {"error": "malformed input", "detail": str(exc)}, 1
    except DomainError as exc:
        body, status = exc.as_dict(), 2
    except (ValueError, TypeError, KeyError) as exc:
        body, status = {"error": "malformed input", "detail": str(exc)}, 1
    payload = {**header, "monomial_order": MONOMIAL_ORDER, **body}
    _emit(payload, args.output)
    if status:
        print(f"coblegeom {args.command}: {body['error']}: {body['detail']}", file=sys.stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
