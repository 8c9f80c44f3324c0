"""Command-line front end.

Subcommands: ``radius``, ``range``, ``orth``, ``parallel``, ``verify-paper``
and ``search``.  Exit codes are a stable contract: 0 success/holds, 1 fails
(or fixture failures from verify-paper), 2 parse or lookup errors, 3
nonconvergence, 4 inconclusive.  Human and JSON output carry identical
numeric payloads; JSON is byte-stable for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

import numpy as np

from . import claims, config, matrixfile
from .backend import backend_name
from .claims import ClaimReport, counterexample_search
from .config import DEFAULTS
from .ensembles import KINDS, Ensemble
from .linalg import ConvergenceError, operator_norm
from .orthogonality import (
    Verdict,
    birkhoff_norm_orth,
    birkhoff_radius_orth,
    certify_orth_directional,
    pythagorean_radius_orth,
    usual_orthogonal,
)
from .parallelism import ParallelWitness, radius_parallel
from .radius import numerical_radius, numerical_range_boundary

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_NONCONVERGED = 3
EXIT_INCONCLUSIVE = 4

_RELATIONS = ("usual", "birkhoff_norm", "birkhoff_radius", "pythagorean",
              "directional")


def _ser(obj: Any) -> Any:
    """JSON-ready payload: complex numbers become [re, im] pairs."""
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.complexfloating,)):
        z = complex(obj)
        return [z.real, z.imag]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_ser(v) for v in obj.tolist()] if obj.ndim == 1 \
            else [[_ser(v) for v in row] for row in obj.tolist()]
    if isinstance(obj, ParallelWitness):
        return {"lambda_phase": obj.lambda_phase, "x": _ser(obj.x),
                "product_value": _ser(obj.product_value)}
    if isinstance(obj, Verdict):
        return {"status": obj.status, "margin": obj.margin,
                "tolerance": obj.tolerance, "witness": _ser(obj.witness)}
    if isinstance(obj, ClaimReport):
        return _ser(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): _ser(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_ser(v) for v in obj]
    return obj


def _emit(payload: dict[str, Any], fmt: str, human_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(_ser(payload), indent=2))
    elif fmt == "csv":
        flat = _ser(payload)
        scalars = {k: v for k, v in flat.items()
                   if isinstance(v, (int, float, str, bool))}
        print(",".join(scalars.keys()))
        print(",".join(repr(v) if isinstance(v, float) else str(v)
                       for v in scalars.values()))
    else:
        for line in human_lines:
            print(line)


def _verdict_exit(v: Verdict) -> int:
    if v.holds:
        return EXIT_OK
    if v.fails:
        return EXIT_FAILS
    return EXIT_INCONCLUSIVE


def _load(path: str, *names: str) -> list[np.ndarray]:
    entries = matrixfile.parse_file(path)
    out = []
    for name in names:
        if name not in entries:
            raise matrixfile.MatrixFormatError(
                f"no entry {name!r} in {path} (has: {', '.join(entries)})")
        out.append(entries[name])
    return out


def cmd_radius(args) -> int:
    (T,) = _load(args.file, args.name)
    cert = numerical_radius(T)
    norm = operator_norm(T)
    sandwich_lower = cert.omega <= norm + 1e-8
    sandwich_upper = norm <= 2.0 * cert.omega + 1e-8
    payload = {
        "name": args.name,
        "dim": int(T.shape[0]),
        "omega": cert.omega,
        "theta_star": cert.theta_star,
        "residual": cert.residual,
        "operator_norm": norm,
        "x_star": cert.x_star,
        "radius_le_norm": bool(sandwich_lower),
        "norm_le_twice_radius": bool(sandwich_upper),
    }
    vec = ", ".join(matrixfile.render_scalar(z) for z in cert.x_star)
    _emit(payload, args.format, [
        f"numerical radius of {args.name} (dim {T.shape[0]})",
        f"  omega         = {cert.omega!r}",
        f"  theta_star    = {cert.theta_star!r}",
        f"  residual      = {cert.residual!r}",
        f"  operator_norm = {norm!r}",
        f"  x_star        = [{vec}]",
        f"  radius <= norm: {sandwich_lower}; norm <= 2*radius: {sandwich_upper}",
    ])
    return EXIT_OK


def cmd_range(args) -> int:
    (T,) = _load(args.file, args.name)
    points = numerical_range_boundary(T, args.n_theta)
    thetas = np.arange(args.n_theta) * (2.0 * np.pi / args.n_theta)
    if args.format == "json":
        payload = {"name": args.name,
                   "points": [{"theta": float(t), "re": float(p.real),
                               "im": float(p.imag)}
                              for t, p in zip(thetas, points)]}
        print(json.dumps(_ser(payload), indent=2))
    else:
        print("theta,re,im")
        for t, p in zip(thetas, points):
            print(f"{float(t)!r},{float(p.real)!r},{float(p.imag)!r}")
    return EXIT_OK


def cmd_orth(args) -> int:
    A, B = _load(args.file, args.name_t, args.name_s)
    tol_alg = args.tol_alg
    tol_opt = args.tol_opt
    if args.relation == "usual":
        v = usual_orthogonal(A, B, tol_alg)
    elif args.relation == "birkhoff_norm":
        v = birkhoff_norm_orth(A, B, tol_opt)
    elif args.relation == "birkhoff_radius":
        v = birkhoff_radius_orth(A, B, tol_opt)
    elif args.relation == "pythagorean":
        v = pythagorean_radius_orth(A, B, tol_opt)
    else:
        v = certify_orth_directional(A, B, slack=tol_opt)
    payload = {"relation": args.relation, "left": args.name_t,
               "right": args.name_s, "status": v.status, "margin": v.margin,
               "tolerance": v.tolerance, "witness": v.witness}
    _emit(payload, args.format, [
        f"{args.relation}({args.name_t}, {args.name_s}): {v.status}",
        f"  margin    = {v.margin!r}",
        f"  tolerance = {v.tolerance!r}",
        f"  witness   = {json.dumps(_ser(v.witness))}",
    ])
    return _verdict_exit(v)


def cmd_parallel(args) -> int:
    A, B = _load(args.file, args.name_t, args.name_s)
    v = radius_parallel(A, B, args.tol_opt)
    witness = v.witness.get("witness") if v.witness else None
    payload = {"left": args.name_t, "right": args.name_s, "status": v.status,
               "margin": v.margin, "tolerance": v.tolerance,
               "best": v.witness.get("best") if v.witness else None,
               "target": v.witness.get("target") if v.witness else None,
               "witness": witness}
    lines = [f"parallel({args.name_t}, {args.name_s}): {v.status}",
             f"  margin    = {v.margin!r}",
             f"  tolerance = {v.tolerance!r}"]
    if witness is not None:
        vec = ", ".join(matrixfile.render_scalar(z) for z in witness.x)
        lines += [f"  phase     = {witness.lambda_phase!r}",
                  f"  x         = [{vec}]",
                  f"  product   = {matrixfile.render_scalar(witness.product_value)}"]
    _emit(payload, args.format, lines)
    return _verdict_exit(v)


def cmd_verify_paper(args) -> int:
    trials = args.trials
    seed = args.seed
    fixtures = claims.run_fixture_suite(tol_opt=args.tol_opt)
    checks = [
        claims.check_positive_shift(
            Ensemble("positive_semidefinite", 2, seed + 10, trials)),
        claims.check_orth_triangle_transfer(
            Ensemble("general", 2, seed + 20, trials)),
        claims.check_positive_pairs(
            Ensemble("positive_semidefinite", 2, seed + 30, trials)),
        claims.check_parallel_pythagorean(
            Ensemble("hermitian", 2, seed + 40, trials)),
    ]
    searches = [
        counterexample_search(
            "nondegeneracy", Ensemble("general", 2, seed + 50, trials),
            trials, stop_at_first=False),
        counterexample_search(
            "radius_norm_sandwich", Ensemble("general", 3, seed + 60, trials),
            trials, stop_at_first=False),
    ]
    fixture_failures = sum(r.violated for r in fixtures)
    payload = {
        "seed": seed,
        "trials": trials,
        "backend": backend_name(),
        "fixture_failures": fixture_failures,
        "fixtures": [r.to_dict() for r in fixtures],
        "checks": [r.to_dict() for r in checks],
        "searches": [r.to_dict() for r in searches],
    }
    lines = [f"fixture suite: {len(fixtures)} fixtures, "
             f"{fixture_failures} failures"]
    for r in fixtures:
        lines.append(f"  [{'ok' if r.violated == 0 else 'FAIL'}] "
                     f"{r.claim_id}: {r.supported}/{r.trials}")
    lines.append("ensemble checks (violations reported, not asserted):")
    for r in checks + searches:
        lines.append(
            f"  {r.claim_id}: trials={r.trials} supported={r.supported} "
            f"violated={r.violated} inconclusive={r.inconclusive} "
            f"(vacuous {r.vacuous})")
    _emit(payload, args.format, lines)
    return EXIT_OK if fixture_failures == 0 else EXIT_FAILS


def cmd_search(args) -> int:
    try:
        ensemble = Ensemble(args.kind, args.dim, args.seed, args.budget)
        report = counterexample_search(args.claim, ensemble, args.budget,
                                       stop_at_first=not args.full)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        print(f"registered claims: {', '.join(sorted(claims.REGISTRY))}",
              file=sys.stderr)
        return EXIT_USAGE
    payload = report.to_dict()
    lines = [f"claim {report.claim_id}: trials={report.trials} "
             f"supported={report.supported} violated={report.violated} "
             f"inconclusive={report.inconclusive} (vacuous {report.vacuous})"]
    snippet_lines = []
    if report.worst_witness:
        snippet_lines.append(f"# witness for claim {report.claim_id}")
        for key in ("T", "S", "U"):
            if key in report.worst_witness:
                M = np.array([[complex(re, im) for re, im in row]
                              for row in report.worst_witness[key]])
                snippet_lines.append(matrixfile.render_matrix(key, M))
        lines.append("witness (matrix file snippet):")
        lines += ["  " + s for s in snippet_lines]
    payload["witness_snippet"] = "\n".join(snippet_lines)
    _emit(payload, args.format, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegaorth",
        description="Numerical radius computations and orthogonality deciders "
                    "for dense complex matrices.")
    parser.add_argument("--tol-alg", type=float, default=DEFAULTS.tol_algebraic,
                        dest="tol_alg", help="tolerance for algebraic identities")
    parser.add_argument("--tol-opt", type=float, default=DEFAULTS.tol_opt,
                        dest="tol_opt", help="tolerance for optimizer-derived values")
    parser.add_argument("--theta-grid", type=int, default=DEFAULTS.theta_grid,
                        help="direction grid size for radius sweeps")
    parser.add_argument("--phase-grid", type=int, default=DEFAULTS.phase_grid,
                        help="phase grid size for parallelism scans")
    parser.add_argument("--seed", type=int, default=None,
                        help="random seed (fallback: OMEGAORTH_SEED, then built-in)")
    parser.add_argument("--format", choices=("human", "json", "csv"),
                        default="human")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="numerical radius with certificate")
    p.add_argument("file")
    p.add_argument("name")
    p.set_defaults(fn=cmd_radius)

    p = sub.add_parser("range", help="numerical range boundary points (CSV)")
    p.add_argument("file")
    p.add_argument("name")
    p.add_argument("n_theta", type=int)
    p.set_defaults(fn=cmd_range)

    p = sub.add_parser("orth", help="decide an orthogonality relation")
    p.add_argument("file")
    p.add_argument("name_t")
    p.add_argument("name_s")
    p.add_argument("relation", choices=_RELATIONS)
    p.set_defaults(fn=cmd_orth)

    p = sub.add_parser("parallel", help="decide radius parallelism")
    p.add_argument("file")
    p.add_argument("name_t")
    p.add_argument("name_s")
    p.set_defaults(fn=cmd_parallel)

    p = sub.add_parser("verify-paper",
                       help="replay fixtures and run the claim checks")
    p.add_argument("--trials", type=int, default=100,
                   help="trials per ensemble check")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("search", help="counterexample search for a claim")
    p.add_argument("claim")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("dim", type=int)
    p.add_argument("budget", type=int)
    p.add_argument("--full", action="store_true",
                   help="run the whole budget instead of stopping at the "
                        "first violation")
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        env = os.environ.get("OMEGAORTH_SEED", "")
        args.seed = int(env) if env.strip() else DEFAULTS.seed
    if args.tol_alg <= 0 or args.tol_opt <= 0:
        print("error: tolerances must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.theta_grid < 8 or args.phase_grid < 8:
        print("error: grids must be at least 8", file=sys.stderr)
        return EXIT_USAGE
    config.set_active(DEFAULTS.with_overrides(
        tol_algebraic=args.tol_alg, tol_opt=args.tol_opt,
        theta_grid=args.theta_grid, phase_grid=args.phase_grid,
        seed=args.seed))
    try:
        return args.fn(args)
    except (matrixfile.MatrixFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGED
    finally:
        config.set_active(DEFAULTS)


if __name__ == "__main__":
    sys.exit(main())
