"""Command line interface.

Exit codes: 0 success, 1 verification failed / search not converged,
2 usage error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import design
from . import serialization as ser
from . import weyl_heisenberg as whm
from .eigenbasis import common_eigenbasis, projector_coefficients
from .errors import DegenerateCombination, DesignError
from .search import SearchConfig, search
from .selftest import format_table, run_checks

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj, args) -> None:
    text = ser.dumps(obj, pretty=args.pretty)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _seed(args, fallback: int) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("QDF_SEED")
    if env is not None:
        try:
            return int(env, 0)
        except ValueError:
            raise UsageError(f"QDF_SEED must be an integer, got {env!r}") from None
    return fallback


def _require_d(args) -> int:
    if args.d is None:
        raise UsageError("--d is required")
    if args.d < 2:
        raise UsageError("--d must be >= 2")
    return args.d


def _matrix_with_trace(m) -> dict:
    out = ser.encode_matrix(m)
    out["trace"] = ser.encode_complex(np.trace(m))
    return out


def cmd_gen(args) -> int:
    d = _require_d(args)
    what = args.what
    if what == "fourier":
        _emit(ser.encode_matrix(whm.fourier(d)), args)
    elif what == "wh":
        if args.r is not None or args.s is not None:
            r, s = args.r or 0, args.s or 0
            _emit({"d": d, "r": r % d, "s": s % d, **ser.encode_matrix(whm.wh(r, s, d))}, args)
        else:
            _emit({"d": d, "matrices": [{"r": r, "s": s, **ser.encode_matrix(whm.wh(r, s, d))}
                                        for r in range(d) for s in range(d)]}, args)
    elif what == "rm":
        if args.m is not None:
            _emit({"d": d, "m": args.m % d, **_matrix_with_trace(whm.r_matrix(d, args.m))}, args)
        else:
            _emit({"d": d, "matrices": [{"m": m, **_matrix_with_trace(whm.r_matrix(d, m))}
                                        for m in range(d)]}, args)
    elif what == "basis":
        _emit(ser.encode_basis(common_eigenbasis(d)), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    tol = args.tolerance if args.tolerance is not None else design.DEFAULT_TOL
    if args.basis:
        d, vectors = ser.decode_basis_vectors(_read_json(args.basis))
        report = design.certify(design.wh_orbit(vectors, d), tol=tol)
    else:
        d = _require_d(args)
        basis = common_eigenbasis(d)
        report = design.certify(design.wh_orbit(basis.vectors, d), tol=tol,
                                coefficients=projector_coefficients(basis))
    _emit(ser.encode_report(report), args)
    return EXIT_OK if report.is_2design else EXIT_FAILED


def _search_config(args) -> SearchConfig:
    raw = _read_json(args.config) if args.config else {}
    if not isinstance(raw, dict):
        raise UsageError("search config must be a JSON object")
    if args.d is not None:
        raw["d"] = args.d
    if "d" not in raw:
        raise UsageError("search config needs d (in the file or via --d)")
    raw["seed"] = _seed(args, raw.get("seed", 1))
    if args.tolerance is not None:
        raw["tolerance"] = args.tolerance
    raw["jobs"] = args.jobs
    known = set(SearchConfig.__dataclass_fields__)
    unknown = set(raw) - known
    if unknown:
        raise UsageError(f"unknown config fields: {sorted(unknown)}")
    try:
        return SearchConfig(**raw)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid search config: {exc}") from None


def cmd_search(args) -> int:
    config = _search_config(args)
    result = search(config)
    _emit({
        "d": result.d,
        "field": result.field,
        "counts": list(result.counts),
        "converged": result.converged,
        "best_residual": result.best_residual,
        "best_restart": result.best_restart,
        "per_restart_residuals": result.per_restart_residuals,
        "iterations_used": result.iterations_used,
        "distinct_solutions": result.distinct_solutions,
        "max_imag_after_phase": result.max_imag_after_phase,
        "best_vectors": [ser.encode_vector(v) for v in result.best_vectors],
        "note": result.note,
        "seed": config.seed,
        "restarts": config.restarts,
    }, args)
    return EXIT_OK if result.converged else EXIT_FAILED


def cmd_reconstruct(args) -> int:
    if not args.rho:
        raise UsageError("--rho is required")
    rho = ser.decode_matrix(_read_json(args.rho))
    d = args.d if args.d is not None else rho.shape[0]
    if rho.shape != (d, d):
        raise UsageError(f"rho must be {d} x {d}, got {rho.shape}")
    orbit = design.wh_orbit(common_eigenbasis(d).vectors, d)
    coeffs = design.tomography_coefficients(rho, orbit)
    rec = design.reconstruct_state(coeffs, orbit)
    eigs = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    _emit({
        "d": d,
        "coefficients": ser.encode_vector(coeffs),
        "reconstruction": ser.encode_matrix(rec),
        "round_trip_error": float(np.linalg.norm(rec - rho)),
        "is_density_matrix": bool(np.allclose(rho, rho.conj().T, atol=1e-10) and eigs.min() > -1e-10),
    }, args)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_checks(max_d=args.max_d, perturb=args.perturb)
    print(format_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int)
    common.add_argument("--seed", type=int, help="search seed (QDF_SEED is used if absent)")
    common.add_argument("--tolerance", type=float)
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--pretty", action="store_true")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    parser = argparse.ArgumentParser(prog="fourier2design",
                                     description="Fourier eigenbases and Weyl-Heisenberg 2-designs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit F, W(r,s), R_m or the eigenbasis")
    p.add_argument("--what", choices=["fourier", "wh", "rm", "basis"], required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="certify a WH orbit as a 2-design")
    p.add_argument("--basis", help="basis JSON file instead of the R_m eigenbasis of --d")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="search Fourier eigenspaces for 2-design bases")
    p.add_argument("--config", help="SearchConfig JSON file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reconstruct", parents=[common], help="tomography round trip for a trace-one matrix")
    p.add_argument("--rho", help="matrix JSON file")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    p.add_argument("--max-d", type=int, default=11)
    p.add_argument("--perturb", type=float, default=0.0, help="negative-control perturbation")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DesignError, ser.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateCombination as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
