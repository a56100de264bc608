"""Command-line front end.

Subcommands: model-spectrum, spectrum, geodesic, verify, compare.  Exit code
discipline: 0 on success, 1 when a verification or comparison fails, 2 on
usage, parse, or validation errors.  Output is deterministic: identical flags,
files and seed produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .geodesic import (GeodesicSpec, ScrewConfig, horizontality_check,
                       sample_trajectory, speed, write_trajectory_csv,
                       write_trajectory_json)
from .spectrum import (EnumerationBudget, SpectrumConsistencyError,
                       compare_spectra, full_spectrum, load_clspectrum,
                       metadata_dict, model_spectrum, read_spectrum,
                       verify_entry, write_spectrum_csv, write_spectrum_json)
from .verify import SUITE_NAMES, run_suites

_VERIFY_TOL = 1e-6  # --verify horizontality gate for sampled geodesics


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _parse_triple(text: str, flag: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"{flag} expects three comma-separated reals")
    return np.array([float(p) for p in parts])


def _emit(write_fn, out_path):
    if out_path is None:
        write_fn(sys.stdout)
    else:
        with open(out_path, "w", newline="") as f:
            write_fn(f)


def _add_common(p, cutoff_required=True):
    p.add_argument("-k", type=int, choices=(0, 1, -1), required=True,
                   help="curvature of the model space")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   metavar="PITCH", help="screw pitch (lambda != k^2)")
    if cutoff_required:
        p.add_argument("--cutoff", type=float, required=True,
                       help="emit lengths <= cutoff")
        p.add_argument("--mmax", type=int, default=64,
                       help="frame-winding search bound (default 64)")
        p.add_argument("--rational-tol", type=float, default=1e-9,
                       help="fiber-closing rationality tolerance")
        p.add_argument("--max-denominator", type=int, default=10**6,
                       help="denominator bound for rationality detection")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="screwgeo",
        description="Geodesics and length spectra of screw sub-Riemannian "
                    "structures on frame bundles of space forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model-spectrum",
                       help="length spectrum of the model space itself")
    _add_common(p)

    p = sub.add_parser("spectrum",
                       help="length spectrum of a quotient, from its complex "
                            "length spectrum (k in {0, -1})")
    p.add_argument("clspec", help="complex-length-spectrum JSON file")
    _add_common(p)

    p = sub.add_parser("geodesic", help="sample a geodesic frame trajectory")
    p.add_argument("-k", type=int, choices=(0, 1, -1), required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   metavar="PITCH")
    p.add_argument("--kappa", type=float, default=None,
                   help="curvature of the projected helix (geometric form)")
    p.add_argument("--tau", type=float, default=None,
                   help="torsion of the projected helix (geometric form)")
    p.add_argument("--lie", action="store_true",
                   help="use the Lie closed form with --x/--y controls")
    p.add_argument("--x", default=None, metavar="X1,X2,X3",
                   help="control direction (Lie form)")
    p.add_argument("--y", default=None, metavar="Y1,Y2,Y3",
                   help="spin parameter (Lie form)")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--tmax", type=float, default=10.0)
    p.add_argument("--dt", type=float, default=0.1)
    p.add_argument("--renormalize", action="store_true",
                   help="re-project each sample onto the isometry group")
    p.add_argument("--verify", action="store_true",
                   help="check horizontality of the sampled curve")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run randomized invariant suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compare", help="compare two spectrum files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="length matching tolerance")

    return parser


def _budget(args) -> EnumerationBudget:
    return EnumerationBudget(cutoff=args.cutoff, m_max=args.mmax,
                             rational_tol=args.rational_tol,
                             max_denominator=args.max_denominator)


def _write_spectrum(entries, cfg, budget, args) -> int:
    bad = [(e, verify_entry(e, cfg)) for e in entries]
    bad = [(e, rep) for e, rep in bad if not rep.ok]
    if bad:
        for e, rep in bad:
            names = ", ".join(c.name for c in rep.failures())
            _err(f"entry length={e.length!r} source={e.source} failed "
                 f"verification: {names}")
        return 1
    md = metadata_dict(cfg, budget)
    writer = write_spectrum_csv if args.format == "csv" else write_spectrum_json
    _emit(lambda f: writer(f, entries, md), args.out)
    return 0


def cmd_model_spectrum(args) -> int:
    try:
        cfg = ScrewConfig(args.k, args.lam)
        budget = _budget(args)
        entries = model_spectrum(cfg, budget)
    except (ValueError, SpectrumConsistencyError) as exc:
        _err(str(exc))
        return 2
    return _write_spectrum(entries, cfg, budget, args)


def cmd_spectrum(args) -> int:
    if args.k == 1:
        _err("spherical quotients (k = 1) are outside the supported scope; "
             "their geodesic holonomy need not be a single rotation angle")
        return 2
    try:
        cls_ = load_clspectrum(args.clspec)
    except (OSError, ValueError) as exc:
        _err(f"cannot read {args.clspec}: {exc}")
        return 2
    try:
        cfg = ScrewConfig(args.k, args.lam)
        budget = _budget(args)
        entries = full_spectrum(cls_, cfg, budget)
    except (ValueError, SpectrumConsistencyError) as exc:
        _err(str(exc))
        return 2
    return _write_spectrum(entries, cfg, budget, args)


def cmd_geodesic(args) -> int:
    try:
        cfg = ScrewConfig(args.k, args.lam)
    except ValueError as exc:
        _err(str(exc))
        return 2
    geometric_flags = args.kappa is not None or args.tau is not None
    if args.lie == geometric_flags:
        _err("give either --kappa/--tau (geometric form) or --lie with "
             "--x/--y (Lie form)")
        return 2
    try:
        if args.lie:
            if args.x is None or args.y is None:
                raise ValueError("--lie requires both --x and --y")
            x = _parse_triple(args.x, "--x")
            y = _parse_triple(args.y, "--y")
            gspec = GeodesicSpec.lie(x, y, cfg)
        else:
            kappa = args.kappa if args.kappa is not None else 0.0
            tau = args.tau if args.tau is not None else 0.0
            gspec = GeodesicSpec.geometric(kappa, tau, cfg)
        if args.dt <= 0 or args.tmax < args.t0:
            raise ValueError("need dt > 0 and tmax >= t0")
        times, mats = sample_trajectory(gspec, args.t0, args.tmax, args.dt,
                                        renormalize=args.renormalize)
    except ValueError as exc:
        _err(str(exc))
        return 2

    metadata = {"k": cfg.k, "lambda": cfg.lam, "form": gspec.form,
                "t0": args.t0, "tmax": args.tmax, "dt": args.dt}
    if args.format == "csv":
        _emit(lambda f: write_trajectory_csv(f, times, mats), args.out)
    else:
        _emit(lambda f: write_trajectory_json(f, times, mats, metadata),
              args.out)

    if args.verify:
        check_times = times if len(times) <= 50 else times[:: len(times) // 50]
        report = horizontality_check(gspec, check_times)
        dev = report.max_speed_deviation(speed(gspec))
        ok = report.max_residual <= _VERIFY_TOL and dev <= _VERIFY_TOL
        stream = sys.stderr if args.out is None else sys.stdout
        print(f"horizontality: max residual {report.max_residual:.3e}, "
              f"max speed deviation {dev:.3e} (tol {_VERIFY_TOL:g}) -> "
              f"{'pass' if ok else 'FAIL'}", file=stream)
        if not ok:
            return 1
    return 0


def cmd_verify(args) -> int:
    results = run_suites(args.suite, seed=args.seed)
    ok = True
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"[{status}] {r.suite}: {r.check}  "
              f"residual {r.residual:.3e} tol {r.tol:g}")
        ok = ok and r.passed
    print("all suites passed" if ok else "FAILURES present")
    return 0 if ok else 1


def cmd_compare(args) -> int:
    try:
        entries_a, _ = read_spectrum(args.file_a)
        entries_b, _ = read_spectrum(args.file_b)
    except (OSError, ValueError, KeyError) as exc:
        _err(f"cannot read spectra: {exc}")
        return 2
    report = compare_spectra(entries_a, entries_b, tol=args.tol)
    print(report.detail)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit 2 for usage errors
        code = exc.code
        return code if isinstance(code, int) else 2
    dispatch = {
        "model-spectrum": cmd_model_spectrum,
        "spectrum": cmd_spectrum,
        "geodesic": cmd_geodesic,
        "verify": cmd_verify,
        "compare": cmd_compare,
    }
    return dispatch[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
