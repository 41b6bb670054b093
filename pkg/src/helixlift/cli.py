"""Command line front end.

Subcommands: classify, frenet, lift, sample, verify-paper. Exit codes are
0 on success, 1 for invalid input (including usage errors), 2 for
degenerate geometry, 3 when a theorem check fails. JSON output is sorted
and indented so repeated runs are byte identical; CSV numbers carry 17
significant digits.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import fixtures
from .curvespec import parse_curve_spec, serialize_curve_spec
from .errors import DegenerateGeometryError, InputError, InvalidField
from .frenet import frame_at, reparam_by_arclength
from .helix import classify_curve, lancret_test
from .lift import AXIS_MODES, LiftSpec, lift_curve
from .tolerances import DEFAULT_TOLERANCES
from .verify import run_paper_suite


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for
    # degenerate geometry, so usage errors are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_curve(spec_arg: str):
    path = Path(spec_arg)
    if path.is_file():
        return parse_curve_spec(path.read_text())
    return fixtures.fixture_by_name(spec_arg)


def _tolerances(args):
    tol = DEFAULT_TOLERANCES
    if getattr(args, "tol", None) is not None:
        if not (args.tol > 0):
            raise InvalidField(f"--tol must be positive, got {args.tol}")
        tol = dataclasses.replace(tol, constancy_tol=float(args.tol))
    return tol


def _emit_json(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _vec_list(vec) -> list | None:
    if vec is None:
        return None
    return [float(v) for v in np.asarray(vec, float)]


def _stat_dict(stat) -> dict | None:
    if stat is None:
        return None
    return {
        "mean": float(stat.mean),
        "max_abs_dev": float(stat.max_abs_dev),
        "rel_dev": float(stat.rel_dev),
        "grid_size": int(stat.grid_size),
    }


def _parse_vec3(text: str, name: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise InvalidField(f"{name} expects three comma separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts], dtype=float)
    except ValueError as exc:
        raise InvalidField(f"{name}: {exc}") from None


def _cmd_classify(args) -> int:
    curve = _load_curve(args.spec)
    tol = _tolerances(args)
    cls = classify_curve(curve, grid_size=args.samples, tol=tol)
    doc = {
        "general_helix": bool(cls.is_general_helix),
        "circular_helix": bool(cls.is_circular_helix),
        "slant_helix": bool(cls.is_slant_helix),
        "theta": None if cls.theta is None else float(cls.theta),
        "axis": _vec_list(cls.axis),
        "stats": {
            "ratio": _stat_dict(cls.ratio_stat),
            "sigma": _stat_dict(cls.sigma_stat),
            "kappa": _stat_dict(cls.kappa_stat),
            "tau": _stat_dict(cls.tau_stat),
        },
        "samples": int(args.samples),
    }
    _emit_json(doc, args.out)
    return 0


def _cmd_frenet(args) -> int:
    curve = _load_curve(args.spec)
    frame = frame_at(curve, args.at, tol=_tolerances(args))
    doc = {
        "t": float(args.at),
        "T": _vec_list(frame.T),
        "N": _vec_list(frame.N),
        "B": _vec_list(frame.B),
        "kappa": float(frame.kappa),
        "tau": float(frame.tau),
        "speed": float(frame.speed),
    }
    _emit_json(doc, args.out)
    return 0


def _cmd_lift(args) -> int:
    base = _load_curve(args.spec)
    tol = _tolerances(args)

    reparameterized = False
    lo, hi = base.domain
    probe = np.linspace(lo, hi, 64)
    speeds = [float(np.linalg.norm(base.eval(t, 1))) for t in probe]
    if max(abs(v - 1.0) for v in speeds) > tol.vector_tol:
        base = reparam_by_arclength(base, tol=tol)
        reparameterized = True
        print("note: base curve is not unit speed, reparameterized by arc length",
              file=sys.stderr)

    if args.theta == "auto":
        _, theta, _ = lancret_test(base, grid_size=args.samples, tol=tol)
    else:
        try:
            theta = float(args.theta)
        except ValueError:
            raise InvalidField(f"--theta expects a number or 'auto', got {args.theta!r}") from None

    axis_token = args.axis
    if axis_token in ("unit", "paper", "paper_printed"):
        mode = "paper_printed" if axis_token.startswith("paper") else "unit"
        spec = LiftSpec(theta=theta, s0=args.s0, offset=_parse_vec3(args.offset, "--offset"),
                        axis_mode=mode)
    else:
        spec = LiftSpec(theta=theta, s0=args.s0, offset=_parse_vec3(args.offset, "--offset"),
                        axis_mode="explicit", axis=_parse_vec3(axis_token, "--axis"))

    lifted = lift_curve(base, spec, grid_size=args.samples, tol=tol, strict=not args.no_strict)

    if args.emit:
        Path(args.emit).write_text(serialize_curve_spec(lifted))
    doc = {
        "theta": float(theta),
        "axis_mode": spec.axis_mode,
        "axis": _vec_list(lifted.axis),
        "s0": float(spec.s0),
        "offset": _vec_list(spec.offset),
        "domain": [float(lifted.t_lo), float(lifted.t_hi)],
        "base_reparameterized": reparameterized,
        "emitted": args.emit or None,
    }
    _emit_json(doc, args.out)
    return 0


def _fmt(x: float) -> str:
    return "%.17g" % x


def _cmd_sample(args) -> int:
    curve = _load_curve(args.spec)
    tol = _tolerances(args)
    if args.n < 2:
        raise InvalidField(f"--n must be at least 2, got {args.n}")
    ts = np.linspace(curve.t_lo, curve.t_hi, args.n)

    header = ["t", "x", "y", "z"]
    if args.frames:
        header += ["Tx", "Ty", "Tz", "Nx", "Ny", "Nz", "Bx", "By", "Bz",
                   "kappa", "tau", "degenerate"]
    lines = [",".join(header)]
    for t in ts:
        pos = curve.eval(t, 0)
        row = [_fmt(t)] + [_fmt(v) for v in pos]
        if args.frames:
            try:
                fr = frame_at(curve, t, tol=tol)
                row += [_fmt(v) for v in fr.T] + [_fmt(v) for v in fr.N]
                row += [_fmt(v) for v in fr.B] + [_fmt(fr.kappa), _fmt(fr.tau), "0"]
            except DegenerateGeometryError:
                row += [""] * 11 + ["1"]
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify_paper(args) -> int:
    report = run_paper_suite(tol=_tolerances(args), grid_size=args.samples)
    for name in ("theorem1", "theorem2", "theorem3"):
        res = getattr(report, name)
        flag = "PASS" if res.passed else "FAIL"
        value = "" if res.value is None else f" value={res.value:.12g}"
        print(f"{name}: {flag}{value} residual={res.residual:.3e}")
    for entry in report.example_checks:
        verdict = "agrees" if entry.agrees else "DISAGREES"
        print(f"errata {entry.claim_id}: {verdict} delta={entry.delta:.3e} ({entry.location})")
    if args.out:
        _emit_json(report.to_dict(), args.out)
    return 0 if report.all_theorems_pass() else 3


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="helixlift",
                     description="Frenet frames, helix classification, and axis lifts "
                                 "for regular space curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_tol=True):
        p.add_argument("--spec", required=True,
                       help="fixture name (paper_cubic, twisted_cubic, circular_helix:a,b, "
                            "circle:r) or path to a curve JSON file")
        if with_tol:
            p.add_argument("--tol", type=float, default=None,
                           help="override the constancy tolerance used for decisions")
        p.add_argument("--out", default=None, help="write JSON output here instead of stdout")

    p = sub.add_parser("classify", help="run the helix classification battery")
    common(p)
    p.add_argument("--samples", type=int, default=256, help="grid size (default 256)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("frenet", help="Frenet frame, curvature and torsion at one parameter")
    common(p)
    p.add_argument("--at", type=float, required=True, help="parameter value")
    p.set_defaults(func=_cmd_frenet)

    p = sub.add_parser("lift", help="build the axis lift of a unit speed helix")
    common(p)
    p.add_argument("--theta", default="auto",
                   help="pitch angle in radians, or 'auto' to measure it (default auto)")
    p.add_argument("--s0", type=float, default=0.0, help="anchor parameter (default 0)")
    p.add_argument("--axis", default="unit",
                   help="'unit', 'paper' (double length printed axis), or an explicit x,y,z")
    p.add_argument("--offset", default="0,0,0", help="translation x,y,z (default 0,0,0)")
    p.add_argument("--samples", type=int, default=256, help="grid size for checks (default 256)")
    p.add_argument("--no-strict", action="store_true",
                   help="skip the unit speed and helix checks on the base curve")
    p.add_argument("--emit", default=None, help="write the lifted curve spec JSON here")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("sample", help="sample positions (and optionally frames) to CSV")
    common(p, with_tol=True)
    p.add_argument("--n", type=int, required=True, help="number of samples")
    p.add_argument("--frames", action="store_true", help="include frame columns")
    p.add_argument("--csv", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("verify-paper",
                       help="audit the worked example against the oracle and check the theorems")
    p.add_argument("--tol", type=float, default=None,
                   help="override the constancy tolerance used for decisions")
    p.add_argument("--out", default=None, help="write the full JSON report here")
    p.add_argument("--samples", type=int, default=256, help="grid size (default 256)")
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DegenerateGeometryError as exc:
        print(f"degenerate geometry: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
