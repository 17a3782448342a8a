"""Command-line front end.

Subcommands:
  analyze      full pipeline: validate -> curvatures -> surfaces ->
               developability -> singularity scan -> JSON report (+ OBJ)
  frames       frame and curvature tables as CSV on stdout
  normal-form  reference mesh of a local singularity model as OBJ

Exit codes: 0 success, 1 usage error, 2 validation failure,
3 degenerate-input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import List, Optional

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .examples import BUILTIN_EXAMPLES
from .framing import rmf_propagate
from .geomcore import (GeometryError, Interval, ParamCurve, SampledGrid,
                       ValidationError, cross, norm)
from .legendre import (LegendreCurve, frame_orthonormality_defect, is_legendre,
                       legendre_from_rm_pair, rmf_from_legendre)
from .ruled import ALL_KINDS, Kind, Mesh, build_ruled_surface, \
    developability_defect, tessellate
from .singular import SingularClass, normal_form_surface, scan_singularities

_NORMAL_FORM_NAMES = {
    "ce": SingularClass.CUSPIDAL_EDGE,
    "sw": SingularClass.SWALLOWTAIL,
    "ccr": SingularClass.CUSPIDAL_CROSSCAP,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


# ---------------------------------------------------------------------------
# writers
# ---------------------------------------------------------------------------

def write_obj(mesh: Mesh, path: str) -> None:
    """ASCII OBJ: `v x y z` then 1-based quad `f` lines.

    Rows flagged singular are preceded by `# singular s=<value>` comment
    lines, one per flagged vertex.
    """
    lines = ["# ruledframe mesh export"]
    if mesh.vertices.size:
        for row in range(mesh.n_rows):
            for s in mesh.singular_rows.get(row, []):
                lines.append(f"# singular s={_fmt(s)}")
            for j in range(mesh.n_cols):
                x, y, z = mesh.vertices[row * mesh.n_cols + j]
                lines.append(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}")
        for face in mesh.faces:
            lines.append("f " + " ".join(str(i + 1) for i in face))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_report(report: dict, path: Optional[str]) -> None:
    text = json.dumps(report, indent=2, allow_nan=False)
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text + "\n")


def _point_record(pt) -> dict:
    rec = {
        "s0": pt.s0,
        "u0": pt.u0,
        "class": pt.cls.value,
        "location": None if pt.location is None else [float(x) for x in pt.location],
        "diagnostics": {k: v for k, v in sorted(pt.diagnostics.items())},
    }
    return rec


# ---------------------------------------------------------------------------
# pipeline helpers
# ---------------------------------------------------------------------------

def _load_points_curve(path: str):
    data = np.loadtxt(path)
    if data.ndim != 2 or data.shape[1] != 4:
        raise ValidationError(f"{path}: expected whitespace-separated `s x y z` rows")
    s = data[:, 0]
    steps = np.diff(s)
    if np.any(steps <= 0) or np.max(steps) - np.min(steps) > 1e-9 * np.max(steps):
        raise ValidationError(f"{path}: s column must be uniform and increasing")
    return s, ParamCurve.from_samples(s, data[:, 1:])


def build_legendre(args, tol: Tolerances) -> LegendreCurve:
    if args.example == "custom":
        if not args.points:
            raise UsageError("--example custom requires --points GAMMA_FILE V_FILE")
        s_g, gamma = _load_points_curve(args.points[0])
        s_v, v = _load_points_curve(args.points[1])
        if s_g.size != s_v.size or np.max(np.abs(s_g - s_v)) > 1e-12:
            raise ValidationError("gamma and v point files disagree on the s grid")
        grid = SampledGrid(s_g)
        return LegendreCurve.from_curves(gamma, v, grid, tol,
                                         renormalize=args.renormalize)

    spec = BUILTIN_EXAMPLES[args.example]
    lo = spec.default_domain.lo if args.domain_lo is None else args.domain_lo
    hi = spec.default_domain.hi if args.domain_hi is None else args.domain_hi
    domain = Interval(lo, hi)
    grid = SampledGrid.uniform(domain, args.grid)
    if spec.is_pair:
        gamma, v = spec.pair_builder(domain, getattr(args, "as_printed", False))
        return LegendreCurve.from_curves(gamma, v, grid, tol,
                                         renormalize=args.renormalize)
    # space curve: propagate an RMF and take the normal pair (helix)
    curve = spec.curve_builder(domain)
    t0 = curve.derivative(domain.lo, 1)
    n10 = curve.derivative(domain.lo, 2)
    n10 = n10 / norm(n10)
    rmf = rmf_propagate(curve, (t0, n10, cross(t0, n10)), grid, tol)
    return legendre_from_rm_pair(rmf, tol)


def _selected_kinds(kind_arg: str) -> List[Kind]:
    if kind_arg == "all":
        return list(ALL_KINDS)
    return [Kind(kind_arg)]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    tol = DEFAULT_TOL
    curve = build_legendre(args, tol)
    ok, max_l = is_legendre(curve, tol)
    if not ok:
        raise ValidationError(f"pair is not Legendre (max |l| = {max_l:.3e})")
    eta_frame = rmf_from_legendre(curve, tol=tol)
    u_domain = Interval(args.u_min, args.u_max)
    kinds = _selected_kinds(args.kind)

    developability = []
    singularities = []
    for kind in kinds:
        surf = build_ruled_surface(curve, kind, u_domain, eta_frame)
        _, max_defect = developability_defect(surf, curve.grid)
        developability.append({"kind": kind.value, "max_defect": max_defect})
        scan = scan_singularities(curve, kind, curve.grid, u_domain, tol,
                                  eta_frame)
        points = [_point_record(pt) for pt in scan.events]
        for rec, pt in zip(points, scan.events):
            if pt.cls is SingularClass.CONE:
                from .singular import cone_apex
                apex, certificate = cone_apex(curve, kind, curve.grid, tol,
                                              eta_frame)
                rec["apex"] = [float(x) for x in apex]
                rec["max_ruling_distance"] = certificate
        singularities.append({
            "kind": kind.value,
            "points": points,
            "cuspidal_edge_arcs": [[a, b] for a, b in scan.cuspidal_edge_arcs],
            "poles": list(scan.poles),
        })
        if args.obj:
            path = args.obj if args.kind != "all" else \
                args.obj.rsplit(".", 1)[0] + f"_{kind.value}.obj"
            mesh = tessellate(surf, args.s_samples, args.u_samples, tol)
            write_obj(mesh, path)

    report = {
        "input": {
            "example": args.example,
            "grid": args.grid,
            "domain": [curve.grid.domain.lo, curve.grid.domain.hi],
            "u_domain": [u_domain.lo, u_domain.hi],
            "kinds": [k.value for k in kinds],
            "tolerances": dataclasses.asdict(tol),
        },
        "developability": developability,
        "singularities": singularities,
        "frame_checks": {
            "max_orthonormality_defect": frame_orthonormality_defect(curve),
            "max_abs_l": max_l,
            "eq6_residual_gamma": eta_frame.eq6_residual_gamma,
            "eq6_residual_v": eta_frame.eq6_residual_v,
        },
    }
    write_report(report, args.json)
    return 0


def cmd_frames(args) -> int:
    tol = DEFAULT_TOL
    spec = BUILTIN_EXAMPLES.get(args.example)
    lo = spec.default_domain.lo if args.domain_lo is None else args.domain_lo
    hi = spec.default_domain.hi if args.domain_hi is None else args.domain_hi
    domain = Interval(lo, hi)
    grid = SampledGrid.uniform(domain, args.grid)

    if spec.is_pair:
        gamma, v = spec.pair_builder(domain, getattr(args, "as_printed", False))
        curve = LegendreCurve.from_curves(gamma, v, grid, tol,
                                          renormalize=args.renormalize)
        # {eta, gamma, v} is the RMF along the eta-direction curve:
        # tangent eta, normals gamma and v, natural curvatures (m, n)
        T = curve.eta_samples
        N1 = curve.gamma.samples(grid)
        N2 = curve.v.samples(grid)
        k1, k2 = curve.m, curve.n
    else:
        curve = spec.curve_builder(domain)
        t0 = curve.derivative(domain.lo, 1)
        n10 = curve.derivative(domain.lo, 2)
        n10 = n10 / norm(n10)
        rmf = rmf_propagate(curve, (t0, n10, cross(t0, n10)), grid, tol)
        T, N1, N2, k1, k2 = rmf.T, rmf.N1, rmf.N2, rmf.kappa1, rmf.kappa2

    out = sys.stdout
    out.write("s,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa1,kappa2\n")
    for i, s in enumerate(grid.nodes):
        row = [s, *T[i], *N1[i], *N2[i], k1[i], k2[i]]
        out.write(",".join(_fmt(x) for x in row) + "\n")
    return 0


def cmd_normal_form(args) -> int:
    mesh = normal_form_surface(_NORMAL_FORM_NAMES[args.cls],
                               args.samples, args.samples)
    write_obj(mesh, args.obj)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="ruledframe",
                     description="rotation-minimizing frames, Legendre curves "
                                 "and ruled-surface singularities")
    sub = parser.add_subparsers(dest="command", required=True)

    examples = sorted(BUILTIN_EXAMPLES) + ["custom"]

    p = sub.add_parser("analyze", help="full analysis pipeline")
    p.add_argument("--example", required=True, choices=examples)
    p.add_argument("--kind", default="all",
                   choices=sorted(k.value for k in Kind) + ["all"])
    p.add_argument("--grid", type=int, default=512)
    p.add_argument("--u-min", type=float, default=-3.0)
    p.add_argument("--u-max", type=float, default=3.0)
    p.add_argument("--domain-lo", type=float, default=None)
    p.add_argument("--domain-hi", type=float, default=None)
    p.add_argument("--json", default=None, help="report path (default stdout)")
    p.add_argument("--obj", default=None, help="mesh export path")
    p.add_argument("--s-samples", type=int, default=64)
    p.add_argument("--u-samples", type=int, default=32)
    p.add_argument("--as-printed", action="store_true",
                   help="use the uncorrected textbook formulas (fails validation)")
    p.add_argument("--renormalize", action="store_true",
                   help="project near-miss inputs back onto UT S^2")
    p.add_argument("--points", nargs=2, metavar=("GAMMA", "V"), default=None,
                   help="two files of `s x y z` rows for --example custom")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("frames", help="frame and curvature tables (CSV)")
    p.add_argument("--example", required=True, choices=sorted(BUILTIN_EXAMPLES))
    p.add_argument("--grid", type=int, default=512)
    p.add_argument("--domain-lo", type=float, default=None)
    p.add_argument("--domain-hi", type=float, default=None)
    p.add_argument("--as-printed", action="store_true")
    p.add_argument("--renormalize", action="store_true")
    p.set_defaults(func=cmd_frames)

    p = sub.add_parser("normal-form", help="reference singularity meshes")
    p.add_argument("--class", dest="cls", required=True,
                   choices=sorted(_NORMAL_FORM_NAMES))
    p.add_argument("--obj", required=True)
    p.add_argument("--samples", type=int, default=64)
    p.set_defaults(func=cmd_normal_form)
    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except ValidationError as exc:
        sys.stderr.write(f"validation failure: {exc}\n")
        return 2
    except GeometryError as exc:
        sys.stderr.write(f"degenerate input: {exc}\n")
        return 3


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
