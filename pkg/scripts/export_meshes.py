#!/usr/bin/env python3
"""Export OBJ meshes of the example surfaces and the three reference
singularity models into an output directory, for inspection in any mesh
viewer.

Usage:
    python3 scripts/export_meshes.py [--out DIR] [--grid N]
"""

import argparse
import os

from ruledframe import (ALL_KINDS, Interval, SingularClass,
                        build_ruled_surface, normal_form_surface,
                        rmf_from_legendre, tessellate)
from ruledframe.cli import write_obj
from run_examples import build_curve

NORMAL_FORMS = {
    "cuspidal_edge": SingularClass.CUSPIDAL_EDGE,
    "swallowtail": SingularClass.SWALLOWTAIL,
    "cuspidal_crosscap": SingularClass.CUSPIDAL_CROSSCAP,
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="meshes")
    parser.add_argument("--grid", type=int, default=512)
    parser.add_argument("--s-samples", type=int, default=128)
    parser.add_argument("--u-samples", type=int, default=64)
    parser.add_argument("--u-min", type=float, default=-2.0)
    parser.add_argument("--u-max", type=float, default=2.0)
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)

    for name in ("example1", "example2", "example3"):
        curve = build_curve(name, args.grid)
        frame = rmf_from_legendre(curve)
        for kind in ALL_KINDS:
            surf = build_ruled_surface(curve, kind,
                                       Interval(args.u_min, args.u_max),
                                       eta_frame=frame)
            mesh = tessellate(surf, args.s_samples, args.u_samples)
            path = os.path.join(args.out, f"{name}_{kind.value}.obj")
            write_obj(mesh, path)
            print(f"wrote {path} ({len(mesh.faces)} quads)")

    for label, cls in NORMAL_FORMS.items():
        mesh = normal_form_surface(cls, args.s_samples, args.u_samples)
        path = os.path.join(args.out, f"normal_form_{label}.obj")
        write_obj(mesh, path)
        print(f"wrote {path} ({len(mesh.faces)} quads)")


if __name__ == "__main__":
    main()
