import json
import math

import numpy as np
import pytest

from ruledframe import (Interval, Kind, Mesh, SampledGrid, build_ruled_surface,
                        evaluate, tessellate)
from ruledframe.cli import run_cli, write_obj

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def run(argv, capsys=None):
    code = run_cli(argv)
    if capsys is not None:
        return code, capsys.readouterr()
    return code


# --- analyze ------------------------------------------------------------------

def test_analyze_cone_report(tmp_path):
    out = tmp_path / "report.json"
    code = run(["analyze", "--example", "example2", "--kind", "gamma_v",
                "--grid", "256", "--json", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["input"]["kinds"] == ["gamma_v"]
    (entry,) = report["singularities"]
    (point,) = entry["points"]
    assert point["class"] == "cone"
    assert point["apex"] == pytest.approx([0.0, 0.0, SQRT2], abs=1e-6)
    assert point["max_ruling_distance"] < 1e-8
    assert report["frame_checks"]["max_abs_l"] < 1e-6
    (dev,) = report["developability"]
    assert dev["max_defect"] < 1e-8


def test_analyze_swallowtail_report(tmp_path):
    out = tmp_path / "report.json"
    code = run(["analyze", "--example", "example3", "--kind", "beta_gamma",
                "--grid", "512", "--json", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    (entry,) = report["singularities"]
    (point,) = entry["points"]
    assert point["class"] == "swallowtail"
    assert point["s0"] == pytest.approx(math.pi / 2, abs=1e-6)
    assert point["u0"] == pytest.approx(-1.0 / SQRT3, abs=1e-6)
    assert len(entry["cuspidal_edge_arcs"]) == 2
    assert entry["poles"] == pytest.approx([0.0, math.pi], abs=1e-9)


def test_analyze_helix_pipeline(capsys):
    code, captured = run(["analyze", "--example", "helix", "--kind", "all",
                          "--grid", "512"], capsys)
    assert code == 0
    report = json.loads(captured.out)
    assert [e["kind"] for e in report["singularities"]] == \
        sorted(k.value for k in Kind)
    assert report["frame_checks"]["max_abs_l"] < 1e-6
    assert report["frame_checks"]["eq6_residual_gamma"] < 1e-5
    for dev in report["developability"]:
        assert dev["max_defect"] < 1e-7


def test_analyze_as_printed_fails_validation(capsys):
    code, captured = run(["analyze", "--example", "example1", "--as-printed",
                          "--grid", "64"], capsys)
    assert code == 2
    assert "validation failure" in captured.err


def test_analyze_unknown_example(capsys):
    code, captured = run(["analyze", "--example", "nope"], capsys)
    assert code == 1
    assert "usage error" in captured.err


def test_analyze_custom_requires_points(capsys):
    code, captured = run(["analyze", "--example", "custom"], capsys)
    assert code == 1


def test_analyze_custom_points_files(tmp_path, capsys):
    from ruledframe.examples import example1_pair
    domain = Interval(0.0, 2.0 * math.pi)
    gamma, v = example1_pair(domain)
    s = np.linspace(domain.lo, domain.hi, 257)
    g_path, v_path = tmp_path / "gamma.txt", tmp_path / "v.txt"
    np.savetxt(g_path, np.column_stack([s, [gamma(t) for t in s]]))
    np.savetxt(v_path, np.column_stack([s, [v(t) for t in s]]))
    code, captured = run(["analyze", "--example", "custom", "--kind", "v_gamma",
                          "--points", str(g_path), str(v_path),
                          "--renormalize"], capsys)
    assert code == 0
    report = json.loads(captured.out)
    (entry,) = report["singularities"]
    assert entry["points"][0]["class"] == "cone"


def test_analyze_obj_export(tmp_path):
    obj = tmp_path / "mesh.obj"
    code = run(["analyze", "--example", "example1", "--kind", "v_gamma",
                "--grid", "64", "--json", str(tmp_path / "r.json"),
                "--obj", str(obj), "--s-samples", "16", "--u-samples", "8"])
    assert code == 0
    lines = obj.read_text().splitlines()
    assert sum(1 for ln in lines if ln.startswith("v ")) == 16 * 8
    assert sum(1 for ln in lines if ln.startswith("f ")) == 15 * 7


# --- determinism and OBJ round trip --------------------------------------------

def test_analyze_deterministic(tmp_path):
    outs = []
    for tag in ("a", "b"):
        j = tmp_path / f"{tag}.json"
        o = tmp_path / f"{tag}.obj"
        code = run(["analyze", "--example", "example3", "--kind", "beta_gamma",
                    "--grid", "128", "--json", str(j), "--obj", str(o)])
        assert code == 0
        outs.append((j.read_bytes(), o.read_bytes()))
    assert outs[0] == outs[1]


def test_obj_vertices_round_trip(tmp_path, ex1_curve):
    surf = build_ruled_surface(ex1_curve, Kind.GAMMA_V,
                               u_domain=Interval(-2.0, 2.0))
    mesh = tessellate(surf, 32, 16)
    path = tmp_path / "mesh.obj"
    write_obj(mesh, str(path))
    verts = [[float(x) for x in ln.split()[1:]]
             for ln in path.read_text().splitlines() if ln.startswith("v ")]
    assert len(verts) == len(mesh.vertices)
    for vert, (s, u) in zip(verts, mesh.params):
        assert np.max(np.abs(np.array(vert) - evaluate(surf, s, u))) < 1e-12


def test_obj_minimal_and_empty_mesh(tmp_path):
    mesh = Mesh(np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0],
                          [0.0, 1.0, 0.0], [1.0, 1.0, 0.0]]),
                [(0, 1, 3, 2)], np.zeros((4, 2)), 2, 2)
    path = tmp_path / "quad.obj"
    write_obj(mesh, str(path))
    lines = path.read_text().splitlines()
    assert lines[1:] == ["v 0 0 0", "v 1 0 0", "v 0 1 0", "v 1 1 0",
                         "f 1 2 4 3"]
    empty = Mesh(np.empty((0, 3)), [], np.empty((0, 2)), 0, 0)
    path = tmp_path / "empty.obj"
    write_obj(empty, str(path))
    assert path.read_text() == "# ruledframe mesh export\n"


def test_obj_singular_row_comment(tmp_path, ex1_curve):
    surf = build_ruled_surface(ex1_curve, Kind.V_GAMMA,
                               u_domain=Interval(-2.1, 1.0))
    mesh = tessellate(surf, 64, 32)
    path = tmp_path / "cone.obj"
    write_obj(mesh, str(path))
    text = path.read_text()
    assert text.count("# singular s=") == 64


# --- frames ---------------------------------------------------------------------

def test_frames_pair_csv(capsys):
    code, captured = run(["frames", "--example", "example1", "--grid", "16"],
                         capsys)
    assert code == 0
    lines = captured.out.splitlines()
    assert lines[0] == "s,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa1,kappa2"
    assert len(lines) == 17
    first = [float(x) for x in lines[1].split(",")]
    # T = eta = (-sin s, cos s, 0) at s = 0; kappa1 = m, kappa2 = n
    assert first[1:4] == pytest.approx([0.0, 1.0, 0.0], abs=1e-12)
    assert first[10] == pytest.approx(-1.0 / SQRT2, abs=1e-12)
    assert first[11] == pytest.approx(1.0 / SQRT2, abs=1e-12)


def test_frames_helix_csv(capsys):
    code, captured = run(["frames", "--example", "helix", "--grid", "64"],
                         capsys)
    assert code == 0
    lines = captured.out.splitlines()
    assert len(lines) == 65
    rows = np.array([[float(x) for x in ln.split(",")] for ln in lines[1:]])
    kappa = np.hypot(rows[:, 10], rows[:, 11])
    assert np.max(np.abs(kappa - 0.5)) < 1e-5


# --- normal-form -----------------------------------------------------------------

def test_normal_form_swallowtail_obj(tmp_path):
    path = tmp_path / "sw.obj"
    code = run(["normal-form", "--class", "sw", "--obj", str(path)])
    assert code == 0
    v_lines = [ln for ln in path.read_text().splitlines() if ln.startswith("v ")]
    assert len(v_lines) == 64 * 64
    assert v_lines[-1] == "v 4 6 1"


def test_normal_form_rejects_unknown_class(capsys):
    code, captured = run(["normal-form", "--class", "cone", "--obj", "x.obj"],
                         capsys)
    assert code == 1
