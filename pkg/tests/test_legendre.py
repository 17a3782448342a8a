import math

import numpy as np
import pytest

from ruledframe import (Interval, LegendreCurve, ParamCurve, SampledGrid,
                        ValidationError, is_legendre, legendre_curvatures,
                        legendre_from_rm_pair, norm, rmf_from_legendre,
                        rmf_propagate, validate_utS2)
from ruledframe.examples import (example1_pair, example2_pair, example3_eta,
                                 example3_pair, helix_curve)
from ruledframe.framing import rm_check
from ruledframe.legendre import (frame_determinant_defect,
                                 frame_orthonormality_defect)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def _grid(domain, n=256):
    return SampledGrid.uniform(domain, n)


# --- validation --------------------------------------------------------------

def test_validate_corrected_circle_pair(ex1_curve):
    assert ex1_curve.report.passed
    assert ex1_curve.report.max_deviation < 1e-12


def test_validate_rejects_equal_curves():
    domain = Interval(0.0, 1.0)
    e1 = ParamCurve(domain=domain, fn=lambda s: np.array([1.0, 0.0, 0.0]))
    rep = validate_utS2(e1, e1, _grid(domain, 16))
    assert not rep.passed
    assert rep.max_ortho == pytest.approx(1.0)


def test_validate_corrected_spherical_pair():
    # unit norms and orthogonality hold only after the one-sign correction
    domain = Interval(0.0, math.pi)
    gamma, v = example3_pair(domain)
    rep = validate_utS2(gamma, v, _grid(domain, 128))
    assert rep.passed
    assert rep.max_deviation < 1e-9
    gamma_p, v_p = example3_pair(domain, as_printed=True)
    rep_p = validate_utS2(gamma_p, v_p, _grid(domain, 128))
    assert not rep_p.passed


def test_from_curves_raises_with_report():
    domain = Interval(0.0, 2.0 * math.pi)
    gamma, v = example1_pair(domain, as_printed=True)
    with pytest.raises(ValidationError) as exc:
        LegendreCurve.from_curves(gamma, v, _grid(domain))
    assert exc.value.report is not None
    assert not exc.value.report.passed


def test_renormalize_projects_back():
    domain = Interval(0.0, 2.0 * math.pi)
    gamma, v = example1_pair(domain)
    v_scaled = ParamCurve(domain=domain, fn=lambda s: (1.0 + 3e-8) * v(s))
    grid = _grid(domain)
    with pytest.raises(ValidationError):
        LegendreCurve.from_curves(gamma, v_scaled, grid)
    curve = LegendreCurve.from_curves(gamma, v_scaled, grid, renormalize=True)
    assert curve.report.renormalized
    assert curve.report.passed


# --- curvature functions -----------------------------------------------------

def test_curvatures_circle_pair(ex1_curve):
    assert np.max(np.abs(ex1_curve.l)) < 1e-12
    assert np.max(np.abs(ex1_curve.m + 1.0 / SQRT2)) < 1e-12
    assert np.max(np.abs(ex1_curve.n - 1.0 / SQRT2)) < 1e-12


def test_curvatures_spherical_pair(ex3_curve):
    expected_m = SQRT3 * np.sin(ex3_curve.grid.nodes)
    expected_n = SQRT3 * np.cos(ex3_curve.grid.nodes)
    assert np.max(np.abs(ex3_curve.l)) < 1e-12
    assert np.max(np.abs(ex3_curve.m - expected_m)) < 1e-9
    assert np.max(np.abs(ex3_curve.n - expected_n)) < 1e-9
    # eta agrees with the closed form (sqrt3 cos 2s, sqrt3 sin 2s, -1)/2
    eta_exact = np.array([example3_eta(s) for s in ex3_curve.grid.nodes])
    assert np.max(np.abs(ex3_curve.eta_samples - eta_exact)) < 1e-12


def test_curvatures_great_circle_vertical_v():
    domain = Interval(0.0, 2.0 * math.pi)
    gamma = ParamCurve(domain=domain,
                       fn=lambda s: np.array([np.cos(s), np.sin(s), 0.0]),
                       d1=lambda s: np.array([-np.sin(s), np.cos(s), 0.0]))
    v = ParamCurve(domain=domain, fn=lambda s: np.array([0.0, 0.0, 1.0]),
                   d1=lambda s: np.zeros(3))
    grid = _grid(domain, 512)
    l, m, n, eta = legendre_curvatures(gamma, v, grid)
    # eta = gamma x v points inward; gamma' = m eta gives m = -1
    assert np.max(np.abs(l)) < 1e-12
    assert np.max(np.abs(m + 1.0)) < 1e-12
    assert np.max(np.abs(n)) < 1e-12


def test_curvatures_validate_unless_told_not_to():
    domain = Interval(0.0, 1.0)
    bad = ParamCurve(domain=domain, fn=lambda s: np.array([2.0, 0.0, 0.0]))
    with pytest.raises(ValidationError):
        legendre_curvatures(bad, bad, _grid(domain, 16))


def test_parameter_translation_invariance(ex3_curve):
    # shifting s by a constant translates the (l, m, n) graphs
    c = 0.7
    domain = Interval(c, math.pi + c)
    gamma0, v0 = example3_pair(Interval(0.0, math.pi))
    gamma = ParamCurve(domain=domain, fn=lambda s: gamma0.fn(s - c),
                       d1=lambda s: gamma0.d1(s - c))
    v = ParamCurve(domain=domain, fn=lambda s: v0.fn(s - c),
                   d1=lambda s: v0.d1(s - c))
    grid = SampledGrid(ex3_curve.grid.nodes + c)
    l, m, n, _ = legendre_curvatures(gamma, v, grid)
    assert np.max(np.abs(l - ex3_curve.l)) < 1e-9
    assert np.max(np.abs(m - ex3_curve.m)) < 1e-9
    assert np.max(np.abs(n - ex3_curve.n)) < 1e-9


# --- Legendre condition ------------------------------------------------------

def test_is_legendre_examples(ex1_curve, ex2_curve, ex3_curve):
    for curve in (ex1_curve, ex2_curve, ex3_curve):
        ok, max_l = is_legendre(curve)
        assert ok and max_l < 1e-9


def test_is_legendre_rejects_tangent_pair():
    domain = Interval(0.0, 2.0 * math.pi)
    gamma = ParamCurve(domain=domain,
                       fn=lambda s: np.array([np.cos(s), np.sin(s), 0.0]),
                       d1=lambda s: np.array([-np.sin(s), np.cos(s), 0.0]))
    v = ParamCurve(domain=domain,
                   fn=lambda s: np.array([-np.sin(s), np.cos(s), 0.0]),
                   d1=lambda s: np.array([-np.cos(s), -np.sin(s), 0.0]))
    curve = LegendreCurve.from_curves(gamma, v, _grid(domain))
    ok, max_l = is_legendre(curve)
    assert not ok
    assert max_l == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValidationError):
        rmf_from_legendre(curve)


# --- conversions with rotation-minimizing pairs ------------------------------

def _helix_rmf(n=512):
    domain = Interval(0.0, 2.0 * math.pi)
    c = helix_curve(domain)
    grid = SampledGrid.uniform(domain, n)
    t0 = c.derivative(0.0, 1)
    n10 = c.derivative(0.0, 2)
    n10 = n10 / norm(n10)
    return rmf_propagate(c, (t0, n10, np.cross(t0, n10)), grid)


def test_legendre_from_rm_pair_helix():
    curve = legendre_from_rm_pair(_helix_rmf())
    ok, max_l = is_legendre(curve)
    assert ok, max_l


def test_legendre_from_rm_pair_straight_line():
    domain = Interval(0.0, 1.0)
    line = ParamCurve(domain=domain, fn=lambda s: np.array([s, 0.0, 0.0]),
                      d1=lambda s: np.array([1.0, 0.0, 0.0]),
                      d2=lambda s: np.zeros(3), arc_length=True)
    grid = SampledGrid.uniform(domain, 64)
    rmf = rmf_propagate(line, (np.eye(3)[0], np.eye(3)[1], np.eye(3)[2]), grid)
    curve = legendre_from_rm_pair(rmf)
    assert np.max(np.abs(curve.l)) < 1e-9
    assert np.max(np.abs(curve.m)) < 1e-9
    assert np.max(np.abs(curve.n)) < 1e-9


def test_eta_frame_circle_pair(ex1_curve):
    frame = rmf_from_legendre(ex1_curve)
    # eta = (-sin s, cos s, 0), so beta is a unit-speed circle traversal
    for s in np.linspace(0.0, 2.0 * math.pi, 33):
        expected = np.array([math.cos(s) - 1.0, math.sin(s), 0.0])
        assert norm(frame.beta(s) - expected) < 1e-9
    assert frame.eq6_residual_gamma < 1e-10
    assert frame.eq6_residual_v < 1e-10
    assert frame.eq6_residual_eta < 1e-4


def test_eta_frame_spherical_pair(ex3_curve):
    frame = rmf_from_legendre(ex3_curve)
    assert frame.eq6_residual_gamma < 1e-6
    assert frame.eq6_residual_v < 1e-6
    assert frame.eq6_residual_eta < 1e-4
    # gamma and v are rotation-minimizing fields along beta
    inner = SampledGrid.uniform(Interval(0.1, math.pi - 0.1), 64)
    passes, defect = rm_check(frame.beta, ex3_curve.gamma, inner)
    assert passes, defect
    passes, defect = rm_check(frame.beta, ex3_curve.v, inner)
    assert passes, defect


def test_eta_frame_anchoring():
    domain = Interval(0.0, 2.0 * math.pi)
    gamma, v = example1_pair(domain)
    curve = LegendreCurve.from_curves(gamma, v, _grid(domain))
    c0 = np.array([1.0, 2.0, 3.0])
    frame = rmf_from_legendre(curve, s0=math.pi, c0=c0)
    assert norm(frame.beta(math.pi) - c0) < 1e-12


# --- frame integrity ---------------------------------------------------------

def test_frame_right_handed(ex1_curve, ex2_curve, ex3_curve):
    for curve in (ex1_curve, ex2_curve, ex3_curve):
        assert frame_determinant_defect(curve) < 1e-9
        assert frame_orthonormality_defect(curve) < 1e-9


def test_swapped_pair_negates_eta(ex3_curve):
    swapped = ex3_curve.swapped()
    assert np.max(np.abs(swapped.eta_samples + ex3_curve.eta_samples)) < 1e-12
    # m and n trade places up to the eta sign flip
    assert np.max(np.abs(swapped.m + ex3_curve.n)) < 1e-9
    assert np.max(np.abs(swapped.n + ex3_curve.m)) < 1e-9
