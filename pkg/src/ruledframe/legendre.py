"""Legendre curves on the unit tangent bundle of the 2-sphere.

A pair (gamma, v) of unit orthogonal sphere curves with <gamma', v> = 0,
its curvature functions (l, m, n) relative to the frame
{gamma, v, eta = gamma x v}, and the conversions to and from
rotation-minimizing vector-field pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .framing import RMFApparatus, orthonormality_defect
from .geomcore import (ContractViolation, ParamCurve, SampledGrid,
                       ValidationError, callable_derivative, cross, dot,
                       integrate_curve, norm)


@dataclass(frozen=True)
class ValidationReport:
    """Max deviations of the UT S^2 membership conditions over a grid."""

    max_unit_gamma: float
    max_unit_v: float
    max_ortho: float
    tol_sphere: float
    tol_ortho: float
    renormalized: bool = False

    @property
    def passed(self) -> bool:
        return (self.max_unit_gamma < self.tol_sphere
                and self.max_unit_v < self.tol_sphere
                and self.max_ortho < self.tol_ortho)

    @property
    def max_deviation(self) -> float:
        return max(self.max_unit_gamma, self.max_unit_v, self.max_ortho)


def validate_utS2(gamma: ParamCurve, v: ParamCurve, grid: SampledGrid,
                  tol: Tolerances = DEFAULT_TOL) -> ValidationReport:
    """Check |gamma| = |v| = 1 and <gamma, v> = 0 over the grid."""
    gs = gamma.samples(grid)
    vs = v.samples(grid)
    return ValidationReport(
        max_unit_gamma=float(np.max(np.abs(np.linalg.norm(gs, axis=1) - 1.0))),
        max_unit_v=float(np.max(np.abs(np.linalg.norm(vs, axis=1) - 1.0))),
        max_ortho=float(np.max(np.abs(np.einsum("ij,ij->i", gs, vs)))),
        tol_sphere=tol.tol_sphere,
        tol_ortho=tol.tol_ortho,
    )


def _renormalized_curves(gamma: ParamCurve, v: ParamCurve):
    """Project gamma, v to the sphere and Gram-Schmidt v against gamma."""

    def gfix(s, _g=gamma):
        p = _g(s)
        return p / norm(p)

    def vfix(s, _g=gamma, _v=v):
        g = _g(s)
        g = g / norm(g)
        w = _v(s)
        w = w - dot(w, g) * g
        return w / norm(w)

    g2 = ParamCurve(domain=gamma.domain, fn=gfix)
    v2 = ParamCurve(domain=v.domain, fn=vfix)
    return g2, v2


@dataclass(frozen=True)
class LegendreCurve:
    """Validated pair (gamma, v) on UT S^2 with curvature functions l, m, n.

    eta = gamma x v completes the right-handed frame; l = <gamma', v>,
    m = <gamma', eta>, n = <v', eta>.  l identically zero is the Legendre
    condition.
    """

    gamma: ParamCurve
    v: ParamCurve
    grid: SampledGrid
    l: np.ndarray
    m: np.ndarray
    n: np.ndarray
    eta_samples: np.ndarray
    report: ValidationReport

    @classmethod
    def from_curves(cls, gamma: ParamCurve, v: ParamCurve, grid: SampledGrid,
                    tol: Tolerances = DEFAULT_TOL,
                    renormalize: bool = False) -> "LegendreCurve":
        report = validate_utS2(gamma, v, grid, tol)
        if not report.passed:
            if not renormalize:
                raise ValidationError(
                    f"pair fails UT S^2 validation (max deviation "
                    f"{report.max_deviation:.3e})", report)
            gamma, v = _renormalized_curves(gamma, v)
            inner = validate_utS2(gamma, v, grid, tol)
            report = ValidationReport(
                inner.max_unit_gamma, inner.max_unit_v, inner.max_ortho,
                inner.tol_sphere, inner.tol_ortho, renormalized=True)
            if not report.passed:
                raise ValidationError("pair fails validation even after "
                                      "renormalization", report)
        l, m, n, eta = legendre_curvatures(gamma, v, grid, tol,
                                           _validated=True)
        return cls(gamma, v, grid, l, m, n, eta, report)

    # frame fields as callables -------------------------------------------

    def eta(self, s: float) -> np.ndarray:
        return cross(self.gamma(s), self.v(s))

    def m_at(self, s: float) -> float:
        return dot(self.gamma.derivative(s, 1), self.eta(s))

    def n_at(self, s: float) -> float:
        return dot(self.v.derivative(s, 1), self.eta(s))

    def l_at(self, s: float) -> float:
        return dot(self.gamma.derivative(s, 1), self.v(s))

    def swapped(self, tol: Tolerances = DEFAULT_TOL) -> "LegendreCurve":
        return LegendreCurve.from_curves(self.v, self.gamma, self.grid, tol)


def legendre_curvatures(gamma: ParamCurve, v: ParamCurve, grid: SampledGrid,
                        tol: Tolerances = DEFAULT_TOL, _validated: bool = False):
    """Per-node (l, m, n) and eta samples for a UT S^2 pair."""
    if not _validated:
        report = validate_utS2(gamma, v, grid, tol)
        if not report.passed:
            raise ValidationError("pair fails UT S^2 validation", report)
    gs = gamma.samples(grid)
    vs = v.samples(grid)
    gps = np.array([gamma.derivative(s, 1) for s in grid.nodes])
    vps = np.array([v.derivative(s, 1) for s in grid.nodes])
    eta = np.cross(gs, vs)
    l = np.einsum("ij,ij->i", gps, vs)
    m = np.einsum("ij,ij->i", gps, eta)
    n = np.einsum("ij,ij->i", vps, eta)
    return l, m, n, eta


def is_legendre(curve: LegendreCurve, tol: Tolerances = DEFAULT_TOL):
    """(passes, max |l|) for the Legendre condition <gamma', v> = 0."""
    max_l = float(np.max(np.abs(curve.l)))
    return max_l < tol.tol_legendre, max_l


def legendre_from_rm_pair(rmf: RMFApparatus,
                          tol: Tolerances = DEFAULT_TOL) -> LegendreCurve:
    """The curve (N1, N2) of a rotation-minimizing pair, as a Legendre curve.

    <N1', N2> = -kappa1 <T, N2> = 0, so the pair always satisfies the
    Legendre condition; the samples are interpolated into sphere curves.
    """
    if rmf.orthonormality_defect() > 1e-6:
        raise ContractViolation("RMF apparatus is not orthonormal")
    gamma = ParamCurve.from_samples(rmf.grid.nodes, rmf.N1)
    v = ParamCurve.from_samples(rmf.grid.nodes, rmf.N2)
    return LegendreCurve.from_curves(gamma, v, rmf.grid, tol)


@dataclass(frozen=True)
class EtaFrame:
    """RMF {eta, gamma, v} along the eta-direction curve beta.

    beta' = eta, and the structure equations gamma' = m eta, v' = n eta hold
    with the residuals recorded per interior node.
    """

    beta: ParamCurve
    curve: LegendreCurve
    m: np.ndarray
    n: np.ndarray
    eq6_residual_gamma: float
    eq6_residual_v: float
    eq6_residual_eta: float


def rmf_from_legendre(curve: LegendreCurve, s0: Optional[float] = None,
                      c0=(0.0, 0.0, 0.0), n_steps: Optional[int] = None,
                      tol: Tolerances = DEFAULT_TOL) -> EtaFrame:
    """Integrate beta = int eta ds and package {eta, gamma, v} along it.

    Verifies the Legendre condition first and the structure-equation
    residuals |gamma' - m eta|, |v' - n eta| afterwards.
    """
    ok, max_l = is_legendre(curve, tol)
    if not ok:
        raise ValidationError(f"pair is not Legendre (max |l| = {max_l:.3e})")
    grid = curve.grid
    if s0 is None:
        s0 = float(grid.nodes[0])
    if n_steps is None:
        n_steps = grid.n - 1
    beta = integrate_curve(curve.eta, grid.domain, s0, np.asarray(c0, float),
                           n_steps)

    res_g = res_v = res_e = 0.0
    h = grid.h
    for s in grid.nodes[1:-1]:
        eta = curve.eta(s)
        gp = curve.gamma.derivative(s, 1)
        vp = curve.v.derivative(s, 1)
        m = dot(gp, eta)
        n = dot(vp, eta)
        res_g = max(res_g, norm(gp - m * eta))
        res_v = max(res_v, norm(vp - n * eta))
        # eta' + m gamma + n v = 0
        ep = callable_derivative(curve.eta, s, 1, min(1e-5, h / 8.0),
                                 grid.domain)
        res_e = max(res_e, norm(ep + m * curve.gamma(s) + n * curve.v(s)))
    if max(res_g, res_v) > tol.tol_eq6:
        raise ValidationError(
            f"structure-equation residuals exceed tolerance "
            f"(gamma: {res_g:.3e}, v: {res_v:.3e}); input data inconsistent")
    return EtaFrame(beta, curve, curve.m.copy(), curve.n.copy(),
                    res_g, res_v, res_e)


def frame_determinant_defect(curve: LegendreCurve) -> float:
    """Max |det(gamma, v, eta) - 1| over the grid (right-handedness)."""
    gs = curve.gamma.samples(curve.grid)
    vs = curve.v.samples(curve.grid)
    dets = np.einsum("ij,ij->i", np.cross(gs, vs), curve.eta_samples)
    return float(np.max(np.abs(dets - 1.0)))


def frame_orthonormality_defect(curve: LegendreCurve) -> float:
    gs = curve.gamma.samples(curve.grid)
    vs = curve.v.samples(curve.grid)
    return orthonormality_defect(gs, vs, curve.eta_samples)
