"""Moving frames along space curves.

Frenet-Serret frames, rotation-minimizing frames (propagated by the
double-reflection method), natural curvatures, direction curves and the
slant-helix function sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .geomcore import (ContractViolation, DegenerateCurvatureError, Interval,
                       ParamCurve, SampledGrid, callable_derivative, cross,
                       dot, grid_derivative, integrate_curve, norm)


@dataclass(frozen=True)
class FrenetApparatus:
    """Frenet frame samples (T, N, B) plus curvature and torsion per node."""

    grid: SampledGrid
    T: np.ndarray
    N: np.ndarray
    B: np.ndarray
    kappa: np.ndarray
    tau: np.ndarray


@dataclass(frozen=True)
class RMFApparatus:
    """Rotation-minimizing frame samples (T, N1, N2) with natural curvatures
    kappa1, kappa2 and the unwrapped angle theta = arg(kappa1, kappa2)."""

    grid: SampledGrid
    T: np.ndarray
    N1: np.ndarray
    N2: np.ndarray
    kappa1: np.ndarray
    kappa2: np.ndarray
    theta: np.ndarray

    def orthonormality_defect(self) -> float:
        frames = np.stack([self.T, self.N1, self.N2], axis=1)  # (n, 3, 3)
        gram = frames @ np.transpose(frames, (0, 2, 1))
        return float(np.max(np.abs(gram - np.eye(3))))


def orthonormality_defect(*fields: np.ndarray) -> float:
    frames = np.stack(fields, axis=1)
    gram = frames @ np.transpose(frames, (0, 2, 1))
    return float(np.max(np.abs(gram - np.eye(len(fields)))))


def frenet_frame(c: ParamCurve, grid: SampledGrid,
                 tol: Tolerances = DEFAULT_TOL) -> FrenetApparatus:
    """Frenet-Serret apparatus of a unit-speed curve.

    T = c', N = c''/|c''|, B = T x N, kappa = |c''|, tau = <c''', B>/kappa.
    Raises DegenerateCurvatureError where |c''| <= tol_kappa (straight
    segments have no principal normal).
    """
    n = grid.n
    T = np.zeros((n, 3))
    N = np.zeros((n, 3))
    B = np.zeros((n, 3))
    kappa = np.zeros(n)
    tau = np.zeros(n)
    for i, s in enumerate(grid.nodes):
        T[i] = c.derivative(s, 1)
        acc = c.derivative(s, 2)
        k = norm(acc)
        if k <= tol.tol_kappa:
            raise DegenerateCurvatureError(
                f"curvature {k:.3e} <= tol_kappa at node s={s}: Frenet frame undefined")
        kappa[i] = k
        N[i] = acc / k
        B[i] = cross(T[i], N[i])
        tau[i] = dot(c.derivative(s, 3), B[i]) / k
    return FrenetApparatus(grid, T, N, B, kappa, tau)


def _check_orthonormal_triple(triple, tol=1e-8):
    m = np.array(triple, dtype=float)
    if np.max(np.abs(m @ m.T - np.eye(3))) > tol:
        raise ContractViolation("initial frame is not orthonormal")


def rmf_propagate(c: ParamCurve, initial: Tuple[np.ndarray, np.ndarray, np.ndarray],
                  grid: SampledGrid, tol: Tolerances = DEFAULT_TOL) -> RMFApparatus:
    """Propagate a rotation-minimizing frame along `c` over `grid`.

    Uses the double-reflection method (two Householder reflections per step),
    which keeps the frame orthonormal exactly and is exact on circular arcs.
    Natural curvatures follow as kappa_i = <T', N_i>; theta is the continuous
    (unwrapped) two-argument angle of (kappa1, kappa2).
    """
    T0, N10, N20 = (np.asarray(v, dtype=float) for v in initial)
    _check_orthonormal_triple((T0, N10, N20))
    n = grid.n
    points = c.samples(grid)
    T = np.array([c.derivative(s, 1) for s in grid.nodes])
    for i, s in enumerate(grid.nodes):
        if norm(T[i]) <= tol.tol_kappa:
            raise DegenerateCurvatureError(f"zero tangent at node s={s}")
    if norm(T[0] - T0) > 1e-8:
        raise ContractViolation("initial tangent does not match c'(grid start)")

    N1 = np.zeros((n, 3))
    N2 = np.zeros((n, 3))
    N1[0], N2[0] = N10, N20
    for i in range(n - 1):
        v1 = points[i + 1] - points[i]
        c1 = dot(v1, v1)
        if c1 == 0.0:
            N1[i + 1], N2[i + 1] = N1[i], N2[i]
            continue
        r_l = N1[i] - (2.0 / c1) * dot(v1, N1[i]) * v1
        t_l = T[i] - (2.0 / c1) * dot(v1, T[i]) * v1
        v2 = T[i + 1] - t_l
        c2 = dot(v2, v2)
        if c2 == 0.0:
            N1[i + 1] = r_l
        else:
            N1[i + 1] = r_l - (2.0 / c2) * dot(v2, r_l) * v2
        N2[i + 1] = cross(T[i + 1], N1[i + 1])

    Tprime = np.array([c.derivative(s, 2) for s in grid.nodes])
    kappa1 = np.einsum("ij,ij->i", Tprime, N1)
    kappa2 = np.einsum("ij,ij->i", Tprime, N2)
    theta = np.unwrap(np.arctan2(kappa2, kappa1))
    return RMFApparatus(grid, T, N1, N2, kappa1, kappa2, theta)


def reconstruct_kappa_tau(rmf: RMFApparatus, tol: Tolerances = DEFAULT_TOL):
    """Recover (kappa, tau) from the natural curvatures.

    kappa = sqrt(kappa1^2 + kappa2^2);
    tau = (kappa1 kappa2' - kappa1' kappa2) / (kappa1^2 + kappa2^2),
    with grid finite differences for the primes.  Also returns dtheta/ds for
    cross-validation.
    """
    k1, k2 = rmf.kappa1, rmf.kappa2
    sq = k1 ** 2 + k2 ** 2
    if np.any(sq <= tol.tol_kappa ** 2):
        i = int(np.argmin(sq))
        raise DegenerateCurvatureError(
            f"kappa1^2 + kappa2^2 vanishes at node s={rmf.grid.nodes[i]}: tau undefined")
    h = rmf.grid.h
    k1p = grid_derivative(k1, h, 1)
    k2p = grid_derivative(k2, h, 1)
    kappa = np.sqrt(sq)
    tau = (k1 * k2p - k1p * k2) / sq
    dtheta = grid_derivative(rmf.theta, h, 1)
    return kappa, tau, dtheta


def direction_curve(frame_field: Callable[[float], np.ndarray], domain: Interval,
                    s0: float, c0, n_steps: int,
                    tol: Tolerances = DEFAULT_TOL) -> ParamCurve:
    """Integral curve of a unit frame vector field (e.g. the B- or N- or
    eta-direction curve).  Unit-speed by construction."""
    probe = np.linspace(domain.lo, domain.hi, 33)
    speeds = [norm(frame_field(s)) for s in probe]
    if max(abs(sp - 1.0) for sp in speeds) > tol.tol_unit:
        raise ContractViolation("frame field is not unit on the domain")
    return integrate_curve(frame_field, domain, s0, c0, n_steps)


def rm_check(c: ParamCurve, field: Callable[[float], np.ndarray],
             grid: SampledGrid, tol: Tolerances = DEFAULT_TOL):
    """Is `field` a rotation-minimizing vector field along `c`?

    Returns (passes, max_defect) where the defect at an interior node is the
    norm of the component of field'(s) orthogonal to the tangent.
    """
    normality = max(abs(dot(np.asarray(field(s), dtype=float), c.derivative(s, 1)))
                    for s in grid.nodes)
    if normality > 1e-6:
        raise ContractViolation(
            f"field is not normal to the curve (max |<field, T>| = {normality:.3e})")
    h = min(1e-5, grid.h / 8.0)
    defect = 0.0
    for s in grid.nodes[1:-1]:
        fp = callable_derivative(field, s, 1, h, c.domain)
        t = c.derivative(s, 1)
        t = t / norm(t)
        residual = fp - dot(fp, t) * t
        defect = max(defect, norm(residual))
    return defect < tol.tol_rm, defect


def slant_helix_sigma(fr: FrenetApparatus, grid: SampledGrid,
                      tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """sigma(s) = kappa^2 / (kappa^2 + tau^2)^{3/2} * (tau/kappa)'.

    Constant sigma characterizes slant helices; (tau/kappa)' is taken by grid
    finite differences.
    """
    if np.any(fr.kappa <= tol.tol_kappa):
        raise DegenerateCurvatureError("kappa vanishes on the grid; sigma undefined")
    ratio = fr.tau / fr.kappa
    ratio_p = grid_derivative(ratio, grid.h, 1)
    return fr.kappa ** 2 / (fr.kappa ** 2 + fr.tau ** 2) ** 1.5 * ratio_p
