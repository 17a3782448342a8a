"""The six ruled surfaces induced by the frame {eta, gamma, v}.

Construction, point/partial/normal evaluation, developability tests,
striction curves and quad-mesh tessellation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .geomcore import (ContractViolation, CylindricalRulingError, DomainError,
                       Interval, ParamCurve, SampledGrid, cross, dot, norm)
from .legendre import EtaFrame, LegendreCurve


class Kind(enum.Enum):
    """Ordered (base, director) pair drawn from {beta, gamma, v}."""

    BETA_GAMMA = "beta_gamma"
    BETA_V = "beta_v"
    GAMMA_BETA = "gamma_beta"
    V_BETA = "v_beta"
    GAMMA_V = "gamma_v"
    V_GAMMA = "v_gamma"

    @property
    def involves_beta(self) -> bool:
        return "beta" in self.value


ALL_KINDS: Tuple[Kind, ...] = tuple(sorted(Kind, key=lambda k: k.value))

_PAIRS = {
    Kind.BETA_GAMMA: ("beta", "gamma"),
    Kind.BETA_V: ("beta", "v"),
    Kind.GAMMA_BETA: ("gamma", "beta"),
    Kind.V_BETA: ("v", "beta"),
    Kind.GAMMA_V: ("gamma", "v"),
    Kind.V_GAMMA: ("v", "gamma"),
}


@dataclass(frozen=True)
class RuledSurface:
    """Phi(s, u) = base(s) + u * director(s)."""

    base: ParamCurve
    director: ParamCurve
    kind: Kind
    s_domain: Interval
    u_domain: Interval


@dataclass
class Mesh:
    """Structured quad mesh over (s, u).

    Vertices are laid out row-major with u as the slow (row) index and s as
    the fast (column) index.  `singular_rows` maps a u-row index to the s
    values of its vertices whose surface normal magnitude fell below
    tol_sing.
    """

    vertices: np.ndarray            # (n_rows * n_cols, 3)
    faces: List[Tuple[int, int, int, int]]
    params: np.ndarray              # (n_rows * n_cols, 2) of (s, u)
    n_rows: int                     # u samples
    n_cols: int                     # s samples
    singular_rows: Dict[int, List[float]] = field(default_factory=dict)


def build_ruled_surface(curve: LegendreCurve, kind: Kind,
                        u_domain: Interval = Interval(-3.0, 3.0),
                        eta_frame: Optional[EtaFrame] = None) -> RuledSurface:
    """Select base/director per `kind` from {beta, gamma, v}.

    Kinds involving beta need the eta-direction curve, supplied as the
    EtaFrame returned by rmf_from_legendre.
    """
    if kind.involves_beta and eta_frame is None:
        raise ContractViolation(f"kind {kind.value} requires the eta-direction "
                                "curve; pass eta_frame from rmf_from_legendre")
    curves = {"gamma": curve.gamma, "v": curve.v}
    if eta_frame is not None:
        curves["beta"] = eta_frame.beta
    base_name, director_name = _PAIRS[kind]
    return RuledSurface(
        base=curves[base_name],
        director=curves[director_name],
        kind=kind,
        s_domain=curve.grid.domain,
        u_domain=u_domain,
    )


def evaluate(surf: RuledSurface, s: float, u: float) -> np.ndarray:
    if not surf.s_domain.contains(s):
        raise DomainError(f"s={s} outside surface s-domain")
    if not surf.u_domain.contains(u):
        raise DomainError(f"u={u} outside surface u-domain")
    return surf.base(s) + u * surf.director(s)


def partials(surf: RuledSurface, s: float, u: float):
    """(dPhi/ds, dPhi/du) at (s, u)."""
    if not surf.s_domain.contains(s):
        raise DomainError(f"s={s} outside surface s-domain")
    if not surf.u_domain.contains(u):
        raise DomainError(f"u={u} outside surface u-domain")
    d_s = surf.base.derivative(s, 1) + u * surf.director.derivative(s, 1)
    d_u = surf.director(s)
    return d_s, d_u


def normal_vector(surf: RuledSurface, s: float, u: float) -> np.ndarray:
    """Unnormalized surface normal; a zero vector marks a singular point."""
    d_s, d_u = partials(surf, s, u)
    return cross(d_s, d_u)


def developability_defect(surf: RuledSurface, grid: SampledGrid):
    """Per-node |det(base', director, director')| and its max.

    Zero everywhere characterizes developable ruled surfaces.
    """
    defects = np.empty(grid.n)
    for i, s in enumerate(grid.nodes):
        bp = surf.base.derivative(s, 1)
        d = surf.director(s)
        dp = surf.director.derivative(s, 1)
        defects[i] = abs(float(np.linalg.det(np.column_stack([bp, d, dp]))))
    return defects, float(np.max(defects))


def striction_curve(surf: RuledSurface, grid: SampledGrid,
                    tol: Tolerances = DEFAULT_TOL) -> ParamCurve:
    """Striction curve base - (<base', director'>/<director', director'>) director."""
    values = np.empty((grid.n, 3))
    for i, s in enumerate(grid.nodes):
        dp = surf.director.derivative(s, 1)
        denom = dot(dp, dp)
        if denom <= tol.tol_kappa ** 2:
            raise CylindricalRulingError(
                f"director derivative vanishes at node s={s}; "
                "striction curve undefined for cylindrical rulings")
        values[i] = surf.base(s) - (dot(surf.base.derivative(s, 1), dp) / denom) \
            * surf.director(s)
    return ParamCurve.from_samples(grid.nodes, values)


def tessellate(surf: RuledSurface, s_samples: int, u_samples: int,
               tol: Tolerances = DEFAULT_TOL) -> Mesh:
    """Structured quad grid over s x u.

    Rows (constant u) containing vertices with |normal| < tol_sing are
    flagged in `singular_rows` together with the offending s values.
    """
    if s_samples < 2 or u_samples < 2:
        raise ContractViolation("tessellation needs at least 2 samples per axis")
    s_vals = np.linspace(surf.s_domain.lo, surf.s_domain.hi, s_samples)
    u_vals = np.linspace(surf.u_domain.lo, surf.u_domain.hi, u_samples)
    base_pts = np.array([surf.base(s) for s in s_vals])
    dir_pts = np.array([surf.director(s) for s in s_vals])
    base_d = np.array([surf.base.derivative(s, 1) for s in s_vals])
    dir_d = np.array([surf.director.derivative(s, 1) for s in s_vals])

    vertices = np.empty((u_samples * s_samples, 3))
    params = np.empty((u_samples * s_samples, 2))
    singular_rows: Dict[int, List[float]] = {}
    for i, u in enumerate(u_vals):
        row = base_pts + u * dir_pts
        vertices[i * s_samples:(i + 1) * s_samples] = row
        params[i * s_samples:(i + 1) * s_samples, 0] = s_vals
        params[i * s_samples:(i + 1) * s_samples, 1] = u
        normals = np.cross(base_d + u * dir_d, dir_pts)
        mags = np.linalg.norm(normals, axis=1)
        hit = np.nonzero(mags < tol.tol_sing)[0]
        if hit.size:
            singular_rows[i] = [float(s_vals[j]) for j in hit]

    faces = []
    for i in range(u_samples - 1):
        for j in range(s_samples - 1):
            a = i * s_samples + j
            faces.append((a, a + 1, a + s_samples + 1, a + s_samples))
    return Mesh(vertices, faces, params, u_samples, s_samples, singular_rows)
