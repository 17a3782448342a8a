"""Singular loci of the six ruled surfaces and their classification.

Each kind has a governing scalar function g built from the curvature
functions (m, n): the singular locus is u(s) = -g(s), and the class at an
event follows a per-kind decision table over (u0, g', g''):
cuspidal edge, swallowtail, cuspidal crosscap, cone, regular or degenerate.
Reference normal-form surfaces for the three local models are provided for
visual comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .config import DEFAULT_TOL, Tolerances
from .geomcore import (ContractViolation, Interval, PoleError, SampledGrid,
                       cross, fd_weights, norm)
from .legendre import EtaFrame, LegendreCurve, rmf_from_legendre
from .ruled import Kind, Mesh, RuledSurface, build_ruled_surface


class SingularClass(enum.Enum):
    CUSPIDAL_EDGE = "cuspidal_edge"
    SWALLOWTAIL = "swallowtail"
    CUSPIDAL_CROSSCAP = "cuspidal_crosscap"
    CONE = "cone"
    REGULAR = "regular"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SingularPoint:
    s0: float
    u0: Optional[float]
    cls: SingularClass
    diagnostics: Dict[str, float]
    location: Optional[np.ndarray]


@dataclass(frozen=True)
class ScanResult:
    kind: Kind
    events: List[SingularPoint]
    cuspidal_edge_arcs: List[Tuple[float, float]]
    poles: List[float]
    cone: Optional[SingularPoint] = None


# ---------------------------------------------------------------------------
# governing functions
# ---------------------------------------------------------------------------

# family "inverse": locus -1/f, tests on f and 1/f        (beta-base kinds)
# family "plain":   locus -f,  tests on f                  (beta-director kinds)
# family "ratio":   locus -num/den, tests on the ratio     (gamma/v kinds)
_FAMILY = {
    Kind.BETA_GAMMA: ("inverse", "m"),
    Kind.BETA_V: ("inverse", "n"),
    Kind.GAMMA_BETA: ("plain", "m"),
    Kind.V_BETA: ("plain", "n"),
    Kind.GAMMA_V: ("ratio", "m/n"),
    Kind.V_GAMMA: ("ratio", "n/m"),
}


@dataclass(frozen=True)
class Governing:
    family: str
    label: str
    num: Callable[[float], float]
    den: Optional[Callable[[float], float]]   # None for "plain"

    def g(self, s: float) -> float:
        if self.family == "plain":
            return self.num(s)
        if self.family == "inverse":
            return 1.0 / self.num(s)
        return self.num(s) / self.den(s)

    def locus(self, s: float) -> float:
        return -self.g(s)


def governing(curve: LegendreCurve, kind: Kind) -> Governing:
    family, label = _FAMILY[kind]
    m, n = curve.m_at, curve.n_at
    if family == "inverse":
        f = m if label == "m" else n
        return Governing(family, label, f, f)
    if family == "plain":
        f = m if label == "m" else n
        return Governing(family, label, f, None)
    if label == "m/n":
        return Governing(family, label, m, n)
    return Governing(family, label, n, m)


def _scalar_deriv(f: Callable[[float], float], s: float, order: int,
                  grid: SampledGrid) -> float:
    # 5-point stencil on a locally refined step (grid spacing / 8)
    h = grid.h / 8.0
    offsets = np.arange(-2.0, 3.0)
    lo, hi = grid.domain.lo, grid.domain.hi
    shift_up = np.ceil(max(0.0, (lo - (s - 2 * h)) / h))
    shift_dn = np.ceil(max(0.0, ((s + 2 * h) - hi) / h))
    offsets = offsets + shift_up - shift_dn
    nodes = s + offsets * h
    w = fd_weights(s, nodes, order)
    return float(np.dot(w, [f(t) for t in nodes]))


# ---------------------------------------------------------------------------
# locus and constancy
# ---------------------------------------------------------------------------

def singular_locus(curve: LegendreCurve, kind: Kind, grid: SampledGrid,
                   tol: Tolerances = DEFAULT_TOL):
    """Per-node locus u(s) = -g(s) with pole flags.

    At a pole (denominator magnitude < tol_pole) the locus escapes to
    infinity and the node's u value is NaN; poles are data, not errors.
    """
    gov = governing(curve, kind)
    u = np.empty(grid.n)
    poles = np.zeros(grid.n, dtype=bool)
    for i, s in enumerate(grid.nodes):
        if gov.den is not None and abs(gov.den(s)) < tol.tol_pole:
            poles[i] = True
            u[i] = np.nan
        else:
            u[i] = gov.locus(s)
    return u, poles


def _constant_governing(curve: LegendreCurve, kind: Kind, grid: SampledGrid,
                        tol: Tolerances):
    """(is_cone, constant_value).  Cone iff the governing function is
    constant; for locus -1/f kinds the constant must also be nonzero so the
    locus stays finite."""
    gov = governing(curve, kind)
    if gov.family == "inverse":
        vals = np.array([gov.num(s) for s in grid.nodes])
        scale = float(np.max(np.abs(vals)))
        if scale <= tol.tol_pole:
            return False, None     # f == 0: locus at infinity, all regular
        if float(np.max(vals) - np.min(vals)) <= tol.tol_const * scale:
            return True, -1.0 / float(np.mean(vals))
        return False, None
    if gov.family == "plain":
        vals = np.array([gov.num(s) for s in grid.nodes])
        scale = max(float(np.max(np.abs(vals))), 1e-300)
        spread = float(np.max(vals) - np.min(vals))
        if spread <= tol.tol_const * max(scale, 1.0) or spread <= tol.tol_const:
            return True, -float(np.mean(vals))
        return False, None
    # ratio family: the ratio must be defined everywhere to be constant
    nums = np.array([gov.num(s) for s in grid.nodes])
    dens = np.array([gov.den(s) for s in grid.nodes])
    if np.min(np.abs(dens)) <= tol.tol_pole:
        return False, None
    ratio = nums / dens
    scale = max(float(np.max(np.abs(ratio))), 1e-300)
    if float(np.max(ratio) - np.min(ratio)) <= tol.tol_const * scale:
        return True, -float(np.mean(ratio))
    return False, None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def decide(family: str, u0: float, g_prime: float, g_double_prime: float,
           tol_deriv: float) -> SingularClass:
    """Decision table over the governing-function data at one point.

    Mutually exclusive by construction; near-tolerance straddles fall into
    DEGENERATE rather than being promoted to a named class.
    """
    if abs(u0) > tol_deriv:
        if abs(g_prime) > tol_deriv:
            return SingularClass.CUSPIDAL_EDGE
        if abs(g_double_prime) > tol_deriv:
            return SingularClass.SWALLOWTAIL
        return SingularClass.DEGENERATE
    if family != "inverse" and abs(g_prime) > tol_deriv:
        return SingularClass.CUSPIDAL_CROSSCAP
    return SingularClass.DEGENERATE


def _surface_for(curve: LegendreCurve, kind: Kind, u_domain: Interval,
                 eta_frame: Optional[EtaFrame]) -> Tuple[RuledSurface, Optional[EtaFrame]]:
    if kind.involves_beta and eta_frame is None:
        eta_frame = rmf_from_legendre(curve)
    return build_ruled_surface(curve, kind, u_domain, eta_frame), eta_frame


def _location(surf: RuledSurface, s0: float, u0: float) -> np.ndarray:
    # direct evaluation: u0 may lie outside the tessellated u window
    return surf.base(s0) + u0 * surf.director(s0)


def _normal_mag(surf: RuledSurface, s0: float, u0: float) -> float:
    d_s = surf.base.derivative(s0, 1) + u0 * surf.director.derivative(s0, 1)
    return norm(cross(d_s, surf.director(s0)))


def _diagnostics(curve: LegendreCurve, gov: Governing, s0: float,
                 grid: SampledGrid, u0, g0, gp, gpp) -> Dict[str, float]:
    d = {
        "u0": u0, "g": g0, "g_prime": gp, "g_double_prime": gpp,
        "m": curve.m_at(s0), "n": curve.n_at(s0),
        "m_prime": _scalar_deriv(curve.m_at, s0, 1, grid),
        "n_prime": _scalar_deriv(curve.n_at, s0, 1, grid),
        "m_double_prime": _scalar_deriv(curve.m_at, s0, 2, grid),
        "n_double_prime": _scalar_deriv(curve.n_at, s0, 2, grid),
    }
    return {k: (float(v) if v is not None else None) for k, v in d.items()}


def classify_point(curve: LegendreCurve, kind: Kind, s0: float,
                   tol: Tolerances = DEFAULT_TOL,
                   u_domain: Interval = Interval(-3.0, 3.0),
                   eta_frame: Optional[EtaFrame] = None,
                   _cone_checked: bool = False) -> SingularPoint:
    """Classify the ruling through s0 per the per-kind decision table."""
    grid = curve.grid
    if not grid.domain.contains(s0):
        raise ContractViolation(f"s0={s0} outside the curve domain")
    gov = governing(curve, kind)
    surf, eta_frame = _surface_for(curve, kind, u_domain, eta_frame)

    # cone short-circuit: constant governing function
    if not _cone_checked:
        is_cone, u_const = _constant_governing(curve, kind, grid, tol)
        if is_cone:
            loc = _location(surf, s0, u_const)
            diag = _diagnostics(curve, gov, s0, grid, u_const,
                                -u_const, 0.0, 0.0)
            return SingularPoint(float(s0), float(u_const),
                                 SingularClass.CONE, diag, loc)

    if gov.family == "inverse":
        f0 = gov.num(s0)
        if abs(f0) < tol.tol_pole:
            raise PoleError(
                f"locus pole at s0={s0} for kind {kind.value}: no finite singular u")
    elif gov.family == "ratio":
        num0, den0 = gov.num(s0), gov.den(s0)
        if abs(den0) < tol.tol_pole:
            if abs(num0) < tol.tol_pole:
                diag = _diagnostics(curve, gov, s0, grid, None, None, None, None)
                return SingularPoint(float(s0), None, SingularClass.DEGENERATE,
                                     diag, None)
            # locus at infinity: regular if the normal stays away from zero
            us = np.linspace(u_domain.lo, u_domain.hi, 65)
            min_mag = min(_normal_mag(surf, s0, u) for u in us)
            cls = (SingularClass.REGULAR if min_mag > tol.tol_sing
                   else SingularClass.DEGENERATE)
            diag = _diagnostics(curve, gov, s0, grid, None, None, None, None)
            return SingularPoint(float(s0), None, cls, diag, None)

    g0 = gov.g(s0)
    gp = _scalar_deriv(gov.g, s0, 1, grid)
    gpp = _scalar_deriv(gov.g, s0, 2, grid)
    u0 = -g0
    cls = decide(gov.family, u0, gp, gpp, tol.tol_deriv)
    diag = _diagnostics(curve, gov, s0, grid, u0, g0, gp, gpp)
    loc = _location(surf, s0, u0) if cls is not SingularClass.REGULAR else None
    return SingularPoint(float(s0), float(u0), cls, diag, loc)


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------

def _bisect(f: Callable[[float], float], a: float, b: float,
            tol_interval: float = 1e-10) -> float:
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0:
        raise ContractViolation("root not bracketed")
    while b - a > tol_interval:
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if fa * fm < 0:
            b, fb = mid, fm
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)


def scan_singularities(curve: LegendreCurve, kind: Kind,
                       grid: Optional[SampledGrid] = None,
                       u_domain: Interval = Interval(-3.0, 3.0),
                       tol: Tolerances = DEFAULT_TOL,
                       eta_frame: Optional[EtaFrame] = None) -> ScanResult:
    """Locate and classify every critical event of the kind's locus.

    Events are zeros of g' (swallowtail candidates) and, for the kinds that
    admit cuspidal crosscaps, zeros of g itself; each is bracketed by grid
    sign changes and refined by bisection.  The stretches between events and
    poles classify as cuspidal-edge arcs when the edge conditions hold there.
    """
    grid = grid or curve.grid
    gov = governing(curve, kind)
    surf, eta_frame = _surface_for(curve, kind, u_domain, eta_frame)

    is_cone, u_const = _constant_governing(curve, kind, grid, tol)
    if is_cone:
        s_mid = float(grid.nodes[grid.n // 2])
        cone_pt = classify_point(curve, kind, s_mid, tol, u_domain, eta_frame)
        return ScanResult(kind, [cone_pt], [], [], cone=cone_pt)

    nodes = grid.nodes
    if gov.den is not None:
        den_vals = np.array([gov.den(s) for s in nodes])
        valid = np.abs(den_vals) > tol.tol_pole
    else:
        valid = np.ones(grid.n, dtype=bool)

    poles: List[float] = [float(nodes[i]) for i in np.nonzero(~valid)[0]]
    if gov.den is not None:
        for i in range(grid.n - 1):
            if valid[i] and valid[i + 1] and den_vals[i] * den_vals[i + 1] < 0:
                poles.append(_bisect(gov.den, nodes[i], nodes[i + 1]))
    poles = sorted(poles)

    def gp(s):
        return _scalar_deriv(gov.g, s, 1, grid)

    event_params: List[float] = []
    gp_vals = np.array([gp(s) if valid[i] else np.nan
                        for i, s in enumerate(nodes)])
    for i in range(grid.n - 1):
        if not (valid[i] and valid[i + 1]):
            continue
        a, b = gp_vals[i], gp_vals[i + 1]
        if a == 0.0:
            event_params.append(float(nodes[i]))
        elif a * b < 0:
            event_params.append(_bisect(gp, nodes[i], nodes[i + 1]))
    if valid[-1] and gp_vals[-1] == 0.0:
        event_params.append(float(nodes[-1]))

    if gov.family != "inverse":
        num_vals = np.array([gov.num(s) for s in nodes])
        for i in range(grid.n - 1):
            if not (valid[i] and valid[i + 1]):
                continue
            a, b = num_vals[i], num_vals[i + 1]
            if a == 0.0:
                event_params.append(float(nodes[i]))
            elif a * b < 0:
                event_params.append(_bisect(gov.num, nodes[i], nodes[i + 1]))
        if valid[-1] and num_vals[-1] == 0.0:
            event_params.append(float(nodes[-1]))

    # dedupe and classify
    event_params = sorted(event_params)
    deduped: List[float] = []
    for s in event_params:
        if not deduped or s - deduped[-1] > 1e-8:
            deduped.append(s)
    events: List[SingularPoint] = []
    for s in deduped:
        try:
            events.append(classify_point(curve, kind, s, tol, u_domain,
                                         eta_frame, _cone_checked=True))
        except PoleError:
            continue

    # cuspidal-edge arcs between breakpoints
    breaks = sorted({grid.domain.lo, grid.domain.hi}
                    | set(poles) | {e.s0 for e in events})
    arcs: List[Tuple[float, float]] = []
    for a, b in zip(breaks[:-1], breaks[1:]):
        if b - a <= grid.h:
            continue
        mid = 0.5 * (a + b)
        try:
            pt = classify_point(curve, kind, mid, tol, u_domain, eta_frame,
                                _cone_checked=True)
        except PoleError:
            continue
        if pt.cls is SingularClass.CUSPIDAL_EDGE:
            arcs.append((a, b))
    return ScanResult(kind, events, arcs, poles)


def cone_apex(curve: LegendreCurve, kind: Kind,
              grid: Optional[SampledGrid] = None,
              tol: Tolerances = DEFAULT_TOL,
              eta_frame: Optional[EtaFrame] = None):
    """Apex of a conical kind plus the max apex-to-ruling distance
    certificate.  Contract violation if the kind is not conical."""
    grid = grid or curve.grid
    is_cone, u_const = _constant_governing(curve, kind, grid, tol)
    if not is_cone:
        raise ContractViolation(f"kind {kind.value} is not a cone for this curve")
    surf, eta_frame = _surface_for(curve, kind, Interval(-3.0, 3.0), eta_frame)
    s_mid = float(grid.nodes[grid.n // 2])
    apex = _location(surf, s_mid, u_const)
    max_dist = 0.0
    for s in grid.nodes:
        b = surf.base(s)
        d = surf.director(s)
        dn = norm(d)
        # a vanishing director degenerates the ruling to the base point
        dist = norm(apex - b) if dn < 1e-14 else norm(cross(apex - b, d)) / dn
        max_dist = max(max_dist, dist)
    return apex, float(max_dist)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def normal_form_surface(cls: SingularClass, n_u: int = 64,
                        n_v: int = 64) -> Mesh:
    """Reference mesh of the local model over (u, v) in [-1, 1]^2.

    cuspidal edge: (t^2, t^3, w); swallowtail: (3u^4 + u^2 v, 4u^3 + 2uv, v);
    cuspidal crosscap: (u^3, u^3 v^3, v^2).
    """
    forms = {
        SingularClass.CUSPIDAL_EDGE: lambda u, v: (u * u, u ** 3, v),
        SingularClass.SWALLOWTAIL: lambda u, v: (3 * u ** 4 + u * u * v,
                                                 4 * u ** 3 + 2 * u * v, v),
        SingularClass.CUSPIDAL_CROSSCAP: lambda u, v: (u ** 3, u ** 3 * v ** 3,
                                                       v * v),
    }
    if cls not in forms:
        raise ContractViolation(f"no normal form for class {cls.value}")
    f = forms[cls]
    u_vals = np.linspace(-1.0, 1.0, n_u)
    v_vals = np.linspace(-1.0, 1.0, n_v)
    vertices = np.empty((n_v * n_u, 3))
    params = np.empty((n_v * n_u, 2))
    for i, v in enumerate(v_vals):
        for j, u in enumerate(u_vals):
            vertices[i * n_u + j] = f(u, v)
            params[i * n_u + j] = (u, v)
    faces = []
    for i in range(n_v - 1):
        for j in range(n_u - 1):
            a = i * n_u + j
            faces.append((a, a + 1, a + n_u + 1, a + n_u))
    return Mesh(vertices, faces, params, n_v, n_u, {})
