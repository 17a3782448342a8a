"""Foundational numeric kernel: vectors, parametric curves, differentiation
and quadrature.

Everything downstream (framing, Legendre curves, ruled surfaces, the
singularity classifier) builds on the types and helpers here.  All types are
immutable values after construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import CubicHermiteSpline


# ---------------------------------------------------------------------------
# exceptions
# ---------------------------------------------------------------------------

class GeometryError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GeometryError):
    """Parameter outside the curve/surface domain."""


class ContractViolation(GeometryError):
    """A documented precondition was not met by the caller."""


class DegenerateCurvatureError(GeometryError):
    """Curvature (or a required denominator) vanished where a frame or
    formula is undefined."""


class IntegrationError(GeometryError):
    """Non-finite field value met during quadrature."""


class PoleError(GeometryError):
    """The singular locus escapes to infinity at the requested parameter."""


class CylindricalRulingError(GeometryError):
    """Director derivative vanished; the striction formula divides by it."""


class ValidationError(GeometryError):
    """Input failed a validation report; the report rides along."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------------------
# vector operations
# ---------------------------------------------------------------------------

def vec3(x, y, z) -> np.ndarray:
    return np.array([x, y, z], dtype=float)


def dot(a, b) -> float:
    return float(np.dot(a, b))


def cross(a, b) -> np.ndarray:
    return np.cross(a, b)


def norm(a) -> float:
    return float(np.linalg.norm(a))


# ---------------------------------------------------------------------------
# intervals and grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)):
            raise ContractViolation("interval bounds must be finite")
        if not self.hi > self.lo:
            raise ContractViolation(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def contains(self, s: float, slack: float = 1e-12) -> bool:
        pad = slack * max(1.0, abs(self.lo), abs(self.hi))
        return self.lo - pad <= s <= self.hi + pad

    def clamp(self, s: float) -> float:
        return min(max(s, self.lo), self.hi)


@dataclass(frozen=True)
class SampledGrid:
    """Uniform parameter grid over an interval, endpoints included."""

    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < 2:
            raise ContractViolation("grid needs at least two nodes")
        if not np.all(np.diff(nodes) > 0):
            raise ContractViolation("grid nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def uniform(cls, domain: Interval, n: int) -> "SampledGrid":
        if n < 2:
            raise ContractViolation("uniform grid needs n >= 2")
        return cls(np.linspace(domain.lo, domain.hi, n))

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def h(self) -> float:
        return float(self.nodes[1] - self.nodes[0])

    @property
    def domain(self) -> Interval:
        return Interval(float(self.nodes[0]), float(self.nodes[-1]))


# ---------------------------------------------------------------------------
# finite differences (Fornberg weights)
# ---------------------------------------------------------------------------

def fd_weights(z: float, x: np.ndarray, m: int) -> np.ndarray:
    """Weights w so that f^(m)(z) ~ sum_i w[i] f(x[i]).

    Fornberg's recursive algorithm; exact for polynomials of degree
    len(x) - 1, hence order len(x) - m stencils.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    c = np.zeros((n, m + 1))
    c1 = 1.0
    c4 = x[0] - z
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i] - z
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, m]


def _stencil_offsets(order: int) -> np.ndarray:
    # centered stencil of 4th-order accuracy for derivative `order`:
    # order 1 -> +-2, order 2 -> +-2, order 3 -> +-3
    reach = {1: 2, 2: 2, 3: 3}[order]
    return np.arange(-reach, reach + 1)


def callable_derivative(f: Callable[[float], np.ndarray], s: float, order: int,
                        h: float, domain: Optional[Interval] = None):
    """4th-order finite-difference derivative of a callable.

    Centered stencil when it fits inside `domain`; otherwise the window is
    shifted to one side (same polynomial order).
    """
    offsets = _stencil_offsets(order).astype(float)
    if domain is not None:
        lo, hi = domain.lo, domain.hi
        shift_up = max(0.0, (lo - (s + offsets[0] * h)) / h)
        shift_dn = max(0.0, ((s + offsets[-1] * h) - hi) / h)
        if shift_up > 0 and shift_dn > 0:
            raise DomainError("stencil does not fit in domain; step too large")
        offsets = offsets + np.ceil(shift_up) - np.ceil(shift_dn)
    nodes = s + offsets * h
    w = fd_weights(s, nodes, order)
    vals = np.array([np.asarray(f(t), dtype=float) for t in nodes])
    return np.tensordot(w, vals, axes=(0, 0))


def grid_derivative(values: np.ndarray, h: float, order: int = 1) -> np.ndarray:
    """Per-node 4th-order derivative of uniformly sampled values.

    Interior nodes use centered stencils, boundary nodes shifted ones.
    `values` may be (n,) or (n, d).
    """
    values = np.asarray(values, dtype=float)
    n = values.shape[0]
    reach = {1: 2, 2: 2, 3: 3}[order]
    width = 2 * reach + 1
    if n < width:
        raise ContractViolation(f"need at least {width} nodes for order {order}")
    out = np.zeros_like(values, dtype=float)
    w_c = fd_weights(0.0, np.arange(-reach, reach + 1, dtype=float) * h, order)
    # interior, vectorized
    for k, wk in enumerate(w_c):
        out[reach:n - reach] += wk * values[k:n - 2 * reach + k]
    # boundaries, shifted windows
    for i in range(reach):
        w = fd_weights(i * h, np.arange(width, dtype=float) * h, order)
        out[i] = np.tensordot(w, values[:width], axes=(0, 0))
        w = fd_weights((width - 1 - i) * h, np.arange(width, dtype=float) * h, order)
        out[n - 1 - i] = np.tensordot(w, values[n - width:], axes=(0, 0))
    return out


# ---------------------------------------------------------------------------
# parametric curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParamCurve:
    """Smooth map s -> R^3 with derivatives up to order 3.

    Analytic derivative callables are used when supplied; missing orders are
    synthesized by 4th-order finite differences of the highest available
    analytic order.
    """

    domain: Interval
    fn: Callable[[float], np.ndarray]
    d1: Optional[Callable[[float], np.ndarray]] = None
    d2: Optional[Callable[[float], np.ndarray]] = None
    d3: Optional[Callable[[float], np.ndarray]] = None
    arc_length: bool = False

    def __call__(self, s: float) -> np.ndarray:
        if not self.domain.contains(s):
            raise DomainError(f"s={s} outside domain [{self.domain.lo}, {self.domain.hi}]")
        p = np.asarray(self.fn(s), dtype=float)
        if not np.all(np.isfinite(p)):
            raise IntegrationError(f"curve evaluated to a non-finite point at s={s}")
        return p

    @property
    def fd_step(self) -> float:
        return max(1e-5, 1e-7 * self.domain.length)

    def derivative(self, s: float, order: int = 1) -> np.ndarray:
        if order not in (1, 2, 3):
            raise ContractViolation(f"derivative order must be 1..3, got {order}")
        if not self.domain.contains(s):
            raise DomainError(f"s={s} outside domain [{self.domain.lo}, {self.domain.hi}]")
        analytic = {1: self.d1, 2: self.d2, 3: self.d3}
        if analytic[order] is not None:
            return np.asarray(analytic[order](s), dtype=float)
        # differentiate the highest analytic order below the request
        base_order = 0
        base_fn = self.fn
        for k in (2, 1):
            if k < order and analytic[k] is not None:
                base_order, base_fn = k, analytic[k]
                break
        return callable_derivative(base_fn, s, order - base_order,
                                   self.fd_step, self.domain)

    def samples(self, grid: SampledGrid) -> np.ndarray:
        return np.array([self(s) for s in grid.nodes])

    def check_unit_speed(self, grid: SampledGrid, tol_unit: float) -> float:
        speeds = np.array([norm(self.derivative(s, 1)) for s in grid.nodes])
        return float(np.max(np.abs(speeds - 1.0)))

    @classmethod
    def from_samples(cls, nodes: np.ndarray, values: np.ndarray,
                     arc_length: bool = False) -> "ParamCurve":
        """Cubic-Hermite curve through uniformly spaced samples.

        Node derivatives come from 4th-order grid stencils, so derivative()
        at the nodes is 4th-order accurate.
        """
        nodes = np.asarray(nodes, dtype=float)
        values = np.asarray(values, dtype=float)
        h = float(nodes[1] - nodes[0])
        deriv = grid_derivative(values, h, 1)
        spline = CubicHermiteSpline(nodes, values, deriv, axis=0)
        dspline = spline.derivative()
        d2spline = dspline.derivative()
        return cls(
            domain=Interval(float(nodes[0]), float(nodes[-1])),
            fn=lambda s: spline(s),
            d1=lambda s: dspline(s),
            d2=lambda s: d2spline(s),
            arc_length=arc_length,
        )


def integrate_curve(field: Callable[[float], np.ndarray], domain: Interval,
                    s0: float, c0, n_steps: int) -> ParamCurve:
    """Antiderivative curve beta with beta' = field and beta(s0) = c0.

    Classical RK4 on uniform steps (for a pure quadrature this is Simpson's
    rule per step); evaluation between nodes by cubic Hermite interpolation
    using the stored field values.
    """
    if n_steps < 16:
        raise ContractViolation("integrate_curve needs n_steps >= 16")
    if not domain.contains(s0):
        raise DomainError(f"s0={s0} outside domain")
    c0 = np.asarray(c0, dtype=float)
    nodes = np.linspace(domain.lo, domain.hi, n_steps + 1)
    h = (domain.hi - domain.lo) / n_steps

    def f(s):
        v = np.asarray(field(s), dtype=float)
        if not np.all(np.isfinite(v)):
            raise IntegrationError(f"non-finite field value at s={s}")
        return v

    fvals = np.array([f(s) for s in nodes])
    mid = np.array([f(s + 0.5 * h) for s in nodes[:-1]])
    vals = np.zeros((n_steps + 1, c0.size))
    for i in range(n_steps):
        vals[i + 1] = vals[i] + (h / 6.0) * (fvals[i] + 4.0 * mid[i] + fvals[i + 1])

    spline = CubicHermiteSpline(nodes, vals, fvals, axis=0)
    offset = c0 - spline(s0)

    return ParamCurve(
        domain=domain,
        fn=lambda s: spline(s) + offset,
        d1=field,
        arc_length=True,
    )
