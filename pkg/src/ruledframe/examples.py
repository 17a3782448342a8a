"""Built-in example curves.

Three closed-form Legendre pairs plus a circular helix, with analytic
derivatives.  `example1` and `example2` carry small algebraic corrections to
their second member so the pair actually lies on UT S^2 (the `as_printed`
variants keep the uncorrected formulas and are expected to fail validation);
`example3` likewise needs one sign fix in v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .geomcore import Interval, ParamCurve

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def _curve(domain: Interval, fn, d1=None, d2=None, d3=None,
           arc_length=False) -> ParamCurve:
    return ParamCurve(domain=domain, fn=fn, d1=d1, d2=d2, d3=d3,
                      arc_length=arc_length)


# --- example 1: circle pair on the sphere, cone for kind v_gamma ------------

def example1_pair(domain: Interval, as_printed: bool = False):
    a = 1.0 / SQRT2
    gamma = _curve(
        domain,
        fn=lambda s: np.array([-a * np.cos(s), -a * np.sin(s), a]),
        d1=lambda s: np.array([a * np.sin(s), -a * np.cos(s), 0.0]),
        d2=lambda s: np.array([a * np.cos(s), a * np.sin(s), 0.0]),
    )
    vz = 0.0 if as_printed else a
    v = _curve(
        domain,
        fn=lambda s: np.array([a * np.cos(s), a * np.sin(s), vz]),
        d1=lambda s: np.array([-a * np.sin(s), a * np.cos(s), 0.0]),
        d2=lambda s: np.array([-a * np.cos(s), -a * np.sin(s), 0.0]),
    )
    return gamma, v


# --- example 2: (B, T) pair of the unit-speed circular helix ----------------

def helix_curve(domain: Interval) -> ParamCurve:
    a = 1.0 / SQRT2
    return _curve(
        domain,
        fn=lambda s: np.array([np.cos(a * s), np.sin(a * s), a * s]),
        d1=lambda s: np.array([-a * np.sin(a * s), a * np.cos(a * s), a]),
        d2=lambda s: np.array([-0.5 * np.cos(a * s), -0.5 * np.sin(a * s), 0.0]),
        d3=lambda s: np.array([0.5 * a * np.sin(a * s), -0.5 * a * np.cos(a * s), 0.0]),
        arc_length=True,
    )


def example2_pair(domain: Interval, as_printed: bool = False):
    a = 1.0 / SQRT2
    # gamma = binormal B, v = tangent T of the helix
    bsign = 1.0 if as_printed else -1.0
    gamma = _curve(
        domain,
        fn=lambda s: np.array([a * np.sin(a * s), bsign * a * np.cos(a * s), a]),
        d1=lambda s: np.array([0.5 * np.cos(a * s), -bsign * 0.5 * np.sin(a * s), 0.0]),
        d2=lambda s: np.array([-0.5 * a * np.sin(a * s),
                               -bsign * 0.5 * a * np.cos(a * s), 0.0]),
    )
    v = _curve(
        domain,
        fn=lambda s: np.array([-a * np.sin(a * s), a * np.cos(a * s), a]),
        d1=lambda s: np.array([-0.5 * np.cos(a * s), -0.5 * np.sin(a * s), 0.0]),
        d2=lambda s: np.array([0.5 * a * np.sin(a * s), -0.5 * a * np.cos(a * s), 0.0]),
    )
    return gamma, v


# --- example 3: spherical pair with m = sqrt(3) sin(s) ----------------------

def example3_pair(domain: Interval, as_printed: bool = False):
    sign = -1.0 if as_printed else 1.0
    gamma = _curve(
        domain,
        fn=lambda s: np.array([
            (3 * np.cos(s) - np.cos(3 * s)) / 4,
            (3 * np.sin(s) - np.sin(3 * s)) / 4,
            SQRT3 * np.cos(s) / 2,
        ]),
        d1=lambda s: np.array([
            (-3 * np.sin(s) + 3 * np.sin(3 * s)) / 4,
            (3 * np.cos(s) - 3 * np.cos(3 * s)) / 4,
            -SQRT3 * np.sin(s) / 2,
        ]),
        d2=lambda s: np.array([
            (-3 * np.cos(s) + 9 * np.cos(3 * s)) / 4,
            (-3 * np.sin(s) + 9 * np.sin(3 * s)) / 4,
            -SQRT3 * np.cos(s) / 2,
        ]),
    )
    v = _curve(
        domain,
        fn=lambda s: np.array([
            (3 * np.sin(s) + sign * np.sin(3 * s)) / 4,
            (-3 * np.cos(s) - np.cos(3 * s)) / 4,
            -SQRT3 * np.sin(s) / 2,
        ]),
        d1=lambda s: np.array([
            (3 * np.cos(s) + sign * 3 * np.cos(3 * s)) / 4,
            (3 * np.sin(s) + 3 * np.sin(3 * s)) / 4,
            -SQRT3 * np.cos(s) / 2,
        ]),
        d2=lambda s: np.array([
            (-3 * np.sin(s) - sign * 9 * np.sin(3 * s)) / 4,
            (3 * np.cos(s) + 9 * np.cos(3 * s)) / 4,
            SQRT3 * np.sin(s) / 2,
        ]),
    )
    return gamma, v


def example3_eta(s: float) -> np.ndarray:
    return np.array([SQRT3 * np.cos(2 * s) / 2, SQRT3 * np.sin(2 * s) / 2, -0.5])


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    is_pair: bool
    default_domain: Interval
    pair_builder: Optional[Callable[[Interval, bool], Tuple[ParamCurve, ParamCurve]]]
    curve_builder: Optional[Callable[[Interval], ParamCurve]]
    description: str


BUILTIN_EXAMPLES = {
    "example1": ExampleSpec(
        "example1", True, Interval(0.0, 2.0 * math.pi), example1_pair, None,
        "circle pair on the sphere; kind v_gamma is a cone with apex (0, 0, sqrt 2)"),
    "example2": ExampleSpec(
        "example2", True, Interval(0.0, 2.0 * math.pi), example2_pair, None,
        "(binormal, tangent) pair of the unit-speed helix; kind gamma_v is a cone"),
    "example3": ExampleSpec(
        "example3", True, Interval(0.0, math.pi), example3_pair, None,
        "spherical pair with m = sqrt(3) sin(s); kind beta_gamma has a swallowtail"),
    "helix": ExampleSpec(
        "helix", False, Interval(0.0, 2.0 * math.pi), None, helix_curve,
        "unit-speed circular helix; a rotation-minimizing pair is propagated along it"),
}
