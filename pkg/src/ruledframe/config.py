"""Shared numerical tolerances.

A single record so that the library, the CLI and the test suite agree on
every threshold.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # curve / frame checks
    tol_unit: float = 1e-6        # unit-speed / unit-field deviation
    tol_rm: float = 1e-5          # rotation-minimizing defect
    tol_kappa: float = 1e-8       # degenerate-curvature threshold
    # Legendre-curve checks
    tol_sphere: float = 1e-8      # | |gamma| - 1 |, | |v| - 1 |
    tol_ortho: float = 1e-8       # |<gamma, v>|
    tol_legendre: float = 1e-6    # max |l|
    tol_eq6: float = 1e-5         # structure-equation residuals
    # ruled-surface checks
    tol_dev: float = 1e-8         # developability determinant
    tol_sing: float = 1e-7        # |normal vector| at a singular point
    # classifier thresholds
    tol_deriv: float = 1e-6       # zero tests on g', g''
    tol_const: float = 1e-9       # relative variation for cone detection
    tol_pole: float = 1e-8        # denominator magnitude at a pole


DEFAULT_TOL = Tolerances()
