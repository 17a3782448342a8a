"""Rotation-minimizing frames, Legendre curves on UT S^2, and the
singularities of the six ruled surfaces induced by the frame {eta, gamma, v}.
"""

from .config import DEFAULT_TOL, Tolerances
from .geomcore import (ContractViolation, CylindricalRulingError,
                       DegenerateCurvatureError, DomainError, GeometryError,
                       IntegrationError, Interval, ParamCurve, PoleError,
                       SampledGrid, ValidationError, cross, dot,
                       integrate_curve, norm, vec3)
from .framing import (FrenetApparatus, RMFApparatus, direction_curve,
                      frenet_frame, reconstruct_kappa_tau, rm_check,
                      rmf_propagate, slant_helix_sigma)
from .legendre import (EtaFrame, LegendreCurve, ValidationReport, is_legendre,
                       legendre_curvatures, legendre_from_rm_pair,
                       rmf_from_legendre, validate_utS2)
from .ruled import (ALL_KINDS, Kind, Mesh, RuledSurface, build_ruled_surface,
                    developability_defect, evaluate, normal_vector, partials,
                    striction_curve, tessellate)
from .singular import (ScanResult, SingularClass, SingularPoint, classify_point,
                       cone_apex, normal_form_surface, scan_singularities,
                       singular_locus)

__version__ = "0.1.0"
