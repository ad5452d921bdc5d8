"""Exact computations with point configurations, GIT stability, the Gale
transform, and the Segre cubic / Igusa quartic pair."""

__version__ = "0.1.0"

from .configurations import StabilityVerdict, gale, git_verdict, git_verdict_bruteforce, lies_on_conic
from .fiber import (
    FiberDatum,
    IncidenceConfiguration,
    KernelPresentation,
    detect_decomposable,
    enumerate_decomposables,
    fiber_dimension,
    incidence_15_3,
    kernel_presentation,
    quotient_dimension,
    slope_report,
)
from .linalg import RationalMatrix, nullspace_basis, rank
from .modular import MatchingInvariantBasis, build_dual_quartic, build_kappa, build_segre_cubic, matching_values, node_points
from .polynomials import (
    Hypersurface,
    SparsePolynomial,
    evaluate,
    gradient_map,
    hessian_rank_at,
    interpolate_hypersurface,
    restrict_to_line,
)
from .projective import ProjectiveConfiguration, ProjectivePoint, find_projective_equivalence, projective_equivalent
