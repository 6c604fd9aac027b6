"""Lambert quadrilaterals in the Poincaré disk and the H_{p,q}-convexity of arsh."""

from hyplambert.errors import (
    CoincidentPoints,
    DegenerateQuadruple,
    DomainError,
    InsufficientSamples,
    VerificationFailure,
)
from hyplambert.geodesic import Diameter, OrthoCircle, carrier_through, ideal_endpoints
from hyplambert.holder import (
    ConvexityClass,
    check_monotone,
    classify_arsh_convexity,
    critical_curve_C,
    empirical_convexity_test,
    holder_mean,
)
from hyplambert.hyp_metric import (
    absolute_ratio,
    chordal_distance,
    rho_by_endpoints,
    rho_by_integration,
    rho_disk,
    rho_halfplane,
)
from hyplambert.lambert import (
    LambertQuad,
    QuadParams,
    build_quad,
    product_bound,
    side_lengths_direct,
    sum_bounds,
    verify_theorems,
)
from hyplambert.points import INFINITY, DiskPoint, HalfPlanePoint

__version__ = "0.1.0"
