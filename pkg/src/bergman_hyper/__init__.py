"""Hypercontractivity of dilations on weighted Bergman spaces of the unit disk."""

from .inequalities import (
    CheckKind,
    CheckReport,
    HyperCase,
    check_dilation_embedding,
    check_hypercontractivity,
    check_kulikov,
    check_log_sobolev,
    check_pointwise_bound,
    convexity_profile,
    laplacian_identity_residual,
    monomial_hyper_margin,
    theorem_radius,
)
from .quadrature import (
    DiskQuadrature,
    DivergenceError,
    RadialRule,
    bergman_integral,
    bergman_norm,
    circle_mean,
    coefficient_norm2,
    disk_quadrature,
    gauss_jacobi_rule,
    monomial_moment,
)
from .search import critical_radius, sharpness_scan, worst_case_search
from .series import (
    AnalyticFunction,
    BinomialPower,
    ExpLinear,
    PowerSeries,
    parse_function,
    random_polynomial,
)

__version__ = "0.1.0"
