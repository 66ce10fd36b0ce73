"""Exact distributions and moments of random distances in regular polygons.

For a regular n-gon with circumradius r the package evaluates, in closed
form, the distribution function of the length of a uniform isotropic random
chord, the density of the distance between two independent uniform interior
points, and every integer-order moment of that distance -- each cross-checked
by independent quadrature and Monte Carlo oracles.
"""
from .geometry import (DomainError, PolygonParams, PolygonSpec, contains,
                       derive_params, polygon, vertex, vertices)
from .chord_cdf import (BranchId, CurveSample, breakpoints, chord_cdf,
                        chord_pdf_numeric, mean_chord, mean_chord_integral,
                        select_branch)
from .distance_pdf import distance_pdf, h_flat, j_flat, phi_flat, phi_prefix
from .moments import (MAX_ORDER, MomentResult, chord_power_integral,
                      circle_moment, distance_power_integral, h_tilde, j_tilde,
                      moment, moment2_closed, moment2_from_polar,
                      moment4_closed, moment_via_cdf_quadrature,
                      moment_via_monte_carlo, moment_via_pdf_quadrature,
                      polar_moment, variance)
from .oracles import (IUR_CHORD, POINT_PAIR, McConfig, QuadConfig,
                      QuadratureError, integrate, mc_estimate, sample_point,
                      sample_points)
from . import antiderivatives, checks, circle, oracles

__version__ = "0.1.0"

__all__ = [
    "DomainError", "PolygonParams", "PolygonSpec", "contains", "derive_params",
    "polygon", "vertex", "vertices",
    "BranchId", "CurveSample", "breakpoints", "chord_cdf", "chord_pdf_numeric",
    "mean_chord", "mean_chord_integral", "select_branch",
    "distance_pdf", "h_flat", "j_flat", "phi_flat", "phi_prefix",
    "MAX_ORDER", "MomentResult", "chord_power_integral", "circle_moment",
    "distance_power_integral", "h_tilde", "j_tilde", "moment",
    "moment2_closed", "moment2_from_polar", "moment4_closed",
    "moment_via_cdf_quadrature", "moment_via_monte_carlo",
    "moment_via_pdf_quadrature", "polar_moment", "variance",
    "IUR_CHORD", "POINT_PAIR", "McConfig", "QuadConfig", "QuadratureError",
    "integrate", "mc_estimate", "sample_point", "sample_points",
    "antiderivatives", "checks", "circle", "oracles",
]
