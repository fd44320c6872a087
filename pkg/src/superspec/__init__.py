"""Superconvergence points of Chebyshev and Legendre interpolants.

The main entry points are re-exported here; see the submodules for the
full surface.
"""

from .barycentric import ErrorReport, Interpolant, build_interpolant, error_report
from .derivcolloc import (
    ClosedFormError,
    DerivCollocProblem,
    Theorem3,
    closed_form_error,
    ode_solve,
    solve,
    value_superpoints,
    verify_closed_form,
)
from .errorbounds import (
    BoundKind,
    EllipseParams,
    Quantity,
    Theorem,
    bound_value,
    contour_error_oracle,
    ellipse_params,
    envelope_check,
    estimate_c_rho,
    lemma21_magnitude,
    lemma22_max,
    rho_from_pole,
)
from .functions import PoleFunction, PolynomialFunction, pole2, runge
from .nodes import NodeFamily, NodeSet, generate_nodes, nodal_poly
from .orthopoly import EllipsePoint, PolyKind, ellipse_point, eval_deriv, eval_poly
from .superpoints import SuperpointSet, asymptotic_guess, superpoints

__version__ = "0.1.0"

__all__ = [
    "BoundKind",
    "ClosedFormError",
    "DerivCollocProblem",
    "EllipseParams",
    "EllipsePoint",
    "ErrorReport",
    "Interpolant",
    "NodeFamily",
    "NodeSet",
    "PoleFunction",
    "PolyKind",
    "PolynomialFunction",
    "Quantity",
    "SuperpointSet",
    "Theorem",
    "Theorem3",
    "asymptotic_guess",
    "bound_value",
    "build_interpolant",
    "closed_form_error",
    "contour_error_oracle",
    "ellipse_params",
    "ellipse_point",
    "envelope_check",
    "error_report",
    "estimate_c_rho",
    "eval_deriv",
    "eval_poly",
    "generate_nodes",
    "lemma21_magnitude",
    "lemma22_max",
    "nodal_poly",
    "ode_solve",
    "pole2",
    "rho_from_pole",
    "runge",
    "solve",
    "superpoints",
    "value_superpoints",
    "verify_closed_form",
]
