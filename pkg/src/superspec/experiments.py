"""The numerical experiments as plain data: pointwise error tables and N-sweeps.

Two experiment types are covered:

* interpolation of a test function at a node family, with the error in
  the value, first or second derivative, and the derivative superpoints;
* the collocation solution of u' = f, u(-1) = f(-1), whose value error is
  compared at the value superpoints of the collocation family.

For ``ode`` a pole function names the right-hand side f, while
``polynomial(d)`` names the exact solution itself so that the
u in P_{N+1} setting can be reached directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import build_interpolant
from .derivcolloc import collocation_points, ode_solve, value_superpoints
from .errorbounds import (
    DEFAULT_C_SAMPLES,
    DEFAULT_MARGIN,
    BoundKind,
    Quantity,
    Theorem,
    bound_value,
    ellipse_params,
    estimate_c_rho,
)
from .functions import PoleFunction, PolynomialFunction
from .nodes import NodeFamily, generate_nodes
from .superpoints import superpoints

__all__ = ["PointTable", "SweepRow", "interp_table", "ode_table", "ode_problem", "sweep"]


@dataclass(frozen=True)
class PointTable:
    x: np.ndarray
    value: np.ndarray
    error: np.ndarray
    is_superpoint: np.ndarray
    is_node: np.ndarray


@dataclass(frozen=True)
class SweepRow:
    N: int
    max_error: float
    superpoint_max_error: float
    ratio: float
    bound: float


def _grid_with(grid_size, *extra):
    base = np.linspace(-1.0, 1.0, grid_size)
    pts = np.unique(np.concatenate([base, *[np.asarray(e, dtype=float) for e in extra]]))
    return pts


def _flags(x, pts):
    pts = np.asarray(pts, dtype=float)
    return np.isin(x, pts) if len(pts) else np.zeros(len(x), dtype=bool)


def _derivative_superpoints(family, n, order):
    if order == 0 or not family.is_chebyshev:
        return np.empty(0)
    return superpoints(family, n, order).points


def interp_table(family: NodeFamily, n: int, function, order: int, grid_size: int = 2001) -> PointTable:
    """Pointwise |u^(order) - u_N^(order)| on a grid joined with nodes and superpoints."""
    nodes = generate_nodes(family, n)
    ip = build_interpolant(nodes, function(nodes.xs))
    sp = _derivative_superpoints(family, n, order)
    x = _grid_with(grid_size, nodes.xs, sp)
    value = np.asarray(ip(x, order))
    error = np.abs(function.deriv(x, order) - value)
    return PointTable(x, value, error, _flags(x, sp), _flags(x, nodes.xs))


def ode_problem(function):
    """(right-hand side, initial value, exact solution) for the collocation test."""
    if isinstance(function, PolynomialFunction):
        return (lambda x: function.deriv(x, 1)), float(function(-1.0)), function
    u0 = float(function(-1.0))
    return function, u0, (lambda x: u0 + function.integral(x))


def ode_table(family: NodeFamily, n: int, function, grid_size: int = 2001) -> PointTable:
    """Pointwise |u - u_N| for the collocation solution of u' = f."""
    rhs, u0, exact = ode_problem(function)
    ip = ode_solve(rhs, u0, family, n)
    sp = value_superpoints(family, n)
    colloc = collocation_points(family, n).xs
    x = _grid_with(grid_size, sp, colloc)
    value = np.asarray(ip(x))
    error = np.abs(exact(x) - value)
    return PointTable(x, value, error, _flags(x, sp), _flags(x, colloc))


def _bound(function, family, n, order, c_samples, margin):
    if not isinstance(function, PoleFunction) or not family.is_chebyshev or n < 2:
        return float("nan")
    rho = function.rho * (1.0 - margin)
    ep = ellipse_params(rho, estimate_c_rho(function, rho, c_samples))
    q = (Quantity.VALUE, Quantity.D1, Quantity.D2)[order]
    return bound_value(BoundKind(Theorem.for_family(family), q), n, ep)


def sweep(
    command: str,
    family: NodeFamily,
    ns,
    function,
    order: int = 1,
    grid_size: int = 2001,
    c_samples: int = DEFAULT_C_SAMPLES,
    margin: float = DEFAULT_MARGIN,
) -> list:
    """One SweepRow per N (sorted).  ``command`` is ``"interp"`` or ``"ode"``.

    Undefined entries (no superpoints, no pole, Legendre family) are NaN.
    """
    rows = []
    for n in sorted(set(int(v) for v in ns)):
        if command == "ode":
            tab = ode_table(family, n, function, grid_size)
            bound = float("nan")
        else:
            tab = interp_table(family, n, function, order, grid_size)
            bound = _bound(function, family, n, order, c_samples, margin)
        max_err = float(tab.error.max())
        if tab.is_superpoint.any():
            sp_err = float(tab.error[tab.is_superpoint].max())
            ratio = sp_err / max_err if max_err > 0 else float("nan")
        else:
            sp_err = ratio = float("nan")
        rows.append(SweepRow(n, max_err, sp_err, ratio, bound))
    return rows
