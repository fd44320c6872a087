"""Barycentric interpolation through a NodeSet, with first and second derivatives.

Derivatives are formed at the nodes with differentiation matrices (diagonal
by the negative-sum trick) and then carried to off-node points with the
same barycentric formula.  This avoids differentiating the barycentric
quotient itself, which is ill-conditioned close to a node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .nodes import NodeFamily, NodeSet, nodal_poly

__all__ = [
    "Interpolant",
    "ErrorReport",
    "barycentric_weights",
    "differentiation_matrix",
    "build_interpolant",
    "error_report",
]

_HIT_ULPS = 4


def barycentric_weights(nodes: NodeSet) -> np.ndarray:
    """Barycentric weights for the node set, scaled so that max |w| = 1."""
    fam, th = nodes.family, nodes.thetas
    sign = (-1.0) ** np.arange(len(th))
    if fam is NodeFamily.CHEB_GAUSS:
        w = sign * np.sin(th)
    elif fam is NodeFamily.CHEB_LOBATTO:
        w = sign.copy()
        w[[0, -1]] *= 0.5
    elif fam is NodeFamily.CHEB_RADAU_RIGHT:
        # 1/omega'(x_k) is proportional to (-1)^k cos(theta_k / 2), halved at x = 1
        w = sign * np.cos(th / 2)
        w[-1] *= 0.5
    elif fam is NodeFamily.CHEB_RADAU_LEFT:
        w = sign * np.sin(th / 2)
        w[0] *= 0.5
    else:
        w = 1.0 / nodal_poly(fam, nodes.n_param, nodes.xs, 1)
    return w / np.max(np.abs(w))


def differentiation_matrix(xs, weights, order: int = 1) -> np.ndarray:
    """First or second derivative matrix on the nodes ``xs``."""
    xs = np.asarray(xs, dtype=float)
    w = np.asarray(weights, dtype=float)
    dx = xs[:, None] - xs[None, :]
    np.fill_diagonal(dx, 1.0)
    d1 = (w[None, :] / w[:, None]) / dx
    np.fill_diagonal(d1, 0.0)
    np.fill_diagonal(d1, -d1.sum(axis=1))
    if order == 1:
        return d1
    if order != 2:
        raise ValueError(f"order must be 1 or 2, got {order!r}")
    d2 = 2.0 * d1 * (np.diag(d1)[:, None] - 1.0 / dx)
    np.fill_diagonal(d2, 0.0)
    np.fill_diagonal(d2, -d2.sum(axis=1))
    return d2


@dataclass(frozen=True)
class Interpolant:
    """The polynomial through ``values`` at ``nodes.xs``; immutable."""

    nodes: NodeSet
    values: np.ndarray
    weights: np.ndarray = field(repr=False)

    @cached_property
    def _node_derivs(self):
        xs, w = self.nodes.xs, self.weights
        return (
            self.values,
            differentiation_matrix(xs, w, 1) @ self.values,
            differentiation_matrix(xs, w, 2) @ self.values,
        )

    def node_values(self, order: int = 0) -> np.ndarray:
        """Values of the interpolant's ``order``-th derivative at the nodes."""
        if order not in (0, 1, 2):
            raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
        return self._node_derivs[order]

    def __call__(self, x, order: int = 0):
        return self.evaluate(x, order)

    def evaluate(self, x, order: int = 0):
        vals = self.node_values(order)
        xs, w = self.nodes.xs, self.weights
        flat = np.atleast_1d(np.asarray(x, dtype=float))
        diff = flat[:, None] - xs[None, :]
        tol = _HIT_ULPS * np.spacing(np.maximum(np.abs(flat)[:, None], np.abs(xs)[None, :]))
        hit = np.abs(diff) <= tol
        with np.errstate(divide="ignore", invalid="ignore"):
            c = w[None, :] / diff
            out = (c @ vals) / c.sum(axis=1)
        rows = np.nonzero(hit.any(axis=1))[0]
        if len(rows):
            out[rows] = vals[np.argmax(hit[rows], axis=1)]
        out = out.reshape(np.shape(x))
        return out[()] if out.ndim == 0 else out


def build_interpolant(nodes: NodeSet, values) -> Interpolant:
    values = np.array(values, dtype=float)
    if values.shape != (len(nodes),):
        raise ValueError(f"expected {len(nodes)} values, got shape {values.shape}")
    if np.any(np.diff(nodes.xs) <= 0):
        raise ValueError("nodes must be distinct and ascending")
    values.setflags(write=False)
    return Interpolant(nodes=nodes, values=values, weights=barycentric_weights(nodes))


@dataclass(frozen=True)
class ErrorReport:
    order: int
    grid: np.ndarray
    errors: np.ndarray
    max_error: float
    superpoints: np.ndarray
    errors_at_superpoints: np.ndarray
    ratio: float
    ratio_defined: bool


def error_report(ip: Interpolant, reference, order: int, grid_size: int, superpoints=()) -> ErrorReport:
    """Sample |reference - ip^{(order)}| on a uniform grid plus the superpoints.

    ``reference`` must already be the ``order``-th derivative of the
    interpolated function.  With no superpoints (or an identically zero
    error) the ratio is reported as 1.0 and ``ratio_defined`` is False.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    sp = np.sort(np.asarray(superpoints, dtype=float).ravel())
    grid = np.union1d(np.linspace(-1.0, 1.0, grid_size), sp)
    errors = np.abs(np.asarray(reference(grid), dtype=float) - ip(grid, order))
    max_error = float(errors.max())
    sp_err = np.abs(np.asarray(reference(sp), dtype=float) - ip(sp, order)) if len(sp) else np.empty(0)
    if len(sp) and max_error > 0:
        ratio, defined = float(sp_err.max() / max_error), True
    else:
        ratio, defined = 1.0, False
    return ErrorReport(order, grid, errors, max_error, sp, sp_err, ratio, defined)
