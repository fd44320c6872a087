"""Derivative superconvergence points of the Chebyshev interpolants.

For a Chebyshev family the nodal polynomial is a short cosine series in
theta (x = cos theta), so the zeros of omega'(x) and omega''(x) are found
from trigonometric equations on (0, pi):

    order 1:  d omega / d theta = 0
    order 2:  omega_thth sin(theta) - omega_th cos(theta) = 0

the second being sin^3(theta) omega''(x) written out in theta.  Brackets
come from interlacing (Rolle): roots of omega' sit between consecutive
nodes and roots of omega'' between consecutive roots of omega'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .nodes import NodeFamily, generate_nodes, nodal_terms
from .roots import RootSolverError, safeguarded_newton

__all__ = ["SuperpointSet", "superpoints", "asymptotic_guess", "theta_equation"]

_XTOL = 1e-14
_FTOL = 1e-12
_MAXITER = 50


@dataclass(frozen=True)
class SuperpointSet:
    family: NodeFamily
    N: int
    deriv_order: int
    points: np.ndarray
    thetas: np.ndarray
    residuals: np.ndarray
    guesses: np.ndarray

    def __len__(self) -> int:
        return len(self.points)


def _check(family, n, order):
    if not isinstance(family, NodeFamily) or not family.is_chebyshev:
        raise ValueError(f"superpoints are defined for Chebyshev families only, got {family!r}")
    if int(n) != n or n < 2:
        raise ValueError(f"N must be an integer >= 2, got {n!r}")
    if order not in (1, 2):
        raise ValueError(f"derivative order must be 1 or 2, got {order!r}")
    return int(n)


def _cosine_series(family, n):
    return [(deg, coef) for _, deg, coef in nodal_terms(family, n)]


def _omega_theta(series, theta, p):
    """p-th theta-derivative of sum c_m cos(m theta)."""
    total = 0.0
    for m, c in series:
        if p % 2 == 0:
            total += c * (-1) ** (p // 2) * m**p * np.cos(m * theta)
        else:
            total += c * (-1) ** ((p + 1) // 2) * m**p * np.sin(m * theta)
    return total


def theta_equation(family: NodeFamily, n: int, order: int):
    """Return ``(g, dg)``: the normalised theta-equation and its derivative.

    Both callables accept scalars or arrays of theta.
    """
    series = _cosine_series(family, n)
    scale = float(n + 1) ** order

    if order == 1:

        def g(t):
            return _omega_theta(series, t, 1) / scale

        def dg(t):
            return _omega_theta(series, t, 2) / scale

    else:

        def g(t):
            return (
                _omega_theta(series, t, 2) * np.sin(t) - _omega_theta(series, t, 1) * np.cos(t)
            ) / scale

        def dg(t):
            return (_omega_theta(series, t, 3) + _omega_theta(series, t, 1)) * np.sin(t) / scale

    return g, dg


def _order1_endpoint_sign(series, theta):
    # limit of omega_th / sin(theta) at theta = 0 or pi
    if theta == 0.0:
        return math.copysign(1.0, -sum(c * m * m for m, c in series))
    return math.copysign(1.0, -sum(c * m * m * (-1) ** (m - 1) for m, c in series))


def asymptotic_guess(family: NodeFamily, n: int, deriv_order: int, k: int) -> float:
    """Large-N approximation of the k-th superpoint angle (k is 1-based)."""
    n = _check(family, n, deriv_order)
    last = n if deriv_order == 1 else n - 1
    if int(k) != k or not 1 <= k <= last:
        raise ValueError(f"index k={k!r} outside 1..{last}")
    pi = math.pi
    table = {
        (NodeFamily.CHEB_GAUSS, 1): k * pi / (n + 1),
        # no explicit formula exists here; the interior Gauss nodes are used
        (NodeFamily.CHEB_GAUSS, 2): (2 * k + 1) * pi / (2 * n + 2),
        (NodeFamily.CHEB_LOBATTO, 1): (2 * k - 1) * pi / (2 * n),
        (NodeFamily.CHEB_LOBATTO, 2): k * pi / n,
        (NodeFamily.CHEB_RADAU_RIGHT, 1): (2 * k - 1) * pi / (2 * n + 1),
        (NodeFamily.CHEB_RADAU_RIGHT, 2): 2 * k * pi / (2 * n + 1),
        (NodeFamily.CHEB_RADAU_LEFT, 1): 2 * k * pi / (2 * n + 1),
        (NodeFamily.CHEB_RADAU_LEFT, 2): (2 * k + 1) * pi / (2 * n + 1),
    }
    return table[(family, deriv_order)]


def _is_end(theta):
    # closed-form node angles such as N pi / N need not equal pi bit-for-bit
    return min(theta, math.pi - theta) < 1e-12


def _order1_thetas(family, n):
    if family is NodeFamily.CHEB_GAUSS:
        return np.arange(1, n + 1) * np.pi / (n + 1)
    series = _cosine_series(family, n)
    g, dg = theta_equation(family, n, 1)
    ends = np.sort(generate_nodes(family, n).thetas)
    out = []
    for k in range(n):
        a, b = float(ends[k]), float(ends[k + 1])
        a_end, b_end = _is_end(a), _is_end(b)
        a, b = (round(a / math.pi) * math.pi if a_end else a), (round(b / math.pi) * math.pi if b_end else b)
        sa = _order1_endpoint_sign(series, a) if a_end else math.copysign(1.0, g(a))
        sb = _order1_endpoint_sign(series, b) if b_end else math.copysign(1.0, g(b))
        if sa == sb:
            raise RootSolverError(f"{family.value} N={n} order 1: bracket {k + 1} has no sign change")
        # nudge closed ends inward; g vanishes identically there
        a_ = a + 1e-3 * (b - a) if a_end else a
        b_ = b - 1e-3 * (b - a) if b_end else b
        out.append(_solve(g, dg, a_, b_, asymptotic_guess(family, n, 1, k + 1), family, n, 1, k + 1))
    return np.array(out)


def _solve(g, dg, a, b, guess, family, n, order, k):
    try:
        t, res, _ = safeguarded_newton(g, dg, a, b, x0=guess, xtol=_XTOL, ftol=_FTOL, maxiter=_MAXITER)
    except RootSolverError as exc:
        raise RootSolverError(f"{family.value} N={n} order {order}, root {k}: {exc}") from None
    if res > _FTOL:
        raise RootSolverError(f"{family.value} N={n} order {order}, root {k}: residual {res:.2e}")
    return t


def superpoints(family: NodeFamily, n: int, deriv_order: int) -> SuperpointSet:
    """Zeros of omega'_{N+1} (order 1) or omega''_{N+1} (order 2), ascending in x."""
    n = _check(family, n, deriv_order)
    first = _order1_thetas(family, n)
    if deriv_order == 1:
        thetas = first
    else:
        g, dg = theta_equation(family, n, 2)
        thetas = np.array(
            [
                _solve(g, dg, first[k], first[k + 1], asymptotic_guess(family, n, 2, k + 1), family, n, 2, k + 1)
                for k in range(n - 1)
            ]
        )
    g, _ = theta_equation(family, n, deriv_order)
    last = n if deriv_order == 1 else n - 1
    guesses = np.array([asymptotic_guess(family, n, deriv_order, k) for k in range(1, last + 1)])
    residuals = np.array([abs(g(t)) for t in thetas])
    order = np.argsort(thetas)[::-1]  # descending theta is ascending x
    return SuperpointSet(
        family=family,
        N=n,
        deriv_order=deriv_order,
        points=np.cos(thetas[order]),
        thetas=thetas[order],
        residuals=residuals[order],
        guesses=guesses[order],
    )
