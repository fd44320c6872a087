"""Interpolation node families and their nodal polynomials.

``N`` is always the integer in the family's defining formula.  The four
Chebyshev families have N + 1 nodes (zeros of a degree N + 1 polynomial);
the four Legendre families have N nodes (zeros of a degree N polynomial).
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .orthopoly import PolyKind, eval_deriv, eval_poly
from .roots import RootSolverError, safeguarded_newton_many

__all__ = [
    "NodeFamily",
    "NodeSet",
    "generate_nodes",
    "nodal_poly",
    "nodal_terms",
]


class NodeFamily(enum.Enum):
    CHEB_GAUSS = "cheb-gauss"
    CHEB_LOBATTO = "cheb-lobatto"
    CHEB_RADAU_RIGHT = "cheb-radau-right"
    CHEB_RADAU_LEFT = "cheb-radau-left"
    LEG_GAUSS = "leg-gauss"
    LEG_LOBATTO = "leg-lobatto"
    LEG_RADAU_RIGHT = "leg-radau-right"
    LEG_RADAU_LEFT = "leg-radau-left"

    @property
    def is_chebyshev(self) -> bool:
        return self.value.startswith("cheb")

    @property
    def min_n(self) -> int:
        return 2 if self in (NodeFamily.CHEB_LOBATTO, NodeFamily.LEG_LOBATTO) else 1

    def size(self, n: int) -> int:
        return n + 1 if self.is_chebyshev else n


def nodal_terms(family: NodeFamily, n: int):
    """The nodal polynomial as a list of ``(kind, degree, coefficient)``."""
    T, L = PolyKind.CHEBYSHEV_T, PolyKind.LEGENDRE
    return {
        NodeFamily.CHEB_GAUSS: [(T, n + 1, 1.0)],
        NodeFamily.CHEB_LOBATTO: [(T, n + 1, 1.0), (T, n - 1, -1.0)],
        NodeFamily.CHEB_RADAU_RIGHT: [(T, n + 1, 1.0), (T, n, -1.0)],
        NodeFamily.CHEB_RADAU_LEFT: [(T, n + 1, 1.0), (T, n, 1.0)],
        NodeFamily.LEG_GAUSS: [(L, n, 1.0)],
        NodeFamily.LEG_LOBATTO: [(L, n, 1.0), (L, n - 2, -1.0)],
        NodeFamily.LEG_RADAU_RIGHT: [(L, n, 1.0), (L, n - 1, -1.0)],
        NodeFamily.LEG_RADAU_LEFT: [(L, n, 1.0), (L, n - 1, 1.0)],
    }[family]


def _check_n(family: NodeFamily, n: int) -> int:
    if int(n) != n or n < family.min_n:
        raise ValueError(f"{family.value} needs N >= {family.min_n}, got {n!r}")
    return int(n)


def nodal_poly(family: NodeFamily, n: int, x, order: int = 0):
    """omega_{N+1}(x) for the family, or its first/second derivative."""
    n = _check_n(family, n)
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
    total = 0.0
    for kind, deg, coef in nodal_terms(family, n):
        if order == 0:
            total = total + coef * eval_poly(kind, deg, x)
        else:
            total = total + coef * eval_deriv(kind, deg, x, order)
    return total


@dataclass(frozen=True)
class NodeSet:
    """Sorted abscissae ``xs`` with ``xs[k] == cos(thetas[k])``."""

    family: NodeFamily
    n_param: int
    xs: np.ndarray
    thetas: np.ndarray

    def __post_init__(self):
        for arr in (self.xs, self.thetas):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.xs)


def _from_thetas(family, n, thetas, symmetric):
    thetas = np.sort(np.asarray(thetas, dtype=float))[::-1]
    xs = np.cos(thetas)
    if symmetric:
        xs = 0.5 * (xs - xs[::-1])
    return NodeSet(family, n, xs, np.ascontiguousarray(thetas))


def _chebyshev_thetas(family: NodeFamily, n: int) -> np.ndarray:
    k = np.arange(n + 1)
    if family is NodeFamily.CHEB_GAUSS:
        return (2 * k + 1) * np.pi / (2 * n + 2)
    if family is NodeFamily.CHEB_LOBATTO:
        return k * np.pi / n
    if family is NodeFamily.CHEB_RADAU_RIGHT:
        return 2 * k * np.pi / (2 * n + 1)
    return (2 * k + 1) * np.pi / (2 * n + 1)


def _legendre_setup(family: NodeFamily, n: int):
    """Endpoint roots and Chebyshev-like theta guesses for the interior roots."""
    if family is NodeFamily.LEG_GAUSS:
        k = np.arange(1, n + 1)
        return [], np.pi * (4 * k - 1) / (4 * n + 2)
    if family is NodeFamily.LEG_LOBATTO:
        k = np.arange(1, n - 1)
        return [0.0, np.pi], k * np.pi / (n - 1)
    if family is NodeFamily.LEG_RADAU_RIGHT:
        k = np.arange(1, n)
        return [0.0], 2 * k * np.pi / (2 * n - 1)
    k = np.arange(0, n - 1)
    return [np.pi], (2 * k + 1) * np.pi / (2 * n - 1)


def _isolate(f, count: int, min_points: int):
    """Sign-scan theta in (0, pi) until exactly ``count`` brackets appear."""
    m = max(min_points, 16)
    for _ in range(6):
        grid = (np.arange(m) + 0.5) * np.pi / m
        vals = f(grid)
        idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
        if len(idx) == count:
            return [(grid[i], grid[i + 1]) for i in idx]
        m *= 2
    raise RootSolverError(f"could not isolate {count} roots (found {len(idx)})")


def _legendre_thetas(family: NodeFamily, n: int) -> np.ndarray:
    def omega(t):
        return nodal_poly(family, n, np.cos(t))

    def domega(t):
        return -np.sin(t) * nodal_poly(family, n, np.cos(t), 1)

    ends, guesses = _legendre_setup(family, n)
    if not len(guesses):
        return np.array(ends)
    brackets = np.array(_isolate(omega, len(guesses), 16 * (n + 1)))
    thetas, res = safeguarded_newton_many(omega, domega, brackets[:, 0], brackets[:, 1], guesses, xtol=1e-15)
    # the attainable residual is set by rounding in x = cos(theta)
    floor = np.maximum(1e-13, 8 * np.finfo(float).eps * np.abs(domega(thetas)) / np.maximum(np.sin(thetas), 1e-300))
    if np.any(res > floor):
        k = int(np.argmax(res / floor))
        raise RootSolverError(f"{family.value} N={n}: residual {res[k]:.2e} at theta={thetas[k]!r}")
    return np.concatenate((ends, thetas))


def generate_nodes(family: NodeFamily, n: int) -> NodeSet:
    """Nodes of the family in ascending order."""
    return _generate(family, _check_n(family, n))


@functools.lru_cache(maxsize=256)
def _generate(family: NodeFamily, n: int) -> NodeSet:
    # NodeSet arrays are read-only, so cached instances can be shared
    symmetric = family in (
        NodeFamily.CHEB_GAUSS,
        NodeFamily.CHEB_LOBATTO,
        NodeFamily.LEG_GAUSS,
        NodeFamily.LEG_LOBATTO,
    )
    if family.is_chebyshev:
        thetas = _chebyshev_thetas(family, n)
    else:
        thetas = _legendre_thetas(family, n)
    return _from_thetas(family, n, thetas, symmetric)
