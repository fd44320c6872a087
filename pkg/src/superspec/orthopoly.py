"""Chebyshev (first and second kind) and Legendre polynomials.

All evaluation goes through the forward three-term recurrence so that real
arguments on [-1, 1] and complex arguments on Bernstein ellipses share one
code path.  Derivatives come from the recurrence differentiated once or
twice; at x = +/-1 the closed-form endpoint values are returned instead.

For real Legendre arguments the recurrence is run on the differences
P_k - P_{k-1} in the variable t = 1 - |x| (Reinsch's modification), which
keeps the rounding error near the endpoints at the level of a single
evaluation instead of letting it grow with the degree.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PolyKind",
    "EllipsePoint",
    "eval_poly",
    "eval_deriv",
    "ellipse_point",
]

# slack for sampling right at the interval ends
_REAL_SLACK = 1e-12


class PolyKind(enum.Enum):
    CHEBYSHEV_T = "T"
    CHEBYSHEV_U = "U"
    LEGENDRE = "L"


@dataclass(frozen=True)
class EllipsePoint:
    """A point z = (rho e^{i theta} + rho^{-1} e^{-i theta}) / 2 on E_rho."""

    rho: float
    theta: float
    z: complex


def _as_array(x):
    arr = np.asarray(x)
    if arr.dtype.kind not in "fc":
        arr = arr.astype(float)
    if arr.dtype.kind == "f" and arr.size and np.max(np.abs(arr)) > 1.0 + _REAL_SLACK:
        raise ValueError("real argument outside [-1, 1]")
    return arr


def _unwrap(out, x):
    return out[()] if np.ndim(x) == 0 else out


def _check_degree(n):
    if int(n) != n or n < 0:
        raise ValueError(f"degree must be a non-negative integer, got {n!r}")
    return int(n)


def _legendre_reinsch(n: int, x, order: int):
    """Legendre (p, p', p'') for real x via the difference recurrence."""
    sign = np.where(x < 0, -1.0, 1.0)
    t = 1.0 - np.abs(x)
    p, d, s = np.ones_like(t), np.zeros_like(t), np.zeros_like(t)
    dp, dd, ds = np.zeros_like(t), np.zeros_like(t), np.zeros_like(t)
    for k in range(n):
        c = (2 * k + 1) / (k + 1)
        b = k / (k + 1)
        # D_{k+1} = (k D_k - (2k+1) t P_k) / (k+1), differentiated in |x|
        if order >= 2:
            ds = b * ds + c * (2 * d - t * s)
        if order >= 1:
            dd = b * dd + c * (p - t * d)
        dp = b * dp - c * t * p
        p, d, s = p + dp, d + dd, s + ds
    # P_n has parity (-1)^n; each derivative flips it
    return p * sign**n, d * sign ** (n + 1), s * sign**n


def _recurrence(kind: PolyKind, n: int, x, order: int):
    """Return (p, p', p'') of degree n; derivatives only up to ``order``."""
    if kind is PolyKind.LEGENDRE and x.dtype.kind == "f":
        return _legendre_reinsch(n, x, order)
    one = np.ones_like(x)
    zero = np.zeros_like(x)
    p0, d0, s0 = one, zero, zero
    if n == 0:
        return p0, d0, s0
    if kind is PolyKind.CHEBYSHEV_U:
        p1, d1, s1 = 2 * x, 2 * one, zero
    else:
        p1, d1, s1 = x, one, zero
    for k in range(1, n):
        if kind is PolyKind.LEGENDRE:
            a, b = (2 * k + 1) / (k + 1), k / (k + 1)
        else:
            a, b = 2.0, 1.0
        p2 = a * x * p1 - b * p0
        d2 = s2 = zero
        if order >= 1:
            d2 = a * (p1 + x * d1) - b * d0
        if order >= 2:
            s2 = a * (2 * d1 + x * s1) - b * s0
        p0, p1, d0, d1, s0, s1 = p1, p2, d1, d2, s1, s2
    return p1, d1, s1


def _endpoint_value(kind: PolyKind, n: int, order: int, sign: float) -> float:
    """Exact p^{(order)}(sign) for sign in {+1, -1}."""
    if kind is PolyKind.CHEBYSHEV_T:
        at_one = [1.0, n * n, n * n * (n * n - 1) / 3.0][order]
    elif kind is PolyKind.CHEBYSHEV_U:
        at_one = [
            n + 1.0,
            n * (n + 1) * (n + 2) / 3.0,
            (n - 1) * n * (n + 1) * (n + 2) * (n + 3) / 15.0,
        ][order]
    else:
        at_one = [1.0, n * (n + 1) / 2.0, (n - 1) * n * (n + 1) * (n + 2) / 8.0][order]
    # p_n has parity (-1)^n, so its k-th derivative has parity (-1)^(n+k)
    return at_one if sign > 0 else (-1.0) ** (n + order) * at_one


def eval_poly(kind: PolyKind, n: int, x):
    """Evaluate the degree-``n`` polynomial of the given kind at ``x``.

    ``x`` may be a real scalar/array in [-1, 1] or any complex scalar/array.
    """
    n = _check_degree(n)
    arr = _as_array(x)
    p, _, _ = _recurrence(kind, n, arr, 0)
    return _unwrap(np.asarray(p), x)


def eval_deriv(kind: PolyKind, n: int, x, order: int = 1):
    """First or second derivative of the degree-``n`` polynomial at ``x``."""
    if order not in (1, 2):
        raise ValueError(f"derivative order must be 1 or 2, got {order!r}")
    n = _check_degree(n)
    arr = _as_array(x)
    _, d, s = _recurrence(kind, n, arr, order)
    out = np.array(d if order == 1 else s, copy=True)
    if arr.dtype.kind == "f":
        out = np.atleast_1d(out)
        flat = np.atleast_1d(arr)
        out[flat == 1.0] = _endpoint_value(kind, n, order, 1.0)
        out[flat == -1.0] = _endpoint_value(kind, n, order, -1.0)
        out = out.reshape(arr.shape)
    return _unwrap(out, x)


def ellipse_point(rho: float, theta: float) -> EllipsePoint:
    if not rho > 1.0:
        raise ValueError(f"rho must exceed 1 (got {rho!r}); the ellipse degenerates")
    theta = math.fmod(theta, 2 * math.pi)
    if theta < 0:
        theta += 2 * math.pi
    w = rho * complex(math.cos(theta), math.sin(theta))
    return EllipsePoint(rho=float(rho), theta=theta, z=(w + 1 / w) / 2)
