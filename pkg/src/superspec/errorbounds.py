"""Bernstein-ellipse error machinery for the Chebyshev interpolants.

Covers the ellipse constants (rho, D_rho, L_rho, C_rho), the modulus of the
nodal polynomials on E_rho, the maxima of their derivatives on [-1, 1],
the a-priori bounds for the three Chebyshev interpolants, a trapezoid-rule
evaluation of the contour-integral error representation, and the envelope
checks for the extremals of the Lobatto and Radau nodal polynomials.

L_rho is Euler's perimeter estimate pi*sqrt(rho^2 + rho^-2), which is an
overestimate of the true arc length, so bounds built on it stay valid.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .nodes import NodeFamily, nodal_poly

__all__ = [
    "EllipseParams",
    "Theorem",
    "Quantity",
    "BoundKind",
    "ellipse_params",
    "rho_from_pole",
    "estimate_c_rho",
    "lemma21_magnitude",
    "lemma21_lower_bound",
    "lemma22_max",
    "bound_value",
    "contour_error_terms",
    "contour_error_oracle",
    "pole_interpolation_error",
    "envelope_points",
    "envelope_check",
]

DEFAULT_C_SAMPLES = 4096
DEFAULT_MARGIN = 1e-3


@dataclass(frozen=True)
class EllipseParams:
    rho: float
    d_rho: float
    l_rho: float
    c_rho: float

    # the arc length is Euler's estimate, not the exact perimeter
    perimeter_estimate: str = "euler"


def ellipse_params(rho: float, c_rho: float = 1.0) -> EllipseParams:
    if not rho > 1.0:
        raise ValueError(f"rho must exceed 1, got {rho!r}")
    if not c_rho >= 0.0:
        raise ValueError("C_rho must be non-negative")
    d = 0.5 * (rho + 1.0 / rho) - 1.0
    length = math.pi * math.sqrt(rho * rho + rho**-2)
    return EllipseParams(rho=float(rho), d_rho=d, l_rho=length, c_rho=float(c_rho))


class Theorem(enum.Enum):
    CHEB_GAUSS = "thm21"
    CHEB_LOBATTO = "thm22"
    CHEB_RADAU = "thm23"

    @classmethod
    def for_family(cls, family: NodeFamily) -> "Theorem":
        return {
            NodeFamily.CHEB_GAUSS: cls.CHEB_GAUSS,
            NodeFamily.CHEB_LOBATTO: cls.CHEB_LOBATTO,
            NodeFamily.CHEB_RADAU_RIGHT: cls.CHEB_RADAU,
            NodeFamily.CHEB_RADAU_LEFT: cls.CHEB_RADAU,
        }[family]


class Quantity(enum.Enum):
    VALUE = "value"
    D1 = "d1"
    D2 = "d2"
    D1_SUPER = "d1_super"
    D2_SUPER = "d2_super"


@dataclass(frozen=True)
class BoundKind:
    theorem: Theorem
    quantity: Quantity


def rho_from_pole(pole: complex) -> float:
    """Parameter of the Bernstein ellipse passing through ``pole``."""
    a = complex(pole)
    if a.imag == 0.0 and -1.0 <= a.real <= 1.0:
        raise ValueError(f"pole {pole!r} lies on [-1, 1]")
    s = cmath.sqrt(a * a - 1.0)
    return max(abs(a + s), abs(a - s))


def estimate_c_rho(u, rho: float, samples: int = DEFAULT_C_SAMPLES) -> float:
    """max |u| over ``samples`` equispaced angles on E_rho (theta = 0 included)."""
    if samples < 16:
        raise ValueError("need at least 16 samples")
    if not rho > 1.0:
        raise ValueError(f"rho must exceed 1, got {rho!r}")
    w = rho * np.exp(2j * np.pi * np.arange(samples) / samples)
    vals = np.abs(np.broadcast_to(np.asarray(u((w + 1 / w) / 2)), w.shape))
    if not np.all(np.isfinite(vals)):
        raise ValueError(f"u is not finite on E_rho for rho={rho!r}")
    return float(vals.max())


def _cheb_only(family: NodeFamily):
    if not family.is_chebyshev:
        raise ValueError(f"closed forms exist only for Chebyshev families, got {family.value}")


def lemma21_magnitude(family: NodeFamily, n: int, rho: float, theta):
    """|omega_{N+1}(z)| on E_rho from the closed product forms.

    With w = rho e^{i theta} the nodal polynomials factor as
    (w^{N+1} + w^{-N-1})/2, (w - 1/w)(w^N - w^{-N})/2 and
    (1 +/- w)(w^N +/- w^{-N-1})/2, whose moduli are written out below.
    """
    _cheb_only(family)
    if not rho > 1.0:
        raise ValueError(f"rho must exceed 1, got {rho!r}")
    th = np.asarray(theta, dtype=float)
    r = float(rho)
    if family is NodeFamily.CHEB_GAUSS:
        m = r ** (2 * n + 2) + r ** (-2 * n - 2) + 2 * np.cos(2 * (n + 1) * th)
        return 0.5 * np.sqrt(m)
    if family is NodeFamily.CHEB_LOBATTO:
        a = r**2 + r**-2 - 2 * np.cos(2 * th)
        b = r ** (2 * n) + r ** (-2 * n) - 2 * np.cos(2 * n * th)
        return 0.5 * np.sqrt(a) * np.sqrt(b)
    s = 1.0 if family is NodeFamily.CHEB_RADAU_LEFT else -1.0
    a = 1 + r**-2 + s * 2 / r * np.cos(th)
    b = r ** (2 * n + 2) + r ** (-2 * n) + s * 2 * r * np.cos((2 * n + 1) * th)
    return 0.5 * np.sqrt(a) * np.sqrt(b)


def lemma21_lower_bound(family: NodeFamily, n: int, rho: float) -> float:
    """Lower bound for |omega_{N+1}| on E_rho used by the a-priori bounds."""
    _cheb_only(family)
    r = float(rho)
    if family is NodeFamily.CHEB_GAUSS:
        return 0.5 * (r ** (n + 1) - r ** (-n - 1))
    if family is NodeFamily.CHEB_LOBATTO:
        return 0.5 * (r - 1 / r) * (r**n - r**-n)
    return 0.5 * (1 - 1 / r) * (r**n - r**-n)


def lemma22_max(family: NodeFamily, n: int, order: int) -> float:
    """max over [-1, 1] of |omega'_{N+1}| (order 1) or |omega''_{N+1}| (order 2)."""
    _cheb_only(family)
    if n < 1:
        raise ValueError("N must be >= 1")
    if order == 1:
        if family is NodeFamily.CHEB_GAUSS:
            return float((n + 1) ** 2)
        if family is NodeFamily.CHEB_LOBATTO:
            return 4.0 * n
        return 2.0 * n * n + 2 * n + 1
    if order == 2:
        if family is NodeFamily.CHEB_GAUSS:
            return n * (n + 1) ** 2 * (n + 2) / 3.0
        if family is NodeFamily.CHEB_LOBATTO:
            return 4.0 * n * (2 * n * n + 1) / 3.0
        return 2.0 * n * (n + 1) * (n * n + n + 1) / 3.0
    raise ValueError(f"order must be 1 or 2, got {order!r}")


def bound_value(kind: BoundKind, n: int, ep: EllipseParams) -> float:
    """Right-hand side of the a-priori bound selected by ``kind``."""
    if n < 2:
        raise ValueError("N must be >= 2")
    r, d, c, length = ep.rho, ep.d_rho, ep.c_rho, ep.l_rho
    if kind.theorem is Theorem.CHEB_GAUSS:
        decay = 1.0 / (r ** (n + 1) - r ** (-n - 1))
        m1, m2 = (n + 1) ** 2, n * (n + 1) ** 2 * (n + 2) / 3.0
    else:
        pre = 1.0 / (r - 1 / r) if kind.theorem is Theorem.CHEB_LOBATTO else 1.0 / (1 - 1 / r)
        decay = pre / (r**n - r**-n)
        # both displays carry the Lobatto derivative maxima
        m1, m2 = 4.0 * n, 4.0 * n * (2 * n * n + 1) / 3.0
    base = c * length / math.pi
    q = kind.quantity
    if q is Quantity.VALUE:
        return base / d * decay
    if q is Quantity.D1:
        return base / d * (m1 + 1 / d) * decay
    if q is Quantity.D2:
        return base * (m2 / d + 2 * m1 / d**2 + 2 / d**3) * decay
    if q is Quantity.D1_SUPER:
        return base / d**2 * decay
    return 2 * base / d**2 * (m1 + 1 / d) * decay


def _contour_samples(u, family, n, rho, quad_points):
    if quad_points < 64 or quad_points % 2:
        raise ValueError("quad_points must be even and >= 64")
    w = rho * np.exp(2j * np.pi * np.arange(quad_points) / quad_points)
    z = (w + 1 / w) / 2
    dz = 0.5j * (w - 1 / w)  # dz/dtheta
    g = np.asarray(u(z)) / nodal_poly(family, n, z, 0) * dz
    if not np.all(np.isfinite(g)):
        raise ValueError("non-finite integrand sample; is u analytic on E_rho?")
    # (1/(2 pi i)) * (2 pi / M) * sum
    return z, g / (1j * quad_points)


def contour_error_terms(u, family: NodeFamily, n: int, x: float, order: int, rho: float, quad_points: int = 512):
    """Separate terms of the contour representation of the order-th error.

    order 0: [omega(x) I1]
    order 1: [omega'(x) I1, omega(x) I2]
    order 2: [omega''(x) I1, 2 omega'(x) I2, 2 omega(x) I3]
    with I_k the contour integral of u(z) / (omega(z) (z - x)^k).
    """
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
    z, g = _contour_samples(u, family, n, rho, quad_points)
    x = float(x)
    integrals = [np.sum(g / (z - x) ** k).real for k in (1, 2, 3)]
    om = [float(nodal_poly(family, n, x, j)) for j in range(order + 1)]
    if order == 0:
        return [om[0] * integrals[0]]
    if order == 1:
        return [om[1] * integrals[0], om[0] * integrals[1]]
    return [om[2] * integrals[0], 2 * om[1] * integrals[1], 2 * om[0] * integrals[2]]


def contour_error_oracle(u, family: NodeFamily, n: int, x: float, order: int, rho: float, quad_points: int = 512) -> float:
    """Signed error u^(order)(x) - u_N^(order)(x) from the contour integral."""
    return float(sum(contour_error_terms(u, family, n, x, order, rho, quad_points)))


def pole_interpolation_error(fractions, family: NodeFamily, n: int, x, order: int = 0):
    """Exact error u^(order) - u_N^(order) for u(z) = sum r / (p - z).

    For a single simple pole the Cauchy representation collapses to one
    residue, u(x) - u_N(x) = omega(x) / (omega(p) (p - x)).  Every factor
    is evaluated without cancellation, so the result keeps full relative
    accuracy even where the error itself is far below rounding level of u.
    """
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
    x = np.asarray(x, dtype=float)
    om = [nodal_poly(family, n, x, j) for j in range(order + 1)]
    total = 0.0
    for r, p in fractions:
        q = 1.0 / (p - x)
        if order == 0:
            e = om[0] * q
        elif order == 1:
            e = om[1] * q + om[0] * q**2
        else:
            e = om[2] * q + 2 * om[1] * q**2 + 2 * om[0] * q**3
        # complex argument: the real-axis domain check does not apply off [-1, 1]
        total = total + r / nodal_poly(family, n, complex(p), 0) * e
    return np.real(total)


def envelope_points(family: NodeFamily, n: int):
    """Extremal points (x_j, omega(x_j)) of the Lobatto or Radau nodal polynomial."""
    if family is NodeFamily.CHEB_LOBATTO:
        j = np.arange(1, n + 1)
        th = (2 * j - 1) * np.pi / (2 * n)
    elif family is NodeFamily.CHEB_RADAU_RIGHT:
        j = np.arange(0, n + 1)
        th = (2 * j + 1) * np.pi / (2 * n + 1)
    elif family is NodeFamily.CHEB_RADAU_LEFT:
        j = np.arange(0, n + 1)
        th = 2 * j * np.pi / (2 * n + 1)
    else:
        raise ValueError(f"no envelope for {family.value}")
    x = np.cos(th)
    return x, nodal_poly(family, n, x, 0)


def envelope_check(family: NodeFamily, n: int) -> float:
    """Max residual of the envelope curve over the extremal points.

    Lobatto extremals lie on x^2 + y^2/4 = 1; right Radau on
    2(1 - x) = y^2; left Radau on 2(1 + x) = y^2.
    """
    if n < 2:
        raise ValueError("N must be >= 2")
    x, y = envelope_points(family, n)
    if family is NodeFamily.CHEB_LOBATTO:
        res = x**2 + y**2 / 4 - 1
    elif family is NodeFamily.CHEB_RADAU_RIGHT:
        res = 2 * (1 - x) - y**2
    else:
        res = 2 * (1 + x) - y**2
    return float(np.max(np.abs(res)))

