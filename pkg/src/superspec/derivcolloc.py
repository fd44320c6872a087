"""Derivative interpolation: recover u_N in P_N from u(-1) and u'(x_k).

The N collocation points are set by a NodeFamily:

================  =========================================  ==========
family            collocation points (zeros of)              theorem
================  =========================================  ==========
leg-gauss         L_N                                        T31
leg-lobatto       L_N - L_{N-2}                              T32
leg-radau-right   L_N - L_{N-1}                              T33_right
leg-radau-left    L_N + L_{N-1}                              T33_left
cheb-gauss        T_N                                        T34
cheb-lobatto      +-1 and the zeros of U_{N-2}               T35
cheb-radau-right  T_N - T_{N-1}                              T36_right
cheb-radau-left   T_N + T_{N-1}                              T36_left
================  =========================================  ==========

For u in P_{N+1} the error derivative (u - u_N)' is a multiple of the
collocation polynomial, so u - u_N is its integral from -1.  The closed
forms below are that integral written with the three-term identities; the
coefficients of the cheb-lobatto and lower-sign cheb-radau forms were
fixed by checking against a direct Chebyshev-series antiderivative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as cheb
from numpy.polynomial import legendre as leg
from scipy.fft import dct

from .barycentric import Interpolant, build_interpolant
from .nodes import NodeFamily, NodeSet, generate_nodes
from .orthopoly import PolyKind, eval_deriv, eval_poly

__all__ = [
    "Theorem3",
    "DerivCollocProblem",
    "ClosedFormError",
    "collocation_points",
    "solve",
    "closed_form_terms",
    "closed_form_error",
    "error_derivative",
    "value_superpoints",
    "verify_closed_form",
    "ode_solve",
]

_T, _U, _L = PolyKind.CHEBYSHEV_T, PolyKind.CHEBYSHEV_U, PolyKind.LEGENDRE


class Theorem3(enum.Enum):
    T31 = "T31"
    T32 = "T32"
    T33_right = "T33_right"
    T33_left = "T33_left"
    T34 = "T34"
    T35 = "T35"
    T36_right = "T36_right"
    T36_left = "T36_left"

    @property
    def family(self) -> NodeFamily:
        return _THEOREM_FAMILY[self]

    @property
    def min_n(self) -> int:
        return {Theorem3.T31: 1, Theorem3.T32: 3, Theorem3.T35: 3}.get(self, 2)

    @classmethod
    def for_family(cls, family: NodeFamily) -> "Theorem3":
        return {f: t for t, f in _THEOREM_FAMILY.items()}[family]


_THEOREM_FAMILY = {
    Theorem3.T31: NodeFamily.LEG_GAUSS,
    Theorem3.T32: NodeFamily.LEG_LOBATTO,
    Theorem3.T33_right: NodeFamily.LEG_RADAU_RIGHT,
    Theorem3.T33_left: NodeFamily.LEG_RADAU_LEFT,
    Theorem3.T34: NodeFamily.CHEB_GAUSS,
    Theorem3.T35: NodeFamily.CHEB_LOBATTO,
    Theorem3.T36_right: NodeFamily.CHEB_RADAU_RIGHT,
    Theorem3.T36_left: NodeFamily.CHEB_RADAU_LEFT,
}


def _check_n(theorem: Theorem3, n) -> int:
    if int(n) != n or n < theorem.min_n:
        raise ValueError(f"{theorem.value} needs an integer N >= {theorem.min_n}, got {n!r}")
    return int(n)


def collocation_points(family: NodeFamily, n: int) -> NodeSet:
    """The N derivative-collocation points for ``family`` (see module table)."""
    n = _check_n(Theorem3.for_family(family), n)
    if not family.is_chebyshev:
        return generate_nodes(family, n)
    if family is NodeFamily.CHEB_LOBATTO:
        # explicit union of the endpoints and the zeros k pi/(N-1) of U_{N-2}
        inner = np.arange(1, n - 1) * np.pi / (n - 1)
        thetas = np.concatenate(([np.pi], inner[::-1], [0.0]))
        xs = np.concatenate(([-1.0], np.cos(inner[::-1]), [1.0]))
        xs[1:-1] = 0.5 * (xs[1:-1] - xs[-2:0:-1])
        return NodeSet(family, n - 1, xs, thetas)
    # T_N, T_N - T_{N-1} and T_N + T_{N-1} are the section-2 families at N - 1
    return generate_nodes(family, n - 1)


@dataclass(frozen=True)
class DerivCollocProblem:
    family: NodeFamily
    N: int
    initial_value: float
    deriv_values: np.ndarray

    def __post_init__(self):
        Theorem3.for_family(self.family)
        count = len(collocation_points(self.family, self.N))
        vals = np.asarray(self.deriv_values, dtype=float)
        if vals.shape != (count,):
            raise ValueError(f"expected {count} derivative values, got shape {vals.shape}")
        object.__setattr__(self, "deriv_values", vals)


def _cheb_coefficients(samples_desc_x):
    """Chebyshev coefficients from samples at cos((2j+1)pi/(2M)), j = 0..M-1."""
    m = len(samples_desc_x)
    c = dct(samples_desc_x, type=2) / m
    c[0] /= 2
    return c


def solve(problem: DerivCollocProblem) -> Interpolant:
    """u_N with u_N(-1) = initial_value and u_N'(x_k) = deriv_values[k].

    u_N' is interpolated at the collocation points, resampled at the N
    first-kind Chebyshev points, turned into a Chebyshev series with a DCT,
    integrated from -1, and stored on the N+1 first-kind points.
    """
    n = problem.N
    pts = collocation_points(problem.family, n)
    dip = build_interpolant(pts, problem.deriv_values)
    gauss = generate_nodes(NodeFamily.CHEB_GAUSS, n - 1) if n > 1 else None
    if gauss is None:
        coef = np.array([problem.deriv_values[0]])
    else:
        # xs ascending means theta descending; the DCT wants theta ascending
        coef = _cheb_coefficients(np.asarray(dip(gauss.xs))[::-1])
    anti = cheb.chebint(coef, lbnd=-1, k=problem.initial_value)
    out = generate_nodes(NodeFamily.CHEB_GAUSS, n)
    return build_interpolant(out, cheb.chebval(out.xs, anti))


def ode_solve(f, initial_value: float, family: NodeFamily, n: int) -> Interpolant:
    """Collocation solution of u' = f(x), u(-1) = initial_value."""
    pts = collocation_points(family, n)
    vals = np.asarray(f(pts.xs), dtype=float) * np.ones(len(pts))
    if not np.all(np.isfinite(vals)):
        raise ValueError("f is not finite at every collocation point")
    return solve(DerivCollocProblem(family, n, float(initial_value), vals))


@dataclass(frozen=True)
class ClosedFormError:
    theorem: Theorem3
    N: int
    leading_constant: float = 1.0

    def __post_init__(self):
        _check_n(self.theorem, self.N)
        if not np.isfinite(self.leading_constant):
            raise ValueError("leading_constant must be finite")


def _int_t(m: int, x):
    """Integral of T_m from -1 to x."""
    if m == 0:
        return x + 1.0
    if m == 1:
        return 0.5 * (x * x - 1.0)

    def prim(t):
        return 0.5 * (eval_poly(_T, m + 1, t) / (m + 1) - eval_poly(_T, m - 1, t) / (m - 1))

    return prim(x) - prim(-1.0)


def closed_form_terms(cfe: ClosedFormError, x) -> list:
    """The separate right-hand-side terms of the closed error form, scaled.

    The first entry is the dominant term; the rest are the corrections.
    """
    n, th = cfe.N, cfe.theorem
    x = np.asarray(x, dtype=float)
    T = lambda k: eval_poly(_T, k, x)  # noqa: E731
    U = lambda k: eval_poly(_U, k, x)  # noqa: E731
    L = lambda k: eval_poly(_L, k, x)  # noqa: E731
    d = n * n - 1.0
    sgn = (-1.0) ** n
    if th is Theorem3.T31:
        terms = [(x * x - 1) * eval_deriv(_L, n, x, 1) / (n * (n + 1))]
    elif th is Theorem3.T32:
        terms = [
            (x * x - 1) * (2 * n - 1) * L(n - 1) / (n * (n + 1)),
            -(4 * n - 2) / (n * (n + 1) * (2 * n - 3)) * (L(n - 1) - L(n - 3)),
        ]
    elif th in (Theorem3.T33_right, Theorem3.T33_left):
        s = 1.0 if th is Theorem3.T33_right else -1.0
        terms = [
            n * n / d * (L(n) + s * L(n - 1)) * (x - s),
            -n / d * (L(n) - s * L(n - 1)) * (x + s),
        ]
    elif th is Theorem3.T34:
        terms = [n / d * (x * x - 1) * U(n - 1), -(x * T(n) + sgn) / d]
    elif th is Theorem3.T35:
        terms = [
            n * (1 - x * x) / d * T(n - 1),
            -n * (1 - x * x) / (d * (n - 2)) * U(n - 3),
            (x * T(n) + sgn) / (2 * d),
            -(n * n) * (x * T(n - 2) + sgn) / (2 * (n - 2) ** 2 * d),
            2 * (n - 1) / (d * (n - 2) ** 2) * _int_t(n - 2, x),
        ]
    else:
        # s = +1: collocation at T_N + T_{N-1} (left); s = -1: T_N - T_{N-1}
        s = 1.0 if th is Theorem3.T36_left else -1.0
        terms = [
            n * (x + s) / d * (T(n) - s * T(n - 1)),
            s * n * (x * x - 1) / (d * (n - 1)) * U(n - 2),
            -(x * T(n) + sgn) / d,
            -s * n * n * (x * T(n - 1) - sgn) / (d * (n - 1) ** 2),
            s * (2 * n - 1) / (d * (n - 1) ** 2) * _int_t(n - 1, x),
        ]
    return [cfe.leading_constant * t for t in terms]


def closed_form_error(cfe: ClosedFormError, x):
    """u - u_N at x, for the u whose error derivative is the scaled collocation polynomial."""
    out = sum(closed_form_terms(cfe, x))
    return out[()] if isinstance(out, np.ndarray) and out.ndim == 0 else out


def error_derivative(theorem: Theorem3, n: int):
    """(u - u_N)' with unit leading constant, as ``(basis, coefficients)``.

    ``basis`` is ``"L"`` (Legendre series) or ``"T"`` (Chebyshev series).
    """
    n = _check_n(theorem, n)
    c = np.zeros(n + 1)
    if theorem is Theorem3.T31:
        c[n] = 1
    elif theorem is Theorem3.T32:
        c[n], c[n - 2] = 1, -1
    elif theorem in (Theorem3.T33_right, Theorem3.T33_left):
        c[n], c[n - 1] = n, -n if theorem is Theorem3.T33_right else n
    elif theorem is Theorem3.T34:
        c[n] = 1
    elif theorem is Theorem3.T35:
        c[n], c[n - 2] = -0.5, 0.5
    else:
        c[n], c[n - 1] = 1, 1 if theorem is Theorem3.T36_left else -1
    return ("T" if theorem.family.is_chebyshev else "L"), c


def value_superpoints(family: NodeFamily, n: int) -> np.ndarray:
    """Points where u_N itself superconverges when u' is collocated at ``family``."""
    theorem = Theorem3.for_family(family)
    n = _check_n(theorem, n)
    if theorem is Theorem3.T31:
        # zeros of L_N' are the interior Lobatto points of parameter N + 1
        xs = generate_nodes(NodeFamily.LEG_LOBATTO, n + 1).xs[1:-1]
    elif theorem is Theorem3.T32:
        xs = generate_nodes(NodeFamily.LEG_GAUSS, n - 1).xs
    elif theorem is Theorem3.T33_right:
        xs = generate_nodes(NodeFamily.LEG_RADAU_LEFT, n).xs
    elif theorem is Theorem3.T33_left:
        xs = generate_nodes(NodeFamily.LEG_RADAU_RIGHT, n).xs
    elif theorem is Theorem3.T34:
        k = np.arange(n - 1, 0, -1)
        xs = np.cos(k * np.pi / n)
        xs = 0.5 * (xs - xs[::-1])
    elif theorem is Theorem3.T35:
        xs = generate_nodes(NodeFamily.CHEB_GAUSS, n - 2).xs
    elif theorem is Theorem3.T36_right:
        xs = generate_nodes(NodeFamily.CHEB_RADAU_LEFT, n - 1).xs
    else:
        xs = generate_nodes(NodeFamily.CHEB_RADAU_RIGHT, n - 1).xs
    return np.array(xs)


def verify_closed_form(theorem: Theorem3, n: int, grid_size: int = 1001) -> float:
    """Max grid residual between the measured error and the closed form.

    u is built as p + (integral from -1 of the unit error derivative), with
    p a fixed degree-N polynomial, so u_N should come out as p and the
    leading constant is exactly 1.
    """
    n = _check_n(theorem, n)
    basis, c = error_derivative(theorem, n)
    mod = leg if basis == "L" else cheb
    val = mod.legval if mod is leg else mod.chebval
    c_int = leg.legint(c, lbnd=-1) if mod is leg else cheb.chebint(c, lbnd=-1)
    p = 1.0 / np.arange(1, n + 2)
    p_der = cheb.chebder(p)
    family = theorem.family
    pts = collocation_points(family, n)
    du = cheb.chebval(pts.xs, p_der) + val(pts.xs, c)
    ip = solve(DerivCollocProblem(family, n, cheb.chebval(-1.0, p), du))
    x = np.linspace(-1.0, 1.0, grid_size)
    measured = cheb.chebval(x, p) + val(x, c_int) - ip(x)
    predicted = closed_form_error(ClosedFormError(theorem, n, 1.0), x)
    return float(np.max(np.abs(measured - predicted)))
