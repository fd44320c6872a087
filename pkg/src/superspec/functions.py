"""Built-in analytic test functions.

Only functions whose singularities are known in closed form are offered,
so that rho and C_rho can be computed internally:

* ``PoleFunction(a)`` with real ``a``:   u(z) = 1 / (a - z)
* ``PoleFunction(a)`` with complex ``a``: u(z) = |a|^2 / ((z - a)(z - conj a))
* ``PolynomialFunction(d)``: sum_{k<=d} T_k(z) / (k + 1)

``runge()`` is PoleFunction(0.2j), i.e. 1 / (1 + 25 x^2), and ``pole2()``
is PoleFunction(2.0), i.e. 1 / (2 - x).
"""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import chebyshev as cheb

from .errorbounds import rho_from_pole

__all__ = ["PoleFunction", "PolynomialFunction", "runge", "pole2", "parse_function"]


class PoleFunction:
    def __init__(self, pole: complex):
        a = complex(pole)
        if a.imag == 0.0 and -1.0 <= a.real <= 1.0:
            raise ValueError(f"pole {pole!r} lies on [-1, 1]")
        if a.imag < 0:
            a = a.conjugate()
        self.pole = a if a.imag else a.real
        self.name = f"custom-pole({pole})"

    @property
    def poles(self):
        a = self.pole
        return [a, a.conjugate()] if isinstance(a, complex) else [a]

    @property
    def rho(self) -> float:
        return min(rho_from_pole(p) for p in self.poles)

    def partial_fractions(self):
        """Pairs ``(r, p)`` with u(z) = sum r / (p - z)."""
        a = self.pole
        if not isinstance(a, complex):
            return [(1.0, a)]
        scale = abs(a) ** 2 / (a - a.conjugate())
        return [(-scale, a), (scale, a.conjugate())]

    def __call__(self, z):
        return self.deriv(z, 0)

    def deriv(self, z, k: int = 0):
        """k-th derivative, valid for real or complex z."""
        z = np.asarray(z)
        f = math.factorial(k)
        a = self.pole
        if not isinstance(a, complex):
            return f / (a - z) ** (k + 1)
        # partial fractions: |a|^2/(a - conj a) * (1/(z - a) - 1/(z - conj a))
        scale = abs(a) ** 2 / (a - a.conjugate())
        sign = (-1) ** k
        out = scale * sign * f * ((z - a) ** (-k - 1) - (z - a.conjugate()) ** (-k - 1))
        return out.real if np.isrealobj(z) else out

    def integral(self, x):
        """Antiderivative on real x, normalised to vanish at x = -1."""
        x = np.asarray(x, dtype=float)
        a = self.pole
        if not isinstance(a, complex):
            return np.log(abs(a + 1.0)) - np.log(np.abs(a - x))
        alpha, beta = a.real, a.imag
        prim = lambda t: -(abs(a) ** 2 / beta) * np.arctan2(beta, t - alpha)  # noqa: E731
        return prim(x) - prim(-1.0)


class PolynomialFunction:
    def __init__(self, degree: int):
        if int(degree) != degree or degree < 0:
            raise ValueError(f"degree must be a non-negative integer, got {degree!r}")
        self.degree = int(degree)
        self.coef = 1.0 / np.arange(1, self.degree + 2)
        self.name = f"polynomial({self.degree})"
        self.poles = []
        self.rho = None

    def __call__(self, z):
        return self.deriv(z, 0)

    def deriv(self, z, k: int = 0):
        return cheb.chebval(np.asarray(z), cheb.chebder(self.coef, k) if k else self.coef)

    def integral(self, x):
        return cheb.chebval(np.asarray(x, dtype=float), cheb.chebint(self.coef, lbnd=-1))


def runge() -> PoleFunction:
    f = PoleFunction(0.2j)
    f.name = "runge"
    return f


def pole2() -> PoleFunction:
    f = PoleFunction(2.0)
    f.name = "pole2"
    return f


def parse_function(spec: str):
    """Parse ``runge``, ``pole2``, ``custom-pole(a)`` or ``polynomial(d)``."""
    s = spec.strip().replace(" ", "")
    if s == "runge":
        return runge()
    if s == "pole2":
        return pole2()
    for prefix, build in (("custom-pole(", lambda v: PoleFunction(complex(v))), ("polynomial(", lambda v: PolynomialFunction(int(v)))):
        if s.startswith(prefix) and s.endswith(")"):
            try:
                return build(s[len(prefix) : -1])
            except ValueError as exc:
                raise ValueError(f"bad function {spec!r}: {exc}") from None
    raise ValueError(f"unknown function {spec!r}; expected runge, pole2, custom-pole(a) or polynomial(d)")
