"""Safeguarded Newton iteration on a sign-change bracket."""

from __future__ import annotations

import math

import numpy as np


class RootSolverError(RuntimeError):
    """Raised when a bracket is invalid or the iteration fails to converge."""


def safeguarded_newton(f, fprime, a, b, x0=None, xtol=1e-15, ftol=0.0, maxiter=100):
    """Find the root of ``f`` inside ``[a, b]``.

    ``f(a)`` and ``f(b)`` must have opposite signs (a zero at either end is
    returned directly).  Newton steps that leave the current bracket, or
    that fail to halve it, are replaced by bisection, so the iteration always
    converges.  Iteration stops once a step is at most ``xtol`` and
    ``|f| <= ftol``, or once the bracket shrinks below ``xtol``.

    Returns ``(root, |f(root)|, iterations)``.
    """
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a, 0.0, 0
    if fb == 0.0:
        return b, 0.0, 0
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise RootSolverError(f"no sign change on [{a!r}, {b!r}]")
    lo, hi = (a, b) if fa < 0 else (b, a)  # f(lo) < 0 < f(hi)

    x = 0.5 * (a + b) if x0 is None or not min(a, b) < x0 < max(a, b) else x0
    dx_old = abs(b - a)
    dx = dx_old
    fx, dfx = f(x), fprime(x)
    for it in range(1, maxiter + 1):
        newton_ok = dfx != 0.0 and (
            ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) < 0.0
            and abs(2.0 * fx) <= abs(dx_old * dfx)
        )
        dx_old = dx
        if newton_ok:
            dx = fx / dfx
            x_new = x - dx
        else:
            x_new = 0.5 * (lo + hi)
            dx = x - x_new
        x = x_new
        fx, dfx = f(x), fprime(x)
        if fx == 0.0:
            return x, 0.0, it
        if fx < 0:
            lo = x
        else:
            hi = x
        if abs(dx) <= xtol and abs(fx) <= ftol:
            return x, abs(fx), it
        if abs(hi - lo) <= xtol:
            return x, abs(fx), it
    raise RootSolverError(
        f"no convergence on [{a!r}, {b!r}] after {maxiter} iterations (|f|={abs(fx):.3e})"
    )


def safeguarded_newton_many(f, fprime, a, b, x0, xtol=1e-15, maxiter=100):
    """Vectorised :func:`safeguarded_newton` over independent brackets.

    ``f`` and ``fprime`` act elementwise on arrays.  Each entry keeps its own
    bracket; an entry whose Newton step leaves the bracket bisects instead.
    Returns ``(roots, |f(roots)|)``.
    """
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    fa = f(a)
    fb = f(b)
    if np.any(np.sign(fa) * np.sign(fb) > 0):
        bad = int(np.nonzero(np.sign(fa) * np.sign(fb) > 0)[0][0])
        raise RootSolverError(f"no sign change on bracket {bad} [{a[bad]!r}, {b[bad]!r}]")
    lo = np.where(fa < 0, a, b)
    hi = np.where(fa < 0, b, a)
    x = np.where((np.minimum(a, b) < x0) & (x0 < np.maximum(a, b)), x0, 0.5 * (a + b))
    done = (fa == 0) | (fb == 0)
    x = np.where(fa == 0, a, np.where(fb == 0, b, x))
    prev = np.full(x.shape, np.inf)
    noise = 1e3 * np.finfo(float).eps * np.maximum(1.0, np.abs(x))
    for _ in range(maxiter):
        if done.all():
            break
        fx, dfx = f(x), fprime(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = fx / dfx
        x_new = x - step
        inside = np.isfinite(x_new) & ((x_new - lo) * (x_new - hi) <= 0)
        x_new = np.where(inside, x_new, 0.5 * (lo + hi))
        # only an accepted Newton step can signal convergence; a rejected
        # step may bisect back onto the current point.  A step that stops
        # shrinking near rounding level means f is pure noise there.
        size = np.abs(step)
        small = inside & ((size <= xtol) | ((size <= noise) & (size >= 0.5 * prev)))
        prev = np.where(inside, size, np.inf)
        x = np.where(done, x, x_new)
        fx = f(x)
        lo = np.where(~done & (fx < 0), x, lo)
        hi = np.where(~done & (fx > 0), x, hi)
        done |= small | (fx == 0) | (np.abs(hi - lo) <= xtol)
    else:
        if not done.all():
            raise RootSolverError(f"no convergence after {maxiter} iterations")
    return x, np.abs(f(x))
