"""Invariant checks run by ``superspec verify``.

Each check returns ``(passed, detail)``.  Randomised checks draw from a
generator seeded by ``SUPERSPEC_SEED`` (default 0), so a run is repeatable.
"""

from __future__ import annotations

import os

import numpy as np
from scipy.optimize import brentq

from .barycentric import build_interpolant, differentiation_matrix, error_report
from .derivcolloc import Theorem3, verify_closed_form
from .errorbounds import (
    BoundKind,
    Quantity,
    Theorem,
    bound_value,
    contour_error_oracle,
    ellipse_params,
    envelope_check,
    estimate_c_rho,
    lemma21_lower_bound,
    lemma21_magnitude,
    lemma22_max,
    pole_interpolation_error,
    rho_from_pole,
)
from .functions import pole2, runge
from .nodes import NodeFamily, generate_nodes, nodal_poly
from .orthopoly import PolyKind, eval_deriv, eval_poly
from .superpoints import superpoints

__all__ = ["CHECKS", "run_checks", "seed_from_env"]

CHEB = [f for f in NodeFamily if f.is_chebyshev]
T, U, L = PolyKind.CHEBYSHEV_T, PolyKind.CHEBYSHEV_U, PolyKind.LEGENDRE


def seed_from_env() -> int:
    raw = os.environ.get("SUPERSPEC_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"SUPERSPEC_SEED must be an integer, got {raw!r}") from None


def _result(worst, tol):
    return worst <= tol, f"max residual {worst:.2e} (tol {tol:.0e})"


def check_trig_identities(rng):
    th = rng.uniform(0, np.pi, 1000)
    x = np.cos(th)
    worst = 0.0
    for n in range(1, 65):
        worst = max(worst, np.abs(eval_poly(T, n, x) - np.cos(n * th)).max())
        worst = max(worst, np.abs(eval_poly(U, n - 1, x) * np.sin(th) - np.sin(n * th)).max())
    return _result(worst, 1e-12)


def check_legendre_ode(rng):
    x = np.linspace(-1, 1, 1000)
    worst = 0.0
    for n in range(33):
        lhs = -2 * x * eval_deriv(L, n, x, 1) + (1 - x * x) * eval_deriv(L, n, x, 2)
        worst = max(worst, np.abs(lhs + n * (n + 1) * eval_poly(L, n, x)).max())
    return _result(worst, 1e-11)


def check_radau_identities(rng):
    x = np.linspace(-1, 1, 1000)
    worst = 0.0
    for n in range(2, 33):
        p, m = eval_poly(L, n, x), eval_poly(L, n - 1, x)
        dp, dm = eval_deriv(L, n, x, 1), eval_deriv(L, n - 1, x, 1)
        worst = max(worst, np.abs(n * (p + m) - (x + 1) * (dp - dm)).max())
        worst = max(worst, np.abs(n * (p - m) - (x - 1) * (dp + dm)).max())
        t, tm = eval_poly(T, n, x), eval_poly(T, n - 1, x)
        u, um = eval_poly(U, n - 1, x), eval_poly(U, n - 2, x)
        worst = max(worst, np.abs((t + tm) - (x + 1) * (u - um)).max())
        worst = max(worst, np.abs((t - tm) - (x - 1) * (u + um)).max())
    return _result(worst, 1e-11)


def check_node_invariants(rng):
    worst, msgs = 0.0, []
    for fam in NodeFamily:
        prev = None
        for n in range(fam.min_n, 33):
            ns = generate_nodes(fam, n)
            if len(ns) != fam.size(n) or np.any(np.diff(ns.xs) <= 0):
                msgs.append(f"{fam.value} N={n}: count/order")
            worst = max(worst, np.abs(nodal_poly(fam, n, ns.xs)).max())
            if prev is not None:
                # strict interlacing of consecutive node sets
                a, b = prev.xs, ns.xs
                inner = b[(b > a[0]) & (b < a[-1])]
                if np.any(np.histogram(inner, bins=a)[0] > 1):
                    msgs.append(f"{fam.value} N={n}: interlacing")
            prev = ns
    ok, detail = _result(worst, 1e-11)
    return ok and not msgs, "; ".join(msgs) or detail


def check_lobatto_gamma(rng):
    vals = []
    for n in range(2, 33):
        x = rng.uniform(-0.99, 0.99, 100)
        ratio = nodal_poly(NodeFamily.CHEB_LOBATTO, n, x) / ((1 - x * x) * eval_poly(U, n - 1, x))
        vals.append(np.abs(ratio + 2).max())
    return _result(max(vals), 1e-9)


def _sign_scan_roots(fam, n, order):
    g = np.cos(np.linspace(np.pi, 0, 40 * (n + 2) + 1))
    v = nodal_poly(fam, n, g, order)
    idx = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
    roots = [brentq(lambda t: float(nodal_poly(fam, n, t, order)), g[i], g[i + 1], xtol=1e-15) for i in idx]
    # a grid point can land exactly on a root
    return np.sort(np.concatenate((roots, g[v == 0])))


def check_superpoints(rng):
    worst, msgs = 0.0, []
    for fam in CHEB:
        for n in (2, 3, 5, 8, 16, 32):
            for order in (1, 2):
                sp = superpoints(fam, n, order)
                if len(sp) != n - order + 1 or sp.residuals.max() > 1e-12:
                    msgs.append(f"{fam.value} N={n} order {order}")
                ref = _sign_scan_roots(fam, n, order)
                if len(ref) != len(sp):
                    msgs.append(f"{fam.value} N={n} order {order}: sign scan found {len(ref)}")
                    continue
                worst = max(worst, np.abs(ref - sp.points).max())
    ok, detail = _result(worst, 1e-10)
    return ok and not msgs, "; ".join(msgs) or detail


def check_lemma21(rng):
    worst, low_ok = 0.0, True
    th = rng.uniform(0, 2 * np.pi, 100)
    for fam in CHEB:
        for rho in (1.2, 2.0, 4.0):
            w = rho * np.exp(1j * th)
            z = (w + 1 / w) / 2
            for n in range(fam.min_n, 33):
                direct = np.abs(nodal_poly(fam, n, z))
                closed = lemma21_magnitude(fam, n, rho, th)
                worst = max(worst, np.max(np.abs(closed - direct) / direct))
                dense = lemma21_magnitude(fam, n, rho, np.linspace(0, 2 * np.pi, 2001))
                low_ok &= bool(dense.min() >= lemma21_lower_bound(fam, n, rho) * (1 - 1e-12))
    ok, detail = _result(worst, 1e-10)
    return ok and low_ok, detail + ("" if low_ok else "; lower bound violated")


def check_lemma22(rng):
    x = np.cos(np.linspace(0, np.pi, 100001))
    worst = 0.0
    for fam in CHEB:
        for n in (4, 8, 16, 32):
            for order in (1, 2):
                grid_max = np.abs(nodal_poly(fam, n, x, order)).max()
                # the Radau derivative maxima at x = -/+1 are the displayed values
                worst = max(worst, abs(grid_max - lemma22_max(fam, n, order)) / grid_max)
    return _result(worst, 1e-8)


def check_envelopes(rng):
    worst = max(
        envelope_check(fam, n)
        for fam in (NodeFamily.CHEB_LOBATTO, NodeFamily.CHEB_RADAU_RIGHT, NodeFamily.CHEB_RADAU_LEFT)
        for n in (2, 8, 32)
    )
    return _result(worst, 1e-12)


def check_closed_forms(rng):
    worst = max(verify_closed_form(t, n) for t in Theorem3 for n in (4, 8, 16, 30))
    return _result(worst, 1e-10)


def check_rho(rng):
    d = max(abs(rho_from_pole(0.2j) - 1.2198), abs(rho_from_pole(2.0) - 3.7321))
    return _result(d, 1e-4)


def check_bound_validity(rng):
    u = pole2()
    rho = u.rho * (1 - 1e-3)
    ep = ellipse_params(rho, estimate_c_rho(u, rho))
    grid = np.linspace(-1, 1, 2001)
    pf = u.partial_fractions()
    worst = 0.0
    for fam in CHEB:
        thm = Theorem.for_family(fam)
        for n in range(4, 33):
            s1, s2 = superpoints(fam, n, 1).points, superpoints(fam, n, 2).points
            err = {
                Quantity.VALUE: (grid, 0),
                Quantity.D1: (grid, 1),
                Quantity.D2: (grid, 2),
                Quantity.D1_SUPER: (s1, 1),
                Quantity.D2_SUPER: (s2, 2),
            }
            for q, (pts, order) in err.items():
                measured = np.abs(pole_interpolation_error(pf, fam, n, pts, order)).max()
                worst = max(worst, measured / bound_value(BoundKind(thm, q), n, ep))
    return worst <= 1.0, f"largest measured/bound {worst:.2e}"


def check_barycentric(rng):
    worst = 0.0
    for fam in NodeFamily:
        for n in (fam.min_n + 1, 8, 16, 32):
            ns = generate_nodes(fam, n)
            c = rng.standard_normal(len(ns))
            p = np.polynomial.Chebyshev(c)
            ip = build_interpolant(ns, p(ns.xs))
            x = rng.uniform(-1, 1, 50)
            scale = 1 + np.abs(p.deriv(2)(np.linspace(-1, 1, 201))).max()
            for order in (0, 1, 2):
                worst = max(worst, np.abs(ip(x, order) - p.deriv(order)(x)).max() / scale)
        if fam.is_chebyshev:
            for n in (8, 16, 32):
                ns = generate_nodes(fam, n)
                ip = build_interpolant(ns, np.zeros(len(ns)))
                d1 = differentiation_matrix(ns.xs, ip.weights, 1)
                d2 = differentiation_matrix(ns.xs, ip.weights, 2)
                if np.abs(d1 @ d1 - d2).max() > 1e-9:
                    return False, f"{fam.value} N={n}: D1 D1 != D2"
    return _result(worst, 1e-11)


def check_superconvergence(rng):
    u = runge()
    ratios = []
    for n in (16, 32, 64):
        ns = generate_nodes(NodeFamily.CHEB_GAUSS, n)
        ip = build_interpolant(ns, u(ns.xs))
        rep = error_report(ip, lambda x: u.deriv(x, 1), 1, 2001, superpoints(NodeFamily.CHEB_GAUSS, n, 1).points)
        ratios.append(rep.ratio)
    ok = ratios[0] > ratios[1] > ratios[2]
    return ok, "ratios " + ", ".join(f"{r:.3g}" for r in ratios)


def check_contour_oracle(rng):
    u = pole2()
    fam, n = NodeFamily.CHEB_GAUSS, 16
    ns = generate_nodes(fam, n)
    ip = build_interpolant(ns, u(ns.xs))
    worst = 0.0
    for x in rng.uniform(-1, 1, 10):
        worst = max(worst, abs(contour_error_oracle(u, fam, n, x, 0, 3.0) - (u(x) - ip(x))))
    return _result(worst, 1e-8)


CHECKS = {
    "orthopoly.trig_identities": check_trig_identities,
    "orthopoly.legendre_ode": check_legendre_ode,
    "orthopoly.radau_identities": check_radau_identities,
    "nodes.invariants": check_node_invariants,
    "nodes.lobatto_gamma": check_lobatto_gamma,
    "superpoints.solver": check_superpoints,
    "errorbounds.lemma21": check_lemma21,
    "errorbounds.lemma22": check_lemma22,
    "errorbounds.envelopes": check_envelopes,
    "errorbounds.rho": check_rho,
    "errorbounds.bound_validity": check_bound_validity,
    "errorbounds.contour_oracle": check_contour_oracle,
    "barycentric.reproduction": check_barycentric,
    "barycentric.superconvergence": check_superconvergence,
    "derivcolloc.closed_forms": check_closed_forms,
}


def run_checks(seed: int | None = None):
    """Run every check; returns a list of ``(name, passed, detail)``."""
    seed = seed_from_env() if seed is None else seed
    out = []
    for name, fn in CHECKS.items():
        rng = np.random.default_rng(seed)
        try:
            ok, detail = fn(rng)
        except Exception as exc:  # a crash is a failed check, reported with its message
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, bool(ok), detail))
    return out
