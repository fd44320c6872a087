"""``superspec`` command-line entry point.

Commands
--------
nodes         node table (x, theta) for a family and N
superpoints   derivative superpoint table (x, theta)
interp-error  pointwise interpolation error, or a sweep over --n-range
bounds        sweep with the a-priori bound column (pole functions only)
ode           collocation solution of u' = f, pointwise or swept
envelope      extremal points of a Lobatto/Radau nodal polynomial
figure        CSV/SVG reproduction of one of the figures
verify        run the invariant suite; exit 2 if anything fails

Output goes to --output (written to a temporary file, then renamed) or to
stdout.  Exit codes: 0 success, 1 bad configuration, 2 verification failure.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import tempfile

import numpy as np

from . import _svg
from .checks import run_checks, seed_from_env
from .errorbounds import DEFAULT_C_SAMPLES, DEFAULT_MARGIN, envelope_points
from .experiments import interp_table, ode_table, sweep
from .functions import parse_function
from .nodes import NodeFamily, generate_nodes, nodal_poly
from .superpoints import superpoints

__all__ = ["main", "build_parser", "FIGURES"]

N_MAX = 4096

# id -> (kind, family, function, order)
FIGURES = {
    "ch-lobatto": ("profile", NodeFamily.CHEB_LOBATTO, None, 0),
    "ch-radau": ("profile", NodeFamily.CHEB_RADAU_RIGHT, None, 0),
    "ch1": ("interp", NodeFamily.CHEB_GAUSS, "runge", 1),
    "ch-lobatto1": ("interp", NodeFamily.CHEB_LOBATTO, "runge", 1),
    "ch-radau1": ("interp", NodeFamily.CHEB_RADAU_RIGHT, "runge", 1),
    "ch-diff1": ("ode", NodeFamily.CHEB_GAUSS, "runge", 0),
    "ch2": ("interp", NodeFamily.CHEB_GAUSS, "pole2", 1),
    "ch-lobatto2": ("interp", NodeFamily.CHEB_LOBATTO, "pole2", 1),
    "ch-radau2": ("interp", NodeFamily.CHEB_RADAU_RIGHT, "pole2", 1),
    "ch-diff2": ("ode", NodeFamily.CHEB_GAUSS, "pole2", 0),
}
# profiles read best at a modest degree; the error figures need N large
# enough for Example 1 to be past its pre-asymptotic range
DEFAULT_PROFILE_N = 16
DEFAULT_ERROR_N = 32


class ConfigError(ValueError):
    pass


def _num(v) -> str:
    # shortest round-trip decimal
    return repr(float(v))


def parse_n_range(text: str) -> list:
    """``lo:hi`` or ``lo:hi:step`` (inclusive) or a comma list ``a,b,c``."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError
            lo, hi = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step < 1:
                raise ValueError
            ns = list(range(lo, hi + 1, step))
        else:
            ns = sorted({int(p) for p in text.split(",")})
    except ValueError:
        raise ConfigError(f"bad --n-range {text!r}; use lo:hi[:step] or a,b,c") from None
    if not ns or ns[0] < 2 or ns[-1] > N_MAX or ns[0] > ns[-1]:
        raise ConfigError(f"--n-range must satisfy 2 <= lo <= hi <= {N_MAX}")
    return ns


def _family(text):
    try:
        return NodeFamily(text)
    except ValueError:
        valid = ", ".join(f.value for f in NodeFamily)
        raise argparse.ArgumentTypeError(f"unknown family {text!r}; choose from {valid}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superspec", description="Superconvergence points of spectral interpolation.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, family=True, n=True, rng=False, function=False, order=False, grid=False, fmt=False):
        if family:
            sp.add_argument("--family", type=_family, default=NodeFamily.CHEB_GAUSS)
        if n:
            sp.add_argument("--n", type=int, default=None)
        if rng:
            sp.add_argument("--n-range", default=None)
        if function:
            sp.add_argument("--function", default="runge")
        if order:
            sp.add_argument("--order", type=int, default=1)
        if grid:
            sp.add_argument("--grid-size", type=int, default=2001)
            sp.add_argument("--c-samples", type=int, default=DEFAULT_C_SAMPLES)
            sp.add_argument("--margin", type=float, default=DEFAULT_MARGIN)
        if fmt:
            sp.add_argument("--format", choices=("csv", "svg"), default="csv")
        sp.add_argument("--output", default=None)

    common(sub.add_parser("nodes", help="node table"))
    common(sub.add_parser("superpoints", help="derivative superpoints"), order=True)
    common(sub.add_parser("interp-error", help="interpolation error"), rng=True, function=True, order=True, grid=True, fmt=True)
    common(sub.add_parser("bounds", help="error vs a-priori bound"), rng=True, function=True, order=True, grid=True)
    common(sub.add_parser("ode", help="derivative collocation"), rng=True, function=True, grid=True, fmt=True)
    common(sub.add_parser("envelope", help="extremals and envelope"), fmt=True)
    fig = sub.add_parser("figure", help="reproduce a figure")
    fig.add_argument("--id", required=True)
    common(fig, family=False, grid=True, fmt=True)
    fig.set_defaults(format="svg")
    ver = sub.add_parser("verify", help="run the invariant suite")
    ver.add_argument("--output", default=None)
    return p


def _require_n(args, lo=1):
    if args.n is None:
        raise ConfigError("--n is required")
    if not lo <= args.n <= N_MAX:
        raise ConfigError(f"--n must lie in [{lo}, {N_MAX}]")
    return args.n


def _csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for r in rows:
        buf.write(",".join(v if isinstance(v, str) else _num(v) for v in r) + "\n")
    return buf.getvalue()


def _point_csv(tab) -> str:
    rows = zip(tab.x, tab.value, tab.error, ("1" if s else "0" for s in tab.is_superpoint), ("1" if s else "0" for s in tab.is_node))
    return _csv(["x", "value", "error", "is_superpoint", "is_node"], rows)


def _sweep_csv(rows) -> str:
    return _csv(
        ["N", "max_error", "superpoint_max_error", "ratio", "bound"],
        ((str(r.N), r.max_error, r.superpoint_max_error, r.ratio, r.bound) for r in rows),
    )


def _error_svg(tab, title, ylabel) -> str:
    plot = _svg.Plot(title, "x", ylabel, logy=True)
    plot.line(tab.x, tab.error)
    plot.markers(tab.x[tab.is_superpoint], tab.error[tab.is_superpoint], "*")
    plot.markers(tab.x[tab.is_node], tab.error[tab.is_node], "o")
    return plot.render()


def _sweep_svg(rows, title) -> str:
    plot = _svg.Plot(title, "N", "max error", logy=True)
    ns = [r.N for r in rows]
    plot.line(ns, [r.max_error for r in rows])
    sp = [(r.N, r.superpoint_max_error) for r in rows if np.isfinite(r.superpoint_max_error)]
    if sp:
        plot.line([a for a, _ in sp], [b for _, b in sp], dashed=True)
        plot.markers([a for a, _ in sp], [b for _, b in sp], "*")
    return plot.render()


def _profile(family, n, fmt):
    x = np.cos(np.linspace(np.pi, 0, 2001))
    fams = [family] if family is NodeFamily.CHEB_LOBATTO else [NodeFamily.CHEB_RADAU_RIGHT, NodeFamily.CHEB_RADAU_LEFT]
    if fmt == "csv":
        rows = []
        for fam in fams:
            ex, ey = envelope_points(fam, n)
            rows += [(a, b) for a, b in zip(ex, ey)]
        return _csv(["x", "value"], sorted(rows))
    title = f"nodal polynomial profile, {family.value if len(fams) == 1 else 'cheb-radau'}, N={n}"
    plot = _svg.Plot(title, "x", "omega(x)")
    for fam in fams:
        plot.line(x, nodal_poly(fam, n, x))
    if len(fams) == 1:
        plot.line(x, 2 * np.sqrt(np.clip(1 - x * x, 0, None)), dashed=True)
        plot.line(x, -2 * np.sqrt(np.clip(1 - x * x, 0, None)), dashed=True)
    else:
        for s in (1, -1):
            env = np.sqrt(2 * (1 - s * x))
            plot.line(x, env, dashed=True)
            plot.line(x, -env, dashed=True)
    for fam in fams:
        ex, ey = envelope_points(fam, n)
        plot.markers(ex, ey, "o")
    return plot.render()


def _figure(args):
    if args.id not in FIGURES:
        raise ConfigError(f"unknown figure id {args.id!r}; valid ids: {', '.join(FIGURES)}")
    kind, family, fname, order = FIGURES[args.id]
    if args.n is None:
        n = DEFAULT_PROFILE_N if kind == "profile" else DEFAULT_ERROR_N
    else:
        n = _require_n(args, 2)
    if kind == "profile":
        return _profile(family, n, args.format)
    u = parse_function(fname)
    if kind == "interp":
        tab = interp_table(family, n, u, order, args.grid_size)
        title = f"{args.id}: |u' - u_N'| at {family.value} points, {fname}, N={n}"
    else:
        tab = ode_table(family, n, u, args.grid_size)
        title = f"{args.id}: |u - u_N|, u' collocated at {family.value} points, {fname}, N={n}"
    if args.format == "csv":
        return _point_csv(tab)
    return _error_svg(tab, title, "error")


def _run(args) -> tuple:
    cmd = args.command
    if cmd == "verify":
        results = run_checks(seed_from_env())
        lines = [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in results]
        return "\n".join(lines) + "\n", 0 if all(ok for _, ok, _ in results) else 2
    if cmd == "nodes":
        ns = generate_nodes(args.family, _require_n(args, args.family.min_n))
        return _csv(["x", "value"], zip(ns.xs, ns.thetas)), 0
    if cmd == "superpoints":
        if not args.family.is_chebyshev:
            raise ConfigError("superpoints are available for Chebyshev families only")
        sp = superpoints(args.family, _require_n(args, 2), args.order)
        return _csv(["x", "value"], zip(sp.points, sp.thetas)), 0
    if cmd == "envelope":
        ex, ey = envelope_points(args.family, _require_n(args, 2))
        if getattr(args, "format", "csv") == "svg":
            return _profile(args.family, args.n, "svg"), 0
        return _csv(["x", "value"], zip(ex, ey)), 0
    if cmd == "figure":
        return _figure(args), 0

    if args.grid_size < 2:
        raise ConfigError("--grid-size must be at least 2")
    u = parse_function(args.function)
    order = getattr(args, "order", 0) if cmd != "ode" else 0
    if order not in (0, 1, 2):
        raise ConfigError("--order must be 0, 1 or 2")
    fmt = getattr(args, "format", "csv")
    if cmd == "bounds" and not hasattr(u, "partial_fractions"):
        raise ConfigError("bounds need a pole function (runge, pole2 or custom-pole(a))")
    if cmd == "bounds" and not args.family.is_chebyshev:
        raise ConfigError("bounds exist for Chebyshev families only")
    if args.n_range is not None or cmd == "bounds":
        ns = parse_n_range(args.n_range) if args.n_range is not None else [_require_n(args, 2)]
        rows = sweep("ode" if cmd == "ode" else "interp", args.family, ns, u, order, args.grid_size, args.c_samples, args.margin)
        if fmt == "svg":
            return _sweep_svg(rows, f"{cmd}: {args.family.value}, {args.function}"), 0
        return _sweep_csv(rows), 0
    n = _require_n(args, max(2, args.family.min_n))
    if cmd == "ode":
        tab = ode_table(args.family, n, u, args.grid_size)
    else:
        tab = interp_table(args.family, n, u, order, args.grid_size)
    if fmt == "svg":
        return _error_svg(tab, f"{cmd}: {args.family.value}, {args.function}, N={n}", "error"), 0
    return _point_csv(tab), 0


def _emit(text: str, output):
    if output is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".superspec-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        text, status = _run(args)
        _emit(text, args.output)
    except (ConfigError, ValueError) as exc:
        print(f"superspec: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"superspec: error: cannot write output: {exc}", file=sys.stderr)
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
