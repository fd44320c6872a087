# %%
# Interpolating the Runge function and measuring derivative errors.
#
# The error in u' over the whole interval is compared with the error at
# the superpoints.  The ratio falls as N grows.

import numpy as np

from superspec import NodeFamily, build_interpolant, error_report, generate_nodes, superpoints
from superspec.functions import runge

f = runge()
for fam in (NodeFamily.CHEB_GAUSS, NodeFamily.CHEB_LOBATTO):
    print(fam.value)
    for n in (16, 32, 64):
        nodes = generate_nodes(fam, n)
        ip = build_interpolant(nodes, f(nodes.xs))
        rep = error_report(ip, lambda x: f.deriv(x, 1), 1, 2001, superpoints(fam, n, 1).points)
        print(f"  N={n:3d}  max error {rep.max_error:.3e}  at superpoints {rep.errors_at_superpoints.max():.3e}"
              f"  ratio {rep.ratio:.4f}")

# %%
# The Lobatto ratio is larger: for that family max|omega'| only grows
# like 4N, so the gain at the superpoints is smaller.

# %%
# The second derivative, right Radau nodes.
fam, n = NodeFamily.CHEB_RADAU_RIGHT, 40
nodes = generate_nodes(fam, n)
ip = build_interpolant(nodes, f(nodes.xs))
rep = error_report(ip, lambda x: f.deriv(x, 2), 2, 2001, superpoints(fam, n, 2).points)
print("second derivative ratio:", rep.ratio)
