# %%
# Node families and their nodal polynomials.
#
# Each family is the zero set of one polynomial omega.  The Chebyshev
# families come in closed form; the Legendre ones are found by Newton.

import numpy as np

from superspec import NodeFamily, generate_nodes, nodal_poly

for fam in NodeFamily:
    n = max(fam.min_n, 6)
    ns = generate_nodes(fam, n)
    res = np.abs(nodal_poly(fam, n, ns.xs)).max()
    print(f"{fam.value:17s} N={n}  {len(ns)} nodes  max|omega(x_k)| = {res:.1e}")
    print("   ", np.array2string(ns.xs, precision=4, max_line_width=120))

# %%
# The Lobatto nodal polynomial is a constant times (1 - x^2) U_{N-1}.
# The constant is -2, whatever N is.
x = np.linspace(-0.95, 0.95, 6)
for n in (4, 9, 20):
    om = nodal_poly(NodeFamily.CHEB_LOBATTO, n, x)
    u = np.sin(n * np.arccos(x)) / np.sqrt(1 - x * x)
    print(n, om / ((1 - x * x) * u))

# %%
# Legendre nodes at a larger degree come back quickly and accurately.
ns = generate_nodes(NodeFamily.LEG_GAUSS, 200)
w = 2 / ((1 - ns.xs**2) * nodal_poly(NodeFamily.LEG_GAUSS, 200, ns.xs, 1) ** 2)
print("Gauss-Legendre weights sum to", w.sum())
