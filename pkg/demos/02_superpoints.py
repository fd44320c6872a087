# %%
# Derivative superpoints: the zeros of omega' and omega''.
#
# At these points the interpolation error of u' (or u'') loses its
# largest term, so the derivative is much more accurate there.

import numpy as np

from superspec import NodeFamily, nodal_poly, superpoints

n = 8
for fam in (NodeFamily.CHEB_GAUSS, NodeFamily.CHEB_LOBATTO, NodeFamily.CHEB_RADAU_RIGHT):
    for order in (1, 2):
        sp = superpoints(fam, n, order)
        check = np.abs(nodal_poly(fam, n, sp.points, order)).max()
        print(f"{fam.value:16s} order {order}: {len(sp)} points, max|omega^({order})| = {check:.1e}")

# %%
# The asymptotic guesses get closer as N grows.
for n in (8, 16, 32, 64):
    sp = superpoints(NodeFamily.CHEB_RADAU_RIGHT, n, 2)
    inner = (sp.thetas > 0) & (sp.thetas < np.pi)
    print(n, np.abs(sp.thetas - sp.guesses)[inner].max())

# %%
# Second-derivative superpoints of the Gauss family sit close to the
# interior Gauss nodes themselves, at least away from the endpoints.
from superspec import generate_nodes

n = 32
a = np.sort(superpoints(NodeFamily.CHEB_GAUSS, n, 2).thetas)
b = np.sort(generate_nodes(NodeFamily.CHEB_GAUSS, n).thetas[1:-1])
gap = np.abs(a - b)
mid = (b >= np.pi / 4) & (b <= 3 * np.pi / 4)
print("max theta gap, all points:", gap.max())
print("max theta gap, pi/4..3pi/4:", gap[mid].max(), " vs 2/N^2 =", 2 / n**2)
