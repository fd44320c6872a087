# %%
# A-priori bounds on the Bernstein ellipse against measured errors.
#
# u(x) = 1/(2 - x) has its pole at 2, so it is analytic inside the ellipse
# through that point.  We back off slightly so C_rho stays finite.

import numpy as np

from superspec import NodeFamily
from superspec.errorbounds import (
    BoundKind,
    Quantity,
    Theorem,
    bound_value,
    ellipse_params,
    estimate_c_rho,
    pole_interpolation_error,
)
from superspec.functions import pole2

u = pole2()
rho = u.rho * (1 - 1e-3)
ep = ellipse_params(rho, estimate_c_rho(u, rho))
print(f"rho={ep.rho:.5f} D={ep.d_rho:.5f} L={ep.l_rho:.5f} C={ep.c_rho:.2f}")

# %%
# For a single pole the error has a closed residue form, which stays
# accurate far below rounding level.  That lets us compare with the bound
# even at N = 32, where the value bound is about 3e-16.
x = np.linspace(-1, 1, 2001)
fam = NodeFamily.CHEB_GAUSS
for n in (4, 8, 16, 32):
    for q, order in ((Quantity.VALUE, 0), (Quantity.D1, 1), (Quantity.D2, 2)):
        err = np.abs(pole_interpolation_error(u.partial_fractions(), fam, n, x, order)).max()
        b = bound_value(BoundKind(Theorem.CHEB_GAUSS, q), n, ep)
        print(f"N={n:2d} {q.value:6s} measured {err:.2e} bound {b:.2e}")
