# %%
# Collocation for u' = f with u(-1) given.
#
# u_N' matches f at N collocation points.  The error in u_N is then
# smallest at a companion point set, named by value_superpoints.

import numpy as np

from superspec import NodeFamily
from superspec.derivcolloc import (
    ClosedFormError,
    Theorem3,
    closed_form_error,
    ode_solve,
    value_superpoints,
    verify_closed_form,
)

f = lambda x: 1 / (1 + 25 * x**2)
exact = lambda x: (np.arctan(5 * x) + np.arctan(5)) / 5 + 1 / 26
x = np.linspace(-1, 1, 2001)
for n in (16, 32, 64):
    ip = ode_solve(f, 1 / 26, NodeFamily.CHEB_GAUSS, n)
    y = value_superpoints(NodeFamily.CHEB_GAUSS, n)
    e_grid = np.abs(exact(x) - ip(x)).max()
    e_sp = np.abs(exact(y) - ip(y)).max()
    print(f"N={n}: max error {e_grid:.2e}, at superpoints {e_sp:.2e}, ratio {e_sp / e_grid:.3f}")

# %%
# The closed error forms are checked against a manufactured solution
# whose error derivative is exactly the collocation polynomial.
for th in Theorem3:
    print(th.value, max(verify_closed_form(th, n) for n in (4, 8, 16, 30)))

# %%
# For u = x^3 and two Gauss-Legendre points, the error is x^3 - x.
print(closed_form_error(ClosedFormError(Theorem3.T31, 2, 2.0), np.array([-0.5, 0.0, 0.5])))
