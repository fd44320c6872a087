import math

import numpy as np
import pytest
from numpy.polynomial import chebyshev as cheb
from numpy.testing import assert_allclose

from superspec.barycentric import (
    Interpolant,
    barycentric_weights,
    build_interpolant,
    differentiation_matrix,
    error_report,
)
from superspec.functions import runge
from superspec.nodes import NodeFamily, generate_nodes
from superspec.orthopoly import PolyKind, eval_poly
from superspec.superpoints import superpoints

F = NodeFamily

# first verified run, grid 2001 plus superpoints
RUNGE_RATIOS = {16: 0.04829760789473894, 32: 0.020192364001586006, 64: 0.005892072046287475}


def _interp(family, n, func):
    nodes = generate_nodes(family, n)
    return build_interpolant(nodes, func(nodes.xs))


class TestExamples:
    def test_quadratic(self):
        ip = _interp(F.CHEB_GAUSS, 2, lambda x: x**2)
        assert ip(0.3) == pytest.approx(0.09, abs=1e-15)

    def test_gauss_weights(self):
        w = barycentric_weights(generate_nodes(F.CHEB_GAUSS, 2))
        assert_allclose(w / w[1] * -1, [0.5, -1, 0.5], atol=1e-15)

    def test_constant(self):
        ip = _interp(F.CHEB_RADAU_LEFT, 9, lambda x: np.full_like(x, 2.5))
        assert_allclose(ip(np.linspace(-1, 1, 101)), 2.5, atol=1e-15)

    def test_cubic_derivative(self):
        ip = _interp(F.CHEB_GAUSS, 3, lambda x: x**3)
        x = np.linspace(-1, 1, 11)
        assert_allclose(ip(x, 1), 3 * x**2, atol=1e-13)

    def test_t5_endpoint_slope(self):
        ip = _interp(F.CHEB_GAUSS, 5, lambda x: eval_poly(PolyKind.CHEBYSHEV_T, 5, x))
        assert ip(1.0, 1) == pytest.approx(25.0, abs=1e-11)

    def test_node_hit_exact(self):
        nodes = generate_nodes(F.LEG_LOBATTO, 11)
        vals = np.exp(nodes.xs)
        ip = build_interpolant(nodes, vals)
        assert np.array_equal(ip(nodes.xs), vals)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            build_interpolant(generate_nodes(F.CHEB_GAUSS, 4), np.ones(4))

    def test_bad_order(self):
        ip = _interp(F.CHEB_GAUSS, 4, np.sin)
        with pytest.raises(ValueError):
            ip(0.1, 3)


@pytest.mark.parametrize("family", list(NodeFamily))
class TestReproduction:
    def test_random_polynomial(self, family, rng):
        for n in (max(family.min_n, 3), 10, 32):
            # a polynomial of degree = number of nodes - 1
            deg = len(generate_nodes(family, n)) - 1
            c = rng.standard_normal(deg + 1)
            ip = _interp(family, n, lambda x: cheb.chebval(x, c))
            x = np.linspace(-1, 1, 257)
            scale = 1 + np.abs(cheb.chebval(x, cheb.chebder(c, 2))).max()
            for order in (0, 1, 2):
                ref = cheb.chebval(x, cheb.chebder(c, order) if order else c)
                assert np.abs(ip(x, order) - ref).max() <= 1e-11 * scale

    def test_weight_scale_invariance(self, family):
        nodes = generate_nodes(family, 12)
        ip = build_interpolant(nodes, np.cos(3 * nodes.xs))
        scaled = Interpolant(nodes, ip.values, ip.weights * 7.3e5)
        x = np.linspace(-1, 1, 97)
        for order in (0, 1, 2):
            assert_allclose(scaled(x, order), ip(x, order), rtol=1e-12, atol=1e-12)

    def test_weights_nonzero(self, family):
        assert np.all(barycentric_weights(generate_nodes(family, 17)) != 0)


@pytest.mark.parametrize("family", [f for f in NodeFamily if f.is_chebyshev])
def test_d1_squared_matches_d2(family):
    for n in (4, 16, 32):
        nodes = generate_nodes(family, n)
        w = barycentric_weights(nodes)
        d1 = differentiation_matrix(nodes.xs, w, 1)
        d2 = differentiation_matrix(nodes.xs, w, 2)
        assert np.abs(d1 @ d1 - d2).max() <= 1e-9 * np.abs(d2).max()


class TestErrorReport:
    @pytest.mark.parametrize("n", sorted(RUNGE_RATIOS))
    def test_runge_golden(self, n):
        f = runge()
        ip = _interp(F.CHEB_GAUSS, n, f)
        rep = error_report(ip, lambda x: f.deriv(x, 1), 1, 2001, superpoints(F.CHEB_GAUSS, n, 1).points)
        assert rep.ratio == pytest.approx(RUNGE_RATIOS[n], rel=1e-9)

    def test_runge_ratio_small_and_decreasing(self):
        assert RUNGE_RATIOS[32] < 0.2
        ratios = [RUNGE_RATIOS[n] for n in (16, 32, 64)]
        assert ratios[0] > ratios[1] > ratios[2]

    def test_polynomial_exact(self):
        ip = _interp(F.CHEB_LOBATTO, 8, lambda x: x**8 - x)
        rep = error_report(ip, lambda x: x**8 - x, 0, 501)
        assert rep.max_error <= 1e-13

    def test_sentinel(self):
        ip = _interp(F.CHEB_GAUSS, 4, np.exp)
        rep = error_report(ip, np.exp, 0, 2, ())
        assert rep.ratio == 1.0 and not rep.ratio_defined

    def test_invariants(self):
        f = runge()
        ip = _interp(F.CHEB_RADAU_RIGHT, 20, f)
        sp = superpoints(F.CHEB_RADAU_RIGHT, 20, 2).points
        rep = error_report(ip, lambda x: f.deriv(x, 2), 2, 1001, sp)
        assert rep.max_error == rep.errors.max()
        assert 0 <= rep.ratio <= 1 and rep.ratio_defined
        assert np.isin(sp, rep.grid).all()

    def test_grid_size_check(self):
        ip = _interp(F.CHEB_GAUSS, 4, np.exp)
        with pytest.raises(ValueError):
            error_report(ip, np.exp, 0, 1)
