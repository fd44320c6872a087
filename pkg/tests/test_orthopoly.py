import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose
from scipy.special import eval_chebyt, eval_chebyu, eval_legendre

from superspec.orthopoly import PolyKind, ellipse_point, eval_deriv, eval_poly

T, U, L = PolyKind.CHEBYSHEV_T, PolyKind.CHEBYSHEV_U, PolyKind.LEGENDRE


class TestEval:
    def test_t3_at_half(self):
        assert eval_poly(T, 3, 0.5) == pytest.approx(-1.0, abs=1e-15)

    def test_u2_values(self):
        assert_allclose(eval_poly(U, 2, np.array([0.0, 0.5, 1.0])), [-1.0, 0.0, 3.0], atol=1e-15)

    def test_l2_root(self):
        assert abs(eval_poly(L, 2, 1 / math.sqrt(3))) <= 1e-15

    def test_degree_zero_and_one(self):
        x = np.linspace(-1, 1, 7)
        assert_allclose(eval_poly(T, 0, x), 1.0)
        assert_allclose(eval_poly(U, 1, x), 2 * x)
        assert_allclose(eval_poly(L, 1, x), x)

    def test_scalar_in_scalar_out(self):
        assert np.ndim(eval_poly(L, 4, 0.3)) == 0

    def test_matches_scipy(self):
        x = np.linspace(-1, 1, 301)
        for n in (0, 1, 5, 17, 40):
            assert_allclose(eval_poly(T, n, x), eval_chebyt(n, x), atol=1e-13)
            assert_allclose(eval_poly(U, n, x), eval_chebyu(n, x), atol=1e-11 * (n + 1) ** 2)
            assert_allclose(eval_poly(L, n, x), eval_legendre(n, x), atol=1e-13)

    def test_complex_argument_matches_cosh_form(self):
        # T_n((w + 1/w)/2) = (w^n + w^-n)/2
        w = 1.7 * cmath.exp(0.4j)
        z = (w + 1 / w) / 2
        for n in (3, 10, 25):
            assert abs(eval_poly(T, n, z) - (w**n + w**-n) / 2) <= 1e-12 * abs(w) ** n

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            eval_poly(T, -1, 0.2)

    def test_real_outside_interval(self):
        with pytest.raises(ValueError):
            eval_poly(L, 3, 1.01)
        # the small slack is accepted
        eval_poly(L, 3, 1.0 + 5e-13)


class TestDeriv:
    def test_t5_endpoint(self):
        assert eval_deriv(T, 5, 1.0, 1) == 25.0

    def test_t3_at_zero(self):
        assert eval_deriv(T, 3, 0.0, 1) == pytest.approx(-3.0, abs=1e-15)

    def test_l2_second(self):
        assert eval_deriv(L, 2, 0.7, 2) == pytest.approx(3.0, abs=1e-14)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            eval_deriv(T, 3, 0.1, 3)

    def test_endpoint_limits_against_numpy(self):
        for kind, cls in ((T, np.polynomial.Chebyshev), (L, np.polynomial.Legendre)):
            for n in (1, 2, 7, 20):
                p = cls.basis(n)
                for order in (1, 2):
                    ref = p.deriv(order)(np.array([-1.0, 1.0]))
                    got = [eval_deriv(kind, n, -1.0, order), eval_deriv(kind, n, 1.0, order)]
                    assert_allclose(got, ref, rtol=1e-12, atol=1e-12)

    def test_u_derivatives_against_numpy(self):
        x = np.linspace(-1, 1, 101)
        for n in (1, 4, 9):
            # U_n = T_{n+1}' / (n + 1)
            p = np.polynomial.Chebyshev.basis(n + 1).deriv() / (n + 1)
            for order in (1, 2):
                assert_allclose(eval_deriv(U, n, x, order), p.deriv(order)(x), atol=1e-10 * (n + 1) ** 4)

    @given(n=st.integers(1, 64), th=st.floats(0.01, math.pi - 0.01))
    def test_t_prime_is_n_u(self, n, th):
        x = math.cos(th)
        lhs, rhs = eval_deriv(T, n, x, 1), n * eval_poly(U, n - 1, x)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs), n * n)


class TestEllipsePoint:
    def test_theta_zero(self):
        assert ellipse_point(2.0, 0).z == pytest.approx(1.25)

    def test_imaginary_axis(self):
        z = ellipse_point(2.0, math.pi / 2).z
        assert abs(z - 0.75j) <= 1e-15

    def test_conjugate_symmetry(self):
        assert ellipse_point(1.5, 0.7).z == pytest.approx(ellipse_point(1.5, -0.7).z.conjugate())

    def test_theta_reduced(self):
        assert 0 <= ellipse_point(1.5, -0.7).theta < 2 * math.pi

    def test_degenerate(self):
        with pytest.raises(ValueError):
            ellipse_point(1.0, 0.3)

    @given(rho=st.floats(1.01, 10), th=st.floats(0, 2 * math.pi))
    def test_foci(self, rho, th):
        p = ellipse_point(rho, th)
        assert abs(abs(p.z - 1) + abs(p.z + 1) - (rho + 1 / rho)) <= 1e-12 * (rho + 1 / rho)
        w = rho * cmath.exp(1j * p.theta)
        assert abs((w + 1 / w) / 2 - p.z) <= 1e-15 * abs(p.z) + 1e-16


class TestIdentities:
    def test_trig_forms(self, rng):
        th = rng.uniform(0, math.pi, 1000)
        x = np.cos(th)
        for n in range(1, 65):
            assert np.abs(eval_poly(T, n, x) - np.cos(n * th)).max() <= 1e-12
            assert np.abs(eval_poly(U, n - 1, x) * np.sin(th) - np.sin(n * th)).max() <= 1e-12

    def test_legendre_ode(self):
        x = np.linspace(-1, 1, 1001)
        for n in range(33):
            res = -2 * x * eval_deriv(L, n, x, 1) + (1 - x * x) * eval_deriv(L, n, x, 2) + n * (n + 1) * eval_poly(L, n, x)
            assert np.abs(res).max() <= 1e-10

    def test_lemma31(self):
        x = np.linspace(-1, 1, 1001)
        for n in range(2, 33):
            p, m = eval_poly(L, n, x), eval_poly(L, n - 1, x)
            dp, dm = eval_deriv(L, n, x, 1), eval_deriv(L, n - 1, x, 1)
            assert np.abs(n * (p + m) - (x + 1) * (dp - dm)).max() <= 1e-11
            assert np.abs(n * (p - m) - (x - 1) * (dp + dm)).max() <= 1e-11

    def test_lemma32(self):
        x = np.linspace(-1, 1, 1001)
        for n in range(2, 33):
            t, tm = eval_poly(T, n, x), eval_poly(T, n - 1, x)
            u, um = eval_poly(U, n - 1, x), eval_poly(U, n - 2, x)
            assert np.abs(t + tm - (x + 1) * (u - um)).max() <= 1e-12
            assert np.abs(t - tm - (x - 1) * (u + um)).max() <= 1e-12
