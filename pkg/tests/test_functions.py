import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.integrate import quad

from superspec.functions import PoleFunction, PolynomialFunction, parse_function, pole2, runge


class TestPoleFunction:
    def test_runge_values(self):
        x = np.linspace(-1, 1, 41)
        assert_allclose(runge()(x), 1 / (1 + 25 * x**2), rtol=1e-14)
        assert runge().rho == pytest.approx(1.2198, abs=1e-4)

    def test_pole2_values(self):
        x = np.linspace(-1, 1, 41)
        assert_allclose(pole2()(x), 1 / (2 - x), rtol=1e-15)
        assert pole2().rho == pytest.approx(3.7321, abs=1e-4)

    @pytest.mark.parametrize("pole", [0.2j, 2.0, -1.5, 0.3 + 0.5j])
    def test_derivatives_by_finite_difference(self, pole):
        f = PoleFunction(pole)
        x, h = np.linspace(-0.9, 0.9, 13), 1e-5
        for k in (1, 2):
            fd = (f.deriv(x + h, k - 1) - f.deriv(x - h, k - 1)) / (2 * h)
            assert_allclose(f.deriv(x, k), fd, rtol=1e-6, atol=1e-6)

    @pytest.mark.parametrize("pole", [0.2j, 2.0, -1.5, 0.3 + 0.5j])
    def test_integral_by_quadrature(self, pole):
        f = PoleFunction(pole)
        for x in (-0.5, 0.0, 0.7, 1.0):
            ref = quad(f, -1, x, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
            assert f.integral(x) == pytest.approx(ref, abs=1e-12)

    @pytest.mark.parametrize("pole", [0.2j, 2.0, 0.3 + 0.5j])
    def test_partial_fractions(self, pole):
        f = PoleFunction(pole)
        z = np.array([0.1 + 0.3j, -0.7, 1.4 - 0.2j])
        total = sum(r / (p - z) for r, p in f.partial_fractions())
        assert_allclose(total, f(z), rtol=1e-14)

    def test_conjugate_normalised(self):
        assert PoleFunction(0.2 - 0.5j).pole == 0.2 + 0.5j

    def test_pole_on_interval(self):
        with pytest.raises(ValueError):
            PoleFunction(0.4)


class TestPolynomialFunction:
    def test_derivative_and_integral(self):
        p = PolynomialFunction(5)
        x = np.linspace(-1, 1, 9)
        h = 1e-6
        assert_allclose(p.deriv(x, 1), (p(x + h) - p(x - h)) / (2 * h), atol=1e-7)
        assert p.integral(-1.0) == 0.0
        assert p.integral(0.4) == pytest.approx(quad(p, -1, 0.4)[0], abs=1e-14)

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            PolynomialFunction(-1)


class TestParse:
    @pytest.mark.parametrize(
        "text, kind",
        [("runge", PoleFunction), ("pole2", PoleFunction), ("custom-pole(1.5)", PoleFunction),
         ("custom-pole(0.1+0.4j)", PoleFunction), ("polynomial(7)", PolynomialFunction)],
    )
    def test_accepts(self, text, kind):
        assert isinstance(parse_function(text), kind)

    @pytest.mark.parametrize("text", ["sin", "custom-pole(0.5)", "polynomial(x)", "custom-pole(2"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_function(text)
