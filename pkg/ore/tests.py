from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import DivisionByZero, NotAUnit
from fields.finite import FieldSpec
from series.laurent import LaurentElement

from .factories import (
    IntegralOrePolyFactory,
    OrePolyFactory,
    SkewLaurentPolyFactory,
    UnitTauSeriesFactory,
)
from .polynomials import LOCAL, OrePoly, left_divmod
from .tau_series import TauSeries, series_inverse, series_mul


class OreMultiplicationTests(SimpleTestCase):
    """
    Tests for the twisted product.
    """

    def setUp(self):
        reseed_random(2024)
        self.f2 = FieldSpec(2, [0, 1])
        self.f4 = FieldSpec(2, [1, 1, 1])

    def test_commutation_rule(self):
        """Test that tau * c = c^2 * tau over F_4."""
        tau = OrePoly(self.f4, {1: 1})
        for c in self.f4.elements():
            product = tau * OrePoly(self.f4, {0: c})
            self.assertEqual(product, OrePoly(self.f4, {1: c * c}))

    def test_right_identity(self):
        """Test that f * 1 = f."""
        f = OrePolyFactory(field=self.f4)
        self.assertEqual(f * 1, f)

    def test_square_over_f2(self):
        """Test that (tau + 1)^2 = tau^2 + 1 over F_2."""
        f = OrePoly(self.f2, {1: 1, 0: 1})
        self.assertEqual(f * f, OrePoly(self.f2, {2: 1, 0: 1}))

    def test_ring_axioms(self):
        """Test associativity and distributivity on random triples."""
        for _ in range(20):
            f = OrePolyFactory()
            g = OrePolyFactory(field=f.field)
            h = OrePolyFactory(field=f.field)
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f * (g + h), f * g + f * h)
            self.assertEqual((f + g) * h, f * h + g * h)

    def test_skew_laurent_associativity(self):
        """Test associativity with negative tau-exponents."""
        for _ in range(20):
            f = SkewLaurentPolyFactory()
            g = SkewLaurentPolyFactory(field=f.field)
            h = SkewLaurentPolyFactory(field=f.field)
            self.assertEqual((f * g) * h, f * (g * h))

    def test_evaluate(self):
        """Test Horner evaluation of a(t) at a twisted polynomial."""
        f = OrePoly(self.f2, {1: 1, 0: 1})
        self.assertEqual(f.evaluate([1, 0, 1]), OrePoly(self.f2, {2: 1}))


class OreApplyTests(SimpleTestCase):
    """
    Tests for the action of twisted polynomials on K^perf.
    """

    def setUp(self):
        reseed_random(99)
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_tau_squared(self):
        """Test that tau^2 applied to pi^-1 is pi^-9 when p = 3."""
        xi = LaurentElement.monomial(self.f3, -1)
        expected = LaurentElement.monomial(self.f3, -9)
        self.assertEqual(OrePoly(self.f3, {2: 1}).apply(xi), expected)

    def test_constant(self):
        """Test that a constant acts by multiplication."""
        xi = LaurentElement.monomial(self.f3, -2) + 1
        self.assertEqual(OrePoly(self.f3, {0: 2}).apply(xi), xi * 2)

    def test_carlitz_type_action(self):
        """Test that (tau + pi) applied to pi^-2 is pi^-4 + pi^-1 over F_2."""
        pi = LaurentElement.monomial(self.f2, 1)
        f = OrePoly(self.f2, {1: 1, 0: pi}, LOCAL)
        xi = LaurentElement.monomial(self.f2, -2)
        expected = LaurentElement.monomial(self.f2, -4)
        expected = expected + LaurentElement.monomial(self.f2, -1)
        self.assertEqual(f.apply(xi), expected)

    def test_left_module_action(self):
        """Test that (fg)(xi) = f(g(xi)) and linearity."""
        from series.factories import LaurentElementFactory

        for _ in range(20):
            f = IntegralOrePolyFactory()
            g = OrePolyFactory(field=f.field, max_degree=2)
            xi = LaurentElementFactory(field=f.field, low=-4, high=2)
            eta = LaurentElementFactory(field=f.field, low=-4, high=2)
            self.assertEqual((f * g).apply(xi), f.apply(g.apply(xi)))
            self.assertEqual(f.apply(xi + eta), f.apply(xi) + f.apply(eta))


class LeftDivmodTests(SimpleTestCase):
    """
    Tests for left Euclidean division in k[tau].
    """

    def setUp(self):
        reseed_random(5)
        self.f4 = FieldSpec(2, [1, 1, 1])

    def test_division_by_itself(self):
        """Test that f = 1 * f + 0."""
        f = OrePolyFactory(field=self.f4)
        q, r = left_divmod(f, f)
        self.assertEqual(q, OrePoly(self.f4, {0: 1}))
        self.assertTrue(r.is_zero())

    def test_smaller_degree(self):
        """Test that deg f < deg g gives (0, f)."""
        f = OrePolyFactory(field=self.f4, max_degree=1)
        g = OrePolyFactory(field=self.f4, max_degree=3)
        q, r = left_divmod(f, g)
        self.assertTrue(q.is_zero())
        self.assertEqual(r, f)

    def test_worked_quotient(self):
        """Test that tau^2 = (z tau)(z tau) over F_4."""
        z = self.f4.generator()
        q, r = left_divmod(OrePoly(self.f4, {2: 1}), OrePoly(self.f4, {1: z}))
        self.assertEqual(q, OrePoly(self.f4, {1: z}))
        self.assertTrue(r.is_zero())
        self.assertEqual(q * OrePoly(self.f4, {1: z}), OrePoly(self.f4, {2: 1}))

    def test_round_trip(self):
        """Test that q * g + r = f with deg r < deg g on random pairs."""
        for _ in range(30):
            f = OrePolyFactory(max_degree=5)
            g = OrePolyFactory(field=f.field, max_degree=2)
            q, r = left_divmod(f, g)
            self.assertEqual(q * g + r, f)
            self.assertLess(r.degree(), g.degree())

    def test_division_by_zero(self):
        """Test that dividing by zero raises DivisionByZero."""
        with self.assertRaises(DivisionByZero):
            left_divmod(OrePoly(self.f4, {1: 1}), OrePoly(self.f4, {}))


class SeriesInverseTests(SimpleTestCase):
    """
    Tests for truncated tau^-1-series and their inverses.
    """

    def setUp(self):
        reseed_random(31)
        self.f4 = FieldSpec(2, [1, 1, 1])

    def test_inverse_of_one(self):
        """Test that the inverse of 1 is 1."""
        one = TauSeries.one(self.f4, 4)
        self.assertEqual(series_inverse(one), one)

    def test_inverse_of_constant(self):
        """Test that a constant series inverts to the inverse constant."""
        z = self.f4.generator()
        x = TauSeries(self.f4, {0: LaurentElement.constant(self.f4, z)}, 3)
        y = series_inverse(x)
        self.assertEqual(y[0], LaurentElement.constant(self.f4, z.inverse()))
        self.assertTrue(all(y[j].is_exact_zero() for j in range(-3, 0)))

    def test_non_unit(self):
        """Test that a non-unit constant coefficient raises NotAUnit."""
        x = TauSeries(self.f4, {0: LaurentElement.monomial(self.f4, 1)}, 2)
        with self.assertRaises(NotAUnit):
            series_inverse(x)

    def test_product_with_inverse(self):
        """Test that x * x^-1 = 1 to depth and that v(y - 1) >= v(x - 1)."""
        for _ in range(15):
            x = UnitTauSeriesFactory(depth=3)
            y = series_inverse(x, prec=12)
            product = series_mul(x, y)
            self.assertTrue((product[0] - 1).is_zero())
            for j in range(-3, 0):
                self.assertTrue(product[j].is_zero())
            w = min(
                [(x[0] - 1).valuation_bound()]
                + [x[j].valuation_bound() for j in range(-3, 0)]
            )
            self.assertGreaterEqual((y[0] - 1).valuation_bound(), w)
            for j in range(-3, 0):
                self.assertGreaterEqual(y[j].valuation_bound(), w)

    def test_z_form_is_integral(self):
        """Test that z_j = y_j^{p^{|j|}} lies at level 0 and round-trips."""
        x = UnitTauSeriesFactory(field=self.f4, depth=4)
        y = series_inverse(x, prec=10)
        for j in range(-4, 1):
            self.assertEqual(y.z(j).level, 0)
            self.assertEqual(y.z(j).p_power(j), y[j])
