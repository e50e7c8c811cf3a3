from fractions import Fraction
from unittest.mock import patch

from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import NonConvergence
from fields.factories import FieldSpecFactory
from fields.finite import FieldSpec
from ore.polynomials import LOCAL, OrePoly
from ore.tau_series import TauSeries, series_inverse, series_mul
from series.laurent import LaurentElement

from .factories import DrinfeldModuleSpecFactory
from .lift import (
    canonical_lift,
    check_endomorphism,
    commutation_residual,
    commutes,
    lift_bounds,
    required_depth,
    required_precision,
)
from .modules import DrinfeldModuleSpec, validate


class CanonicalLiftTests(SimpleTestCase):
    """
    Tests for the canonical lift on hand-checkable modules.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])
        self.pi = LaurentElement.monomial(self.f2, 1)
        self.carlitz = validate(DrinfeldModuleSpec(self.f2, {0: self.pi, 1: 1}))

    def test_exact_reduction_gives_one(self):
        """Test that psi = phibar has canonical lift 1 at every depth."""
        spec = DrinfeldModuleSpec(self.f3, {2: 1})
        for depth in (1, 3, 5):
            x = canonical_lift(spec, depth, 8)
            self.assertEqual(x, TauSeries.one(self.f3, depth))

    def test_first_coefficients(self):
        """Test that x_0 = 1 and x_-1 = pi + pi^2 + pi^4 + ... for pi + tau."""
        x = canonical_lift(self.carlitz, 2, 16)
        self.assertEqual(x[0], LaurentElement.one(self.f2))
        expected = LaurentElement(self.f2, {1: 1, 2: 1, 4: 1, 8: 1}, prec=16)
        self.assertEqual(x[-1], expected)

    def test_coefficients_in_maximal_ideal(self):
        """Test that v(x_l) >= w = 1 for l < 0."""
        x = canonical_lift(self.carlitz, 4, 16)
        for j in range(-4, 0):
            self.assertGreaterEqual(x[j].valuation_bound(), 1)
        self.assertTrue(lift_bounds(self.carlitz, x)["x_holds"])

    def test_commutes_with_all_of_a(self):
        """Test that psi_a * x = x * phibar_a for several a in F_p[t]."""
        x = canonical_lift(self.carlitz, 4, 16)
        for a in ([0, 1], [1, 1], [1, 0, 1], [0, 1, 1, 1]):
            self.assertTrue(commutes(self.carlitz, x, a))

    def test_valuation_sequence_of_inverse(self):
        """Test v(y_l) = sum_{l < j <= 0} 2^j for psi_t = pi + tau, l = -1..-6."""
        x = canonical_lift(self.carlitz, 6, 64)
        y = series_inverse(x, prec=64)
        expected = [1, Fraction(3, 2), Fraction(7, 4), Fraction(15, 8)]
        expected += [Fraction(31, 16), Fraction(63, 32)]
        for m, value in enumerate(expected, start=1):
            self.assertEqual(y[-m].valuation(), value)
            self.assertEqual(y.z(-m).valuation(), value * 2**m)

    def test_endomorphism_compatibility(self):
        """Test that psi_t itself is an endomorphism compatible with x."""
        x = canonical_lift(self.carlitz, 3, 16)
        result = check_endomorphism(self.carlitz, x, self.carlitz.phi_t)
        self.assertEqual(result, {"commutes": True, "compatible": True})

    def test_non_endomorphism_is_reported(self):
        """Test that a polynomial not commuting with psi_t is flagged."""
        x = canonical_lift(self.carlitz, 3, 16)
        h = OrePoly(self.f2, {0: self.pi}, LOCAL)
        self.assertFalse(check_endomorphism(self.carlitz, x, h)["commutes"])

    def test_failed_solve_raises(self):
        """Test that a lift failing psi_t x = x phibar_t raises NonConvergence."""

        def lost_root(z, c, r, prec):
            return LaurentElement.zero(z.field, prec)

        with patch("drinfeld.lift.artin_schreier_root", side_effect=lost_root):
            with self.assertRaises(NonConvergence):
                canonical_lift(self.carlitz, 2, 16)
            x = canonical_lift(self.carlitz, 2, 16, check=False)
        self.assertFalse(commutes(self.carlitz, x))


class RequirementTests(SimpleTestCase):
    """
    Tests for the depth and precision rules.
    """

    def test_required_depth(self):
        """Test that J is the least J >= 1 with p^J * w >= |v|."""
        self.assertEqual(required_depth(1, -1, 2), 1)
        self.assertEqual(required_depth(1, -5, 2), 3)
        self.assertEqual(required_depth(Fraction(1, 2), -3, 3), 2)
        self.assertEqual(required_depth(float("inf"), -100, 2), 1)

    def test_required_precision(self):
        """Test that the precision is ceil(|v|) + 1 by default."""
        self.assertEqual(required_precision(-3), 4)
        self.assertEqual(required_precision(Fraction(-5, 2)), 4)


class RandomLiftSuiteTests(SimpleTestCase):
    """
    Property suite of the canonical lift on random good-reduction modules.
    """

    def setUp(self):
        reseed_random(2718)

    def test_lift_properties(self):
        """Test commutation, bounds, inversion and depth stability."""
        for _ in range(24):
            field = FieldSpecFactory()
            spec = validate(DrinfeldModuleSpecFactory(field=field))
            depth = 3 if field.p == 5 else 5
            prec = 8
            x = canonical_lift(spec, depth, prec)
            residual = commutation_residual(spec, x)
            self.assertTrue(all(c.is_zero() for c in residual.values()))
            y = series_inverse(x, prec=prec)
            bounds = lift_bounds(spec, x, y)
            self.assertTrue(bounds["x_holds"])
            self.assertTrue(bounds["inverse_holds"])
            product = series_mul(x, y)
            self.assertTrue((product[0] - 1).is_zero())
            for j in range(-depth, 0):
                self.assertTrue(product[j].is_zero())
            longer = canonical_lift(spec, depth + 1, prec)
            for j in range(-depth, 1):
                self.assertEqual(longer[j], x[j])
