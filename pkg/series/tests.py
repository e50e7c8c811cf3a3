from fractions import Fraction

from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import (
    DivisionByZero,
    FieldMismatch,
    PrecisionExhausted,
    ZeroValuation,
)
from fields.factories import FieldSpecFactory
from fields.finite import FieldSpec

from .factories import LaurentElementFactory
from .laurent import LaurentElement, artin_schreier_root, unit_root


def pi_power(field, exponent, coeff=1):
    return LaurentElement.monomial(field, exponent, coeff)


class LaurentArithmeticTests(SimpleTestCase):
    """
    Tests for ring operations and precision propagation.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_product_of_inverse_monomials(self):
        """Test that pi * pi^-1 = 1 exactly."""
        product = pi_power(self.f3, 1) * pi_power(self.f3, -1)
        self.assertEqual(product, LaurentElement.one(self.f3))
        self.assertTrue(product.is_exact())

    def test_characteristic_two_cancellation(self):
        """Test that (pi^-1 + 1) + pi^-1 = 1 over F_2."""
        a = pi_power(self.f2, -1) + 1
        self.assertEqual(a + pi_power(self.f2, -1), LaurentElement.one(self.f2))

    def test_renormalization_to_level_zero(self):
        """Test that pi^{1/2} * pi^{1/2} = pi at level 0."""
        half = pi_power(self.f2, Fraction(1, 2))
        self.assertEqual(half.level, 1)
        product = half * half
        self.assertEqual(product, pi_power(self.f2, 1))
        self.assertEqual(product.level, 0)

    def test_multiplication_precision_rule(self):
        """Test that prec(ab) = min(prec(a) + v(b), prec(b) + v(a))."""
        a = (pi_power(self.f3, -1) + 1).truncate(5)
        b = (pi_power(self.f3, 2) + pi_power(self.f3, 3)).truncate(7)
        self.assertEqual((a * b).precision, min(5 + 2, 7 - 1))

    def test_sum_without_known_terms_below_zero(self):
        """Test that a sum losing every term at negative precision is refused."""
        a = (pi_power(self.f2, -3) + pi_power(self.f2, -2)).truncate(-1)
        with self.assertRaises(PrecisionExhausted):
            a - pi_power(self.f2, -3) - pi_power(self.f2, -2)

    def test_field_mismatch(self):
        """Test that mixing fields raises FieldMismatch."""
        with self.assertRaises(FieldMismatch):
            LaurentElement.one(self.f2) + LaurentElement.one(self.f3)

    def test_string_rendering(self):
        """Test the human-readable rendering."""
        a = (pi_power(self.f2, -1) + pi_power(self.f2, Fraction(1, 2))).truncate(4)
        self.assertEqual(str(a), "pi^-1 + pi^(1/2) + O(pi^4)")
        self.assertEqual(str(LaurentElement.zero(self.f2)), "0")


class LaurentInverseTests(SimpleTestCase):
    """
    Tests for multiplicative inverses.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.f4 = FieldSpec(2, [1, 1, 1])

    def test_inverse_of_uniformizer(self):
        """Test that l_inv(pi) = pi^-1."""
        self.assertEqual(pi_power(self.f2, 1).inverse(), pi_power(self.f2, -1))

    def test_geometric_series(self):
        """Test that l_inv(1 + pi) = 1 + pi + pi^2 + pi^3 + O(pi^4)."""
        a = LaurentElement.one(self.f2) + pi_power(self.f2, 1)
        expected = LaurentElement(self.f2, {0: 1, 1: 1, 2: 1, 3: 1}, prec=4)
        self.assertEqual(a.inverse(prec=4), expected)

    def test_inverse_of_constant(self):
        """Test that l_inv(c) = c^-1 for c in k."""
        z = self.f4.generator()
        inv = LaurentElement.constant(self.f4, z).inverse()
        self.assertEqual(inv, LaurentElement.constant(self.f4, z.inverse()))

    def test_inverse_of_zero(self):
        """Test that inverting zero raises DivisionByZero."""
        with self.assertRaises(DivisionByZero):
            LaurentElement.zero(self.f2).inverse()

    def test_exact_series_needs_cap(self):
        """Test that an exact non-monomial cannot be inverted without a cap."""
        with self.assertRaises(PrecisionExhausted):
            (LaurentElement.one(self.f2) + pi_power(self.f2, 1)).inverse()

    def test_inverse_round_trip(self):
        """Test that a * l_inv(a) = 1 up to the propagated precision."""
        reseed_random(7)
        for _ in range(25):
            a = LaurentElementFactory(low=-3, high=5)
            product = a * a.inverse(prec=12)
            self.assertTrue((product - 1).is_zero())
            if not a.is_monomial():
                self.assertEqual(product.precision, 12 + a.valuation())


class PPowerTests(SimpleTestCase):
    """
    Tests for the Frobenius power a -> a^{p^n} on K^perf.
    """

    def setUp(self):
        reseed_random(11)
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_positive_power(self):
        """Test that (pi^-1)^3 = pi^-3 over F_3."""
        self.assertEqual(pi_power(self.f3, -1).p_power(1), pi_power(self.f3, -3))

    def test_negative_power(self):
        """Test that pi^{1/2} is the square root of pi at level 1."""
        root = pi_power(self.f2, 1).p_power(-1)
        self.assertEqual(root, pi_power(self.f2, Fraction(1, 2)))
        self.assertEqual(root.level, 1)

    def test_bijectivity(self):
        """Test that p_power(p_power(a, -2), 2) = a."""
        for _ in range(25):
            a = LaurentElementFactory(prec=8)
            self.assertEqual(a.p_power(-2).p_power(2), a)

    def test_ring_homomorphism(self):
        """Test that p_power respects sums, products and scales valuations."""
        for _ in range(25):
            a = LaurentElementFactory()
            b = LaurentElementFactory(field=a.field)
            p = a.field.p
            for n in (-2, -1, 1, 2):
                self.assertEqual((a + b).p_power(n), a.p_power(n) + b.p_power(n))
                self.assertEqual((a * b).p_power(n), a.p_power(n) * b.p_power(n))
                self.assertEqual(
                    a.p_power(n).valuation(), a.valuation() * Fraction(p) ** n
                )


class ValuationTests(SimpleTestCase):
    """
    Tests for valuations and principal parts.
    """

    def setUp(self):
        reseed_random(3)
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_valuation(self):
        """Test that v(pi^-2 + pi^3) = -2."""
        a = pi_power(self.f3, -2) + pi_power(self.f3, 3)
        self.assertEqual(a.valuation(), -2)

    def test_fractional_valuation(self):
        """Test that v((pi^-1)^{1/2}) = -1/2."""
        self.assertEqual(pi_power(self.f2, -1).p_power(-1).valuation(), Fraction(-1, 2))

    def test_zero_has_no_valuation(self):
        """Test that the valuation of zero raises ZeroValuation."""
        with self.assertRaises(ZeroValuation):
            LaurentElement.zero(self.f2).valuation()

    def test_principal_part(self):
        """Test that principal_part(pi^-1 + 1 + pi) = pi^-1."""
        a = pi_power(self.f3, -1) + 1 + pi_power(self.f3, 1)
        self.assertEqual(a.principal_part(), pi_power(self.f3, -1))

    def test_principal_part_needs_nonnegative_precision(self):
        """Test that the class mod O is undetermined below precision 0."""
        a = pi_power(self.f3, -3).truncate(-1)
        with self.assertRaises(PrecisionExhausted):
            a.principal_part()

    def test_valuation_laws(self):
        """Test v(ab) = v(a) + v(b) and the ultrametric inequality."""
        for _ in range(40):
            a = LaurentElementFactory()
            b = LaurentElementFactory(field=a.field)
            self.assertEqual((a * b).valuation(), a.valuation() + b.valuation())
            total = a + b
            if total.is_zero():
                continue
            self.assertGreaterEqual(
                total.valuation(), min(a.valuation(), b.valuation())
            )
            if a.valuation() != b.valuation():
                self.assertEqual(
                    total.valuation(), min(a.valuation(), b.valuation())
                )

    def test_principal_part_ignores_integral_terms(self):
        """Test that adding an integral element leaves the principal part fixed."""
        for _ in range(25):
            a = LaurentElementFactory()
            u = LaurentElementFactory(field=a.field, low=0, high=5)
            self.assertEqual((a + u).principal_part(), a.principal_part())


class HenselSolveTests(SimpleTestCase):
    """
    Tests for the Newton and fixed-point solvers.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.field = FieldSpecFactory(p=3, degree=2)

    def test_unit_root(self):
        """Test that the Newton root solves x^n = y with v(x - 1) >= v(y - 1)."""
        y = LaurentElement.one(self.field) + pi_power(self.field, 2, [1, 1])
        x = unit_root(y, 8, 20)
        self.assertTrue((x.power(8, 20) - y).is_zero())
        self.assertGreaterEqual((x - 1).valuation(), 2)

    def test_artin_schreier_root(self):
        """Test that x = pi + x^2 is solved by pi + pi^2 + pi^4 + ..."""
        pi = pi_power(self.f2, 1)
        x = artin_schreier_root(pi, LaurentElement.one(self.f2), 1, 16)
        expected = LaurentElement(self.f2, {1: 1, 2: 1, 4: 1}, prec=16)
        self.assertTrue((x - pi - x * x).is_zero())
        self.assertEqual(x.valuation(), 1)
        self.assertEqual(x.truncate(5), expected.truncate(5))
