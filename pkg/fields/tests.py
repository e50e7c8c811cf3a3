from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import DivisionByZero, FieldMismatch, InvalidFieldSpec

from .factories import FFElemFactory, FieldSpecFactory
from .finite import FieldSpec, format_ff


class FieldSpecTests(SimpleTestCase):
    """
    Tests for field construction and validation.
    """

    def test_prime_field(self):
        """Test that a degree-one polynomial gives the prime field."""
        field = FieldSpec(3, [0, 1])
        self.assertEqual(field.d, 1)
        self.assertEqual(field.order, 3)
        self.assertEqual(len(list(field.elements())), 3)

    def test_rejects_composite_characteristic(self):
        """Test that a composite p is rejected."""
        with self.assertRaises(InvalidFieldSpec):
            FieldSpec(4, [1, 1, 1])

    def test_rejects_reducible_polynomial(self):
        """Test that a reducible g is rejected."""
        # z^2 + 1 = (z + 1)^2 over F_2
        with self.assertRaises(InvalidFieldSpec):
            FieldSpec(2, [1, 0, 1])

    def test_rejects_non_monic_polynomial(self):
        """Test that g must be monic."""
        with self.assertRaises(InvalidFieldSpec):
            FieldSpec(3, [1, 0, 2])

    def test_equality_and_hash(self):
        """Test that fields compare by p and g."""
        self.assertEqual(FieldSpec(2, [1, 1, 1]), FieldSpec(2, [1, 1, 1]))
        self.assertEqual(hash(FieldSpec(2, [1, 1, 1])), hash(FieldSpec(2, [3, 1, 1])))
        self.assertNotEqual(FieldSpec(2, [1, 1, 1]), FieldSpec(3, [1, 0, 1]))


class FFElemArithmeticTests(SimpleTestCase):
    """
    Tests for field arithmetic on the worked values.
    """

    def setUp(self):
        self.f3 = FieldSpec(3, [0, 1])
        self.f4 = FieldSpec(2, [1, 1, 1])
        self.f9 = FieldSpec(3, [1, 0, 1])

    def test_prime_field_multiplication(self):
        """Test that 2 * 2 = 1 in F_3."""
        two = self.f3.element(2)
        self.assertEqual(two * two, 1)

    def test_reduction_by_g(self):
        """Test that z * z = z + 1 in F_4."""
        z = self.f4.generator()
        self.assertEqual(z * z, self.f4.element([1, 1]))

    def test_square_of_root_of_minus_one(self):
        """Test that z * z = 2 in F_9 = F_3[z]/(z^2 + 1)."""
        z = self.f9.generator()
        self.assertEqual(z * z, 2)

    def test_division(self):
        """Test that div(a, b) * b = a for every pair with b nonzero."""
        for a in self.f9.elements():
            for b in self.f9.elements():
                if b.is_zero():
                    continue
                self.assertEqual((a / b) * b, a)

    def test_division_by_zero(self):
        """Test that dividing by zero raises DivisionByZero."""
        with self.assertRaises(DivisionByZero):
            self.f4.one() / self.f4.zero()

    def test_field_mismatch(self):
        """Test that mixing fields raises FieldMismatch."""
        with self.assertRaises(FieldMismatch):
            self.f4.one() + self.f9.one()

    def test_format(self):
        """Test the polynomial rendering of elements."""
        self.assertEqual(format_ff(self.f4.element([1, 1])), "z + 1")
        self.assertEqual(format_ff(self.f9.element([0, 2])), "2*z")
        self.assertEqual(format_ff(self.f3.element(2)), "2")


class FrobeniusTests(SimpleTestCase):
    """
    Tests for the Frobenius group action on k.
    """

    def setUp(self):
        reseed_random(1729)
        self.f4 = FieldSpec(2, [1, 1, 1])

    def test_identity(self):
        """Test that the zeroth power is the identity."""
        for a in self.f4.elements():
            self.assertEqual(a.frobenius_pow(0), a)

    def test_square_of_z(self):
        """Test that z^2 = z + 1 in F_4."""
        z = self.f4.generator()
        self.assertEqual(z.frobenius_pow(1), self.f4.element([1, 1]))

    def test_square_root_of_z(self):
        """Test that the inverse Frobenius matches an exhaustive search."""
        z = self.f4.generator()
        roots = [b for b in self.f4.elements() if b * b == z]
        self.assertEqual(roots, [self.f4.element([1, 1])])
        self.assertEqual(z.frobenius_pow(-1), roots[0])

    def test_automorphism_property(self):
        """Test that every Frobenius power respects addition and multiplication."""
        for _ in range(40):
            a = FFElemFactory()
            b = FFElemFactory(field=a.field)
            for n in range(-3, 4):
                self.assertEqual(
                    (a + b).frobenius_pow(n), a.frobenius_pow(n) + b.frobenius_pow(n)
                )
                self.assertEqual(
                    (a * b).frobenius_pow(n), a.frobenius_pow(n) * b.frobenius_pow(n)
                )

    def test_inverse_and_period(self):
        """Test that powers n and -n cancel and that the d-th power is trivial."""
        for _ in range(40):
            a = FFElemFactory()
            d = a.field.d
            self.assertEqual(a.frobenius_pow(d), a)
            for n in range(-4, 5):
                self.assertEqual(a.frobenius_pow(n).frobenius_pow(-n), a)
                self.assertEqual(a.frobenius_pow(n), a ** (a.field.p ** (n % d)))

    def test_minimal_polynomial(self):
        """Test minimal polynomials over F_p."""
        field = FieldSpecFactory(p=2, degree=2)
        self.assertEqual(field.generator().minimal_polynomial(), [1, 1, 1])
        self.assertEqual(field.zero().minimal_polynomial(), [0, 1])
        self.assertEqual(field.one().minimal_polynomial(), [1, 1])
