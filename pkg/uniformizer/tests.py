import math

from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import CancellationWarning
from drinfeld.modules import DrinfeldModuleSpec, validate
from fields.finite import FieldSpec
from kummer.lattice import LatticeSpec
from series.factories import LaurentElementFactory
from series.laurent import LaurentElement

from .exponential import (
    TruncatedExponential,
    analytic_quotient,
    enumerate_lattice,
    enumeration_degree,
    lattice_basis,
)


def pi_power(field, exponent, coeff=1):
    return LaurentElement.monomial(field, exponent, coeff)


class EnumerateLatticeTests(SimpleTestCase):
    """
    Tests for the truncated lattice M_B.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.tau = validate(DrinfeldModuleSpec(self.f2, {1: 1}))
        self.lattice = LatticeSpec(self.f2, [pi_power(self.f2, -1)])

    def test_empty_lattice(self):
        """Test that the empty lattice truncates to {0}."""
        points = enumerate_lattice(self.tau, LatticeSpec(self.f2, []), 3)
        self.assertEqual(points, [LaurentElement.zero(self.f2)])

    def test_bound_two(self):
        """Test that B = 2 keeps pi^-1, pi^-2 and their sum."""
        points = enumerate_lattice(self.tau, self.lattice, 2)
        expected = {
            LaurentElement.zero(self.f2),
            pi_power(self.f2, -1),
            pi_power(self.f2, -2),
            pi_power(self.f2, -1) + pi_power(self.f2, -2),
        }
        self.assertEqual(len(points), 4)
        self.assertEqual(set(points), expected)

    def test_bound_below_generators(self):
        """Test that B below every |v(m_i)| leaves only zero."""
        lattice = LatticeSpec(self.f2, [pi_power(self.f2, -3)])
        points = enumerate_lattice(self.tau, lattice, 1)
        self.assertEqual(points, [LaurentElement.zero(self.f2)])

    def test_closed_under_addition(self):
        """Test that M_4 has 8 points and is an additive group."""
        points = enumerate_lattice(self.tau, self.lattice, 4)
        self.assertEqual(len(points), 8)
        members = set(points)
        for a in points:
            for b in points:
                self.assertIn(a + b, members)

    def test_enumeration_degree(self):
        """Test that D(B) is the least D with p^(r D) min |v| >= B."""
        self.assertEqual(enumeration_degree(self.tau, self.lattice, 1), 0)
        self.assertEqual(enumeration_degree(self.tau, self.lattice, 2), 1)
        self.assertEqual(enumeration_degree(self.tau, self.lattice, 5), 3)

    def test_cancellation_is_flagged(self):
        """Test that pi^-2 and pi^-2 + pi^-1 over F_3 warn about cancellation."""
        f3 = FieldSpec(3, [0, 1])
        spec = validate(DrinfeldModuleSpec(f3, {1: 1}))
        m2 = pi_power(f3, -2) + pi_power(f3, -1)
        lattice = LatticeSpec(f3, [pi_power(f3, -2), m2])
        with self.assertWarns(CancellationWarning):
            basis = lattice_basis(spec, lattice, 2)
        self.assertFalse(basis.certified)
        self.assertEqual(basis.valuations, (-2, -1))
        self.assertEqual(len(basis.points()), 9)


class TruncatedExponentialTests(SimpleTestCase):
    """
    Tests for e_B on psi_t = pi + tau over F_2 with M = A pi^-1.
    """

    def setUp(self):
        reseed_random(97)
        self.field = FieldSpec(2, [0, 1])
        self.spec = validate(
            DrinfeldModuleSpec(self.field, {0: pi_power(self.field, 1), 1: 1})
        )
        self.lattice = LatticeSpec(self.field, [pi_power(self.field, -1)])

    def exponential(self, bound):
        basis = lattice_basis(self.spec, self.lattice, bound)
        return TruncatedExponential(self.spec, basis, prec=128)

    def test_single_factor(self):
        """Test that B = 1 gives e = 1 + pi tau."""
        e = self.exponential(1)
        self.assertEqual(e.degree, 1)
        self.assertEqual(e.coeffs[0], LaurentElement.one(self.field))
        self.assertEqual(e.coeffs[1], pi_power(self.field, 1))

    def test_degree_is_dimension(self):
        """Test that deg e_B = dim M_B."""
        for bound in (1, 2, 4):
            e = self.exponential(bound)
            self.assertEqual(e.degree, e.basis.dimension)

    def test_kernel(self):
        """Test that e_B vanishes on every point of M_B."""
        for bound in (1, 2, 4):
            e = self.exponential(bound)
            for m in e.points():
                self.assertTrue(e.apply(m).is_zero())

    def test_additive(self):
        """Test that e_B(a + b) = e_B(a) + e_B(b)."""
        e = self.exponential(2)
        for _ in range(10):
            a = LaurentElementFactory(field=self.field, low=-3, high=3)
            b = LaurentElementFactory(field=self.field, low=-3, high=3)
            self.assertTrue((e.apply(a + b) - e.apply(a) - e.apply(b)).is_zero())


class AnalyticQuotientTests(SimpleTestCase):
    """
    Tests for phi_t solved from e_B * psi_t = phi_t * e_B.
    """

    def setUp(self):
        self.field = FieldSpec(2, [0, 1])
        self.spec = validate(
            DrinfeldModuleSpec(self.field, {0: pi_power(self.field, 1), 1: 1})
        )
        self.lattice = LatticeSpec(self.field, [pi_power(self.field, -1)])

    def test_empty_lattice_is_identity(self):
        """Test that M = {} gives e = 1, phi = psi and an infinite residual."""
        result = analytic_quotient(self.spec, LatticeSpec(self.field, []), 2)
        self.assertEqual(result.exponential.degree, 0)
        self.assertEqual(result.phi_t, self.spec.phi_t)
        self.assertEqual(result.residual_valuation, math.inf)
        self.assertEqual(result.tail_valuation, math.inf)

    def test_single_factor(self):
        """Test that B = 1 gives residual valuation 5."""
        result = analytic_quotient(self.spec, self.lattice, 1, prec=128)
        self.assertEqual(result.residual_valuation, 5)
        self.assertEqual(result.phi_t.coefficient(0), pi_power(self.field, 1))
        self.assertEqual(result.rank, 2)
        self.assertTrue(result.certified)

    def test_residual_improves_with_bound(self):
        """Test that the residual valuation strictly increases for B = 1, 2, 4."""
        residuals = []
        for bound in (1, 2, 4):
            result = analytic_quotient(self.spec, self.lattice, bound, prec=128)
            residuals.append(result.residual_valuation)
        self.assertLess(residuals[0], residuals[1])
        self.assertLess(residuals[1], residuals[2])

    def test_constant_coefficient(self):
        """Test that phi_t and psi_t share their constant coefficient."""
        for bound in (1, 2, 4):
            result = analytic_quotient(self.spec, self.lattice, bound, prec=128)
            self.assertEqual(
                result.phi_t.coefficient(0), self.spec.phi_t.coefficient(0)
            )

    def test_rank_law(self):
        """Test that phi_t has rank r(psi) + rank_A(M)."""
        result = analytic_quotient(self.spec, self.lattice, 4, prec=128)
        self.assertEqual(result.rank, self.spec.r + 1)
        self.assertGreater(result.tail_valuation, 0)
