from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import BadReduction, NotADrinfeldModule
from fields.finite import FieldSpec
from ore.polynomials import LOCAL, RESIDUE, OrePoly
from series.laurent import LaurentElement

from .factories import DrinfeldModuleSpecFactory
from .modules import (
    EXACT_REDUCTION,
    DrinfeldModuleSpec,
    format_polynomial,
    tate_rank_table,
    validate,
)


def pi_power(field, exponent):
    return LaurentElement.monomial(field, exponent)


class ValidateTests(SimpleTestCase):
    """
    Tests for validation and the derived invariants.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])
        self.f4 = FieldSpec(2, [1, 1, 1])

    def test_supersingular_exact_reduction(self):
        """Test psi_t = tau^2 over F_3: r=2, w infinite, pres=t, h=2."""
        spec = validate(DrinfeldModuleSpec(self.f3, {2: 1}))
        self.assertEqual(spec.r, 2)
        self.assertEqual(spec.phibar_t, OrePoly(self.f3, {2: 1}, RESIDUE))
        self.assertEqual(spec.w, EXACT_REDUCTION)
        self.assertTrue(spec.exact_reduction)
        self.assertEqual(spec.pres, [0, 1])
        self.assertEqual(spec.h, 2)

    def test_carlitz_type_deformation(self):
        """Test psi_t = pi + tau over F_2: phibar_t = tau, w = 1, h = 1."""
        spec = validate(DrinfeldModuleSpec(self.f2, {0: pi_power(self.f2, 1), 1: 1}))
        self.assertEqual(spec.r, 1)
        self.assertEqual(spec.phibar_t, OrePoly(self.f2, {1: 1}))
        self.assertEqual(spec.w, 1)
        self.assertEqual(spec.pres, [0, 1])
        self.assertEqual(spec.h, 1)
        self.assertEqual(spec.d, 1)

    def test_ordinary_over_f4(self):
        """Test psi_t = z + tau over F_4: pres = t^2 + t + 1 and h = 1."""
        z = self.f4.generator()
        spec = validate(DrinfeldModuleSpec(self.f4, {0: z, 1: 1}))
        self.assertEqual(spec.pres, [1, 1, 1])
        self.assertEqual(format_polynomial(spec.pres), "t^2 + t + 1")
        phibar_pres = spec.evaluate(spec.pres, reduced=True)
        self.assertEqual(phibar_pres, OrePoly(self.f4, {2: 1}))
        self.assertEqual(spec.h, 1)

    def test_constant_is_not_a_module(self):
        """Test that a tau-degree 0 polynomial is rejected."""
        with self.assertRaises(NotADrinfeldModule):
            validate(DrinfeldModuleSpec(self.f2, {0: pi_power(self.f2, 1)}))

    def test_non_integral_coefficient(self):
        """Test that a coefficient with negative valuation is rejected."""
        with self.assertRaises(NotADrinfeldModule):
            validate(DrinfeldModuleSpec(self.f2, {0: pi_power(self.f2, -1), 1: 1}))

    def test_bad_reduction(self):
        """Test that a leading coefficient in m_K raises BadReduction."""
        with self.assertRaises(BadReduction):
            validate(DrinfeldModuleSpec(self.f2, {1: 1, 2: pi_power(self.f2, 1)}))

    def test_psi_a_is_a_ring_homomorphism(self):
        """Test that psi_{ab} = psi_a * psi_b and psi_{a+b} = psi_a + psi_b."""
        spec = validate(DrinfeldModuleSpec(self.f2, {0: pi_power(self.f2, 1), 1: 1}))
        a, b, ab, a_plus_b = [1, 1], [0, 1, 1], [0, 1, 0, 1], [1, 0, 1]
        self.assertEqual(spec.evaluate(ab), spec.evaluate(a) * spec.evaluate(b))
        self.assertEqual(spec.evaluate(a_plus_b), spec.evaluate(a) + spec.evaluate(b))

    def test_random_modules_validate(self):
        """Test that factory modules have good reduction and 0 <= h <= r."""
        reseed_random(17)
        for _ in range(20):
            spec = validate(DrinfeldModuleSpecFactory())
            self.assertTrue(spec.good_reduction)
            self.assertGreater(spec.w, 0)
            self.assertLessEqual(0, spec.h)
            self.assertLessEqual(spec.h, spec.r)
            self.assertEqual(spec.phi_t.ring, LOCAL)


class TateRankTableTests(SimpleTestCase):
    """
    Tests for the Tate-module rank bookkeeping.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_supersingular(self):
        """Test that tau^2 with no lattice has rank 0 at (t) and 2 elsewhere."""
        table = tate_rank_table(DrinfeldModuleSpec(self.f3, {2: 1}), 0)
        self.assertEqual(table.rank_at("pres"), 0)
        self.assertEqual(table.rank_at([1, 1]), 2)

    def test_quotient_by_rank_one_lattice(self):
        """Test that pi + tau with a rank-1 lattice has ranks 1 at (t) and 2."""
        spec = DrinfeldModuleSpec(self.f2, {0: pi_power(self.f2, 1), 1: 1})
        table = tate_rank_table(spec, 1)
        self.assertEqual(table.r_phi, 2)
        self.assertEqual(table.rank_at([0, 1]), 1)
        self.assertEqual(table.rank_at([1, 1]), 2)
        self.assertEqual(table.as_dict()["pres"], "t")

    def test_ordinary_table(self):
        """Test that an ordinary module reports r - h at pres."""
        f4 = FieldSpec(2, [1, 1, 1])
        spec = DrinfeldModuleSpec(f4, {0: f4.generator(), 1: 1, 2: 1})
        table = tate_rank_table(spec, 0)
        self.assertEqual(table.rank_at("pres"), spec.r - spec.h)
        self.assertEqual(table.rank_at("other"), 2)
