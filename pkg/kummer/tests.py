from django.test import SimpleTestCase
from factory.random import randgen, reseed_random

from core.exceptions import InvalidLattice, PrecisionExhausted, RankInconsistent
from drinfeld.factories import DrinfeldModuleSpecFactory
from drinfeld.modules import DrinfeldModuleSpec, validate
from fields.factories import FieldSpecFactory
from fields.finite import FieldSpec
from filtration.classes import decompose
from series.factories import LaurentElementFactory
from series.laurent import LaurentElement

from .chi import build_Mbar, chi_class, chi_inverse_class
from .lattice import LatticeSpec, check_independence


def pi_power(field, exponent, coeff=1):
    return LaurentElement.monomial(field, exponent, coeff)


def negative_element(field):
    """Random element of K with negative valuation."""
    while True:
        xi = LaurentElementFactory(field=field, low=-4, high=3)
        if xi.valuation() < 0:
            return xi


class LatticeSpecTests(SimpleTestCase):
    """
    Tests for lattice validation and the bounded relation search.
    """

    def setUp(self):
        self.f2 = FieldSpec(2, [0, 1])
        self.tau = validate(DrinfeldModuleSpec(self.f2, {1: 1}))

    def test_generators_need_negative_valuation(self):
        """Test that an integral generator is rejected."""
        with self.assertRaises(InvalidLattice):
            LatticeSpec(self.f2, [pi_power(self.f2, 1)])

    def test_generators_lie_in_k(self):
        """Test that a generator with a fractional exponent is rejected."""
        with self.assertRaises(InvalidLattice):
            LatticeSpec(self.f2, [pi_power(self.f2, -1).p_power(-1)])

    def test_defaults(self):
        """Test that declared rank defaults to the number of generators."""
        lattice = LatticeSpec(self.f2, [pi_power(self.f2, -1), pi_power(self.f2, -3)])
        self.assertEqual(lattice.declared_rank, 2)
        self.assertEqual(lattice.independence_bound, 2)
        self.assertEqual(lattice.max_abs_valuation(), 3)

    def test_independent_generators(self):
        """Test that pi^-1 and pi^-3 are independent to degree 2 under tau."""
        lattice = LatticeSpec(self.f2, [pi_power(self.f2, -1), pi_power(self.f2, -3)])
        check = check_independence(self.tau, lattice)
        self.assertTrue(check.independent)
        self.assertEqual(check.vectors, 6)
        self.assertEqual(check.bound, 2)

    def test_relation_contradicts_full_rank(self):
        """Test that pi^-2 = psi_t(pi^-1) raises RankInconsistent."""
        lattice = LatticeSpec(self.f2, [pi_power(self.f2, -1), pi_power(self.f2, -2)])
        with self.assertRaises(RankInconsistent):
            check_independence(self.tau, lattice)

    def test_relation_allowed_below_full_rank(self):
        """Test that a declared rank below n tolerates relations."""
        generators = [pi_power(self.f2, -1), pi_power(self.f2, -2)]
        lattice = LatticeSpec(self.f2, generators, declared_rank=1)
        self.assertFalse(check_independence(self.tau, lattice).independent)

    def test_declared_rank_above_generator_count(self):
        """Test that declaring more rank than generators is refused."""
        lattice = LatticeSpec(self.f2, [pi_power(self.f2, -1)], declared_rank=2)
        with self.assertRaises(RankInconsistent):
            check_independence(self.tau, lattice)


class ChiInverseTests(SimpleTestCase):
    """
    Tests for chi^-1 and chi on hand-checkable modules.
    """

    def setUp(self):
        reseed_random(61)
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])
        self.carlitz = validate(
            DrinfeldModuleSpec(self.f2, {0: pi_power(self.f2, 1), 1: 1})
        )

    def test_identity_for_exact_reduction(self):
        """Test that chi^-1 is the identity on classes when psi = phibar."""
        spec = DrinfeldModuleSpec(self.f3, {2: 1})
        for _ in range(10):
            xi = negative_element(self.f3)
            self.assertEqual(chi_inverse_class(spec, xi), decompose(xi))

    def test_uniformizer_class_is_fixed(self):
        """Test that chi^-1([pi^-1]) = [pi^-1] for psi_t = pi + tau."""
        xi = pi_power(self.f2, -1)
        self.assertEqual(chi_inverse_class(self.carlitz, xi), decompose(xi))

    def test_precision_below_requirement(self):
        """Test that a working precision below ceil(|v|) + 1 is refused."""
        with self.assertRaises(PrecisionExhausted):
            chi_inverse_class(self.carlitz, pi_power(self.f2, -5), prec=3)

    def test_depth_below_requirement(self):
        """Test that a tau-depth with p^J * w < |v| is refused, not truncated."""
        xi = pi_power(self.f2, -15)
        with self.assertRaises(PrecisionExhausted) as ctx:
            chi_inverse_class(self.carlitz, xi, depth=1)
        self.assertEqual(ctx.exception.context["required"], 4)
        self.assertEqual(
            chi_inverse_class(self.carlitz, xi, depth=4),
            chi_inverse_class(self.carlitz, xi),
        )

    def test_integral_element_has_zero_class(self):
        """Test that chi^-1 of an integral element is the zero class."""
        self.assertTrue(chi_inverse_class(self.carlitz, pi_power(self.f2, 2)).is_zero())

    def test_build_rows(self):
        """Test that Mbar of the empty lattice has no rows."""
        self.assertEqual(build_Mbar(self.carlitz, LatticeSpec(self.f2, [])), [])

    def test_build_rows_for_example_lattice(self):
        """Test the rows {1: 1} and {2: 1, 1: tau} for tau^2 over F_3."""
        spec = DrinfeldModuleSpec(self.f3, {2: 1})
        m2 = pi_power(self.f3, -2) + pi_power(self.f3, -3)
        rows = build_Mbar(spec, LatticeSpec(self.f3, [pi_power(self.f3, -1), m2]))
        self.assertEqual([row.indices() for row in rows], [[1], [1, 2]])
        self.assertEqual(str(rows[1]), "(1)[pi^-2] + (tau)[pi^-1]")


class ChiSuiteTests(SimpleTestCase):
    """
    Property suite of chi on random modules and classes.
    """

    def setUp(self):
        reseed_random(1729)

    def _module(self):
        p, degree = randgen.choice([2, 3]), randgen.choice([1, 2])
        field = FieldSpecFactory(p=p, degree=degree)
        rank = randgen.choice([1, 2])
        return validate(DrinfeldModuleSpecFactory(field=field, rank=rank))

    def test_chi_inverts_chi_inverse(self):
        """Test that chi(chi^-1([xi])) = [xi]."""
        for _ in range(10):
            spec = self._module()
            xi = negative_element(spec.field)
            eta = chi_inverse_class(spec, xi)
            self.assertEqual(chi_class(spec, eta), decompose(xi))

    def test_lower_filtration_difference(self):
        """Test that chi^-1([xi]) - [xi] lies in W_i when v(xi) = -i."""
        for _ in range(10):
            spec = self._module()
            xi = negative_element(spec.field)
            i = int(-xi.valuation())
            difference = chi_inverse_class(spec, xi) - decompose(xi)
            self.assertTrue(difference.w_membership(i))

    def test_j_invariant_preserved(self):
        """Test that j(chi^-1([m])) = j([m])."""
        for _ in range(10):
            spec = self._module()
            m = negative_element(spec.field)
            self.assertEqual(
                chi_inverse_class(spec, m).j_invariant(), decompose(m).j_invariant()
            )

    def test_a_linearity(self):
        """Test that chi^-1([psi_t(xi)]) = phibar_t * chi^-1([xi])."""
        for _ in range(6):
            spec = self._module()
            xi = negative_element(spec.field)
            left = chi_inverse_class(spec, spec.phi_t.apply(xi))
            right = spec.phibar_t * chi_inverse_class(spec, xi)
            self.assertEqual(left, right)
