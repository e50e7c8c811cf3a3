from fractions import Fraction

from django.test import SimpleTestCase
from factory.random import reseed_random

from core.exceptions import ZeroClass
from fields.finite import FieldSpec
from ore.factories import OrePolyFactory, SkewLaurentPolyFactory
from ore.polynomials import SkewLaurentPoly
from series.factories import LaurentElementFactory
from series.laurent import LaurentElement

from .classes import PrincipalClass, decompose, graded_rank, split_index


def pi_power(field, exponent, coeff=1):
    return LaurentElement.monomial(field, exponent, coeff)


class DecomposeTests(SimpleTestCase):
    """
    Tests for the decomposition over the basis [pi^-j].
    """

    def setUp(self):
        reseed_random(41)
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_split_index(self):
        """Test that 6 = 2 * 3 and 1/2 = 1 * 2^-1."""
        self.assertEqual(split_index(6, 3), (2, 1))
        self.assertEqual(split_index(Fraction(1, 2), 2), (1, -1))

    def test_pure_power(self):
        """Test that pi^-6 decomposes as tau on [pi^-2] when p = 3."""
        c = decompose(pi_power(self.f3, -6))
        self.assertEqual(c.decomp, {2: SkewLaurentPoly(self.f3, {1: 1})})

    def test_grouping_by_odd_part(self):
        """Test that pi^-1 + pi^-2 + pi^-3 gives {1: 1 + tau, 3: 1} when p = 2."""
        xi = pi_power(self.f2, -1) + pi_power(self.f2, -2) + pi_power(self.f2, -3)
        c = decompose(xi)
        self.assertEqual(c.coefficient(1), SkewLaurentPoly(self.f2, {0: 1, 1: 1}))
        self.assertEqual(c.coefficient(3), SkewLaurentPoly(self.f2, {0: 1}))
        self.assertEqual(c.indices(), [1, 3])

    def test_fractional_exponent(self):
        """Test that pi^{-1/2} decomposes as tau^-1 on [pi^-1] when p = 2."""
        c = decompose(pi_power(self.f2, -1).p_power(-1))
        self.assertEqual(c.decomp, {1: SkewLaurentPoly(self.f2, {-1: 1})})

    def test_integral_part_is_ignored(self):
        """Test that elements of O have the zero class."""
        self.assertTrue(decompose(pi_power(self.f3, 2) + 1).is_zero())

    def test_round_trip(self):
        """Test that decompose(reconstruct(c)) = c."""
        for _ in range(20):
            xi = LaurentElementFactory(low=-8, high=3)
            c = decompose(xi)
            self.assertEqual(decompose(c.reconstruct()), c)
            self.assertEqual(c.reconstruct(), xi.principal_part())

    def test_linearity(self):
        """Test that decompose is additive."""
        for _ in range(20):
            a = LaurentElementFactory(low=-8, high=3)
            b = LaurentElementFactory(field=a.field, low=-8, high=3)
            self.assertEqual(decompose(a + b), decompose(a) + decompose(b))

    def test_equivariance(self):
        """Test that decompose(g(xi)) = g * decompose(xi) for g in k[tau, tau^-1]."""
        for _ in range(20):
            xi = LaurentElementFactory(low=-6, high=2)
            g = SkewLaurentPolyFactory(field=xi.field, max_degree=2)
            self.assertEqual(decompose(g.apply(xi)), g * decompose(xi))


class FiltrationTests(SimpleTestCase):
    """
    Tests for W-membership, the j-invariant and graded pieces.
    """

    def setUp(self):
        reseed_random(43)
        self.f2 = FieldSpec(2, [0, 1])
        self.f3 = FieldSpec(3, [0, 1])

    def test_membership_by_support(self):
        """Test membership of [pi^-1] and of [pi^{-1/2}] in W_1 and W_2."""
        self.assertTrue(decompose(pi_power(self.f2, -1)).w_membership(2))
        half = decompose(pi_power(self.f2, Fraction(-1, 2)))
        self.assertFalse(half.w_membership(1))
        self.assertTrue(half.w_membership(2))
        self.assertEqual(half.w_level(), 2)

    def test_zero_class(self):
        """Test that the zero class lies in W_0 and has no j-invariant."""
        zero = PrincipalClass.zero(self.f2)
        self.assertTrue(zero.w_membership(0))
        self.assertEqual(zero.w_level(), 0)
        with self.assertRaises(ZeroClass):
            zero.j_invariant()

    def test_j_invariant(self):
        """Test that j([pi^-6]) = 2 and j([pi^-2 + pi^-3]) = 1 when p = 3."""
        self.assertEqual(decompose(pi_power(self.f3, -6)).j_invariant(), 2)
        m = pi_power(self.f3, -2) + pi_power(self.f3, -3)
        self.assertEqual(decompose(m).j_invariant(), 1)

    def test_j_invariant_under_r_action(self):
        """Test that j(f(m)) = j(m) for nonzero f in k[tau]."""
        for _ in range(20):
            m = LaurentElementFactory(low=-7, high=2)
            if m.valuation() >= 0:
                continue
            f = OrePolyFactory(field=m.field, max_degree=2)
            self.assertEqual(
                decompose(f.apply(m)).j_invariant(), decompose(m).j_invariant()
            )

    def test_left_action_keeps_representative(self):
        """Test that acting on a class acts on its representative."""
        m = pi_power(self.f3, -2) + pi_power(self.f3, -3)
        tau = SkewLaurentPoly(self.f3, {1: 1})
        c = tau * decompose(m)
        self.assertEqual(c.representative, m.p_power(1))
        self.assertEqual(c, decompose(m.p_power(1)))

    def test_graded_rank(self):
        """Test that gr^i has rank 1 for p not dividing i and 0 otherwise."""
        self.assertEqual([graded_rank(i, 3) for i in range(7)], [0, 1, 1, 0, 1, 1, 0])
