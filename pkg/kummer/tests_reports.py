from django.test import SimpleTestCase

from core.exceptions import RankInconsistent
from drinfeld.modules import DrinfeldModuleSpec, validate
from fields.finite import FieldSpec
from series.laurent import LaurentElement

from .lattice import LatticeSpec
from .reports import (
    FINITE,
    FREE_RANK_D,
    GRJK_RULE,
    ZERO,
    filtration_table,
    inertia_report,
    jump_breaks,
    sublattice_report,
)


def pi_power(field, exponent, coeff=1):
    return LaurentElement.monomial(field, exponent, coeff)


class FiltrationTableTests(SimpleTestCase):
    """
    Tests for the filtration ranks read off the breaks.
    """

    def test_two_breaks(self):
        """Test the rows for S = {1, 2} and d = 1."""
        rows = filtration_table([1, 2], 1)
        table = [(row.i, row.rank, row.classification) for row in rows]
        self.assertEqual(
            table,
            [(0, 2, FINITE), (1, 2, FREE_RANK_D), (2, 1, FREE_RANK_D), (3, 0, ZERO)],
        )

    def test_no_breaks(self):
        """Test that an empty S gives zero rows for i = 0 and i = 1."""
        table = filtration_table([], 2)
        self.assertEqual([row.rank for row in table], [0, 0])
        self.assertFalse(table[0].image_infinite)


class TauSquaredReportTests(SimpleTestCase):
    """
    psi_t = tau^2 over F_3 with M generated by pi^-1 and pi^-2 + pi^-3.
    """

    def setUp(self):
        self.field = FieldSpec(3, [0, 1])
        self.spec = validate(DrinfeldModuleSpec(self.field, {2: 1}))
        m2 = pi_power(self.field, -2) + pi_power(self.field, -3)
        self.lattice = LatticeSpec(self.field, [pi_power(self.field, -1), m2])
        self.report = inertia_report(self.spec, self.lattice)

    def test_structure(self):
        """Test the breaks, rank, conductor and openness."""
        self.assertEqual(self.report.S, [1, 2])
        self.assertEqual(self.report.rank_R, 2)
        self.assertEqual(self.report.conductor, 2)
        self.assertEqual(self.report.image_rank, 2)
        self.assertTrue(self.report.open)
        self.assertEqual(self.report.grJK_rule, GRJK_RULE)

    def test_graded_pieces(self):
        """Test that gr^i has rank 0, 1, 1, 0 for i <= 3 over F_3."""
        self.assertEqual(self.report.graded_ranks, [0, 1, 1, 0])

    def test_filtration(self):
        """Test the filtration ranks 2, 2, 1, 0."""
        rows = self.report.filtration
        table = [(row.i, row.rank, row.classification) for row in rows]
        self.assertEqual(
            table,
            [(0, 2, FINITE), (1, 2, FREE_RANK_D), (2, 1, FREE_RANK_D), (3, 0, ZERO)],
        )

    def test_bounds(self):
        """Test that one j-invariant among two generators gives a strict bound."""
        bounds = self.report.bounds
        self.assertEqual(bounds["j_set_of_generators"], [1])
        self.assertTrue(bounds["iRankBound_ok"])
        self.assertTrue(bounds["iRankBound_strict"])
        self.assertFalse(bounds["iOpenness_sufficient"])
        self.assertEqual(bounds["iMJump_breaks"], [1])
        self.assertTrue(bounds["iMJump_ok"])
        self.assertTrue(bounds["j_preserved"])

    def test_tate_ranks(self):
        """Test that r_phi = r_psi + rank M and the rank at pres drops by h."""
        self.assertEqual(self.report.tate.r_psi, 2)
        self.assertEqual(self.report.tate.r_phi, 4)
        self.assertEqual(self.report.tate.rank_at("pres"), 2)
        self.assertEqual(self.report.local_conductors["pres"], 2)

    def test_declared_rank_below_rank_R(self):
        """Test that a declared rank of 1 contradicts rank_R = 2."""
        lattice = LatticeSpec(self.field, list(self.lattice), declared_rank=1)
        with self.assertRaises(RankInconsistent):
            inertia_report(self.spec, lattice)

    def test_sub_lattice_is_monotone(self):
        """Test that dropping a generator does not raise the conductor."""
        for dropped in ([0], [1]):
            sub = sublattice_report(self.spec, self.lattice, dropped)
            self.assertLessEqual(sub.conductor, self.report.conductor)
            self.assertLessEqual(sub.rank_R, self.report.rank_R)
            self.assertTrue(set(sub.S) <= set(self.report.S))

    def test_dropping_everything(self):
        """Test that the empty lattice has trivial image."""
        empty = sublattice_report(self.spec, self.lattice, [0, 1])
        self.assertEqual(empty.S, [])
        self.assertEqual(empty.conductor, 0)
        self.assertTrue(empty.open)


class FourElementFieldReportTests(SimpleTestCase):
    """
    psi_t = tau over F_4 with M generated by pi^-1 and z pi^-1.
    """

    def setUp(self):
        self.field = FieldSpec(2, [1, 1, 1])
        spec = DrinfeldModuleSpec(self.field, {1: 1})
        z = self.field.generator()
        lattice = LatticeSpec(
            self.field, [pi_power(self.field, -1), pi_power(self.field, -1, z)]
        )
        self.report = inertia_report(spec, lattice)

    def test_rank_one_image(self):
        """Test that the image has R-rank 1 and is not open."""
        self.assertEqual(self.report.rank_R, 1)
        self.assertEqual(self.report.S, [1])
        self.assertEqual(self.report.conductor, 1)
        self.assertEqual(self.report.image_rank, 2)
        self.assertFalse(self.report.open)

    def test_graded_pieces_scale_with_d(self):
        """Test that gr^1 has rank d = 2 and gr^0, gr^2 vanish over F_4."""
        self.assertEqual(self.report.graded_ranks, [0, 2, 0])

    def test_bounds(self):
        """Test that equal j-invariants do not force openness."""
        self.assertEqual(self.report.bounds["j_set_of_generators"], [1])
        self.assertFalse(self.report.bounds["iRankBound_strict"])
        self.assertFalse(self.report.bounds["iOpenness_sufficient"])


class NineElementFieldReportTests(SimpleTestCase):
    """
    psi_t = tau over F_9 with M generated by pi^-2 and z pi^-2 + pi^-1.
    """

    def setUp(self):
        self.field = FieldSpec(3, [1, 0, 1])
        spec = DrinfeldModuleSpec(self.field, {1: 1})
        z = self.field.generator()
        m2 = pi_power(self.field, -2, z) + pi_power(self.field, -1)
        self.lattice = LatticeSpec(self.field, [pi_power(self.field, -2), m2])
        self.report = inertia_report(spec, self.lattice)

    def test_filtration_ranks(self):
        """Test the breaks {1, 2} and the ranks 4, 4, 2, 0."""
        self.assertEqual(self.report.S, [1, 2])
        self.assertEqual(self.report.d, 2)
        self.assertEqual([row.rank for row in self.report.filtration], [4, 4, 2, 0])
        self.assertTrue(self.report.open)

    def test_jump_breaks(self):
        """Test that both generators of valuation -2 mark the break 2."""
        self.assertEqual(jump_breaks(self.lattice, 3), [2])


class DeformedReportTests(SimpleTestCase):
    """
    psi_t = pi + tau over F_2 with M generated by pi^-1.
    """

    def test_rank_one_lattice_is_open(self):
        """Test that a single generator gives an open image with S = {1}."""
        field = FieldSpec(2, [0, 1])
        spec = DrinfeldModuleSpec(field, {0: pi_power(field, 1), 1: 1})
        report = inertia_report(spec, LatticeSpec(field, [pi_power(field, -1)]))
        self.assertEqual(report.S, [1])
        self.assertTrue(report.open)
        self.assertTrue(report.bounds["rank_one_open"])
        self.assertEqual(report.w, 1)
