from django.test import SimpleTestCase

from fields.finite import FieldSpec

from .exceptions import (
    DrinfeldError,
    NonConvergence,
    PrecisionExhausted,
    RankInconsistent,
    ResidualTooLarge,
)
from .utils import coordinate_rows, fp_nullspace, fp_rank, fp_rref


class LinearAlgebraTests(SimpleTestCase):
    """
    Tests for the F_p linear algebra helpers.
    """

    def test_rank_mod_p(self):
        """Test that [[1, 1], [1, 2]] has rank 2 mod 3 and rank 2 mod 2 drops."""
        self.assertEqual(fp_rank([[1, 1], [1, 2]], 3), 2)
        self.assertEqual(fp_rank([[1, 1], [1, 3]], 2), 1)
        self.assertEqual(fp_rank([], 5), 0)
        self.assertEqual(fp_rank([[0, 0]], 5), 0)

    def test_rref(self):
        """Test the reduced rows and pivots of a rank one matrix."""
        rows, pivots = fp_rref([[2, 4], [1, 2]], 5)
        self.assertEqual(rows, [[1, 2]])
        self.assertEqual(pivots, (0,))

    def test_left_kernel(self):
        """Test that the relation row_0 + row_1 = row_2 is found mod 2."""
        kernel = fp_nullspace([[1, 0], [0, 1], [1, 1]], 2)
        self.assertEqual(kernel, [[1, 1, 1]])

    def test_coordinate_rows(self):
        """Test that maps flatten with d columns per position."""
        field = FieldSpec(2, [1, 1, 1])
        z = field.generator()
        columns, rows = coordinate_rows([{-1: field.one()}, {-2: z}], field.d)
        self.assertEqual(columns, [(-2, 0), (-2, 1), (-1, 0), (-1, 1)])
        self.assertEqual(rows, [[0, 0, 1, 0], [0, 1, 0, 0]])


class ExceptionTests(SimpleTestCase):
    """
    Tests for the error hierarchy.
    """

    def test_exit_codes(self):
        """Test the exit code of each error class."""
        self.assertEqual(DrinfeldError("x").exit_code, 1)
        self.assertEqual(RankInconsistent("x").exit_code, 2)
        self.assertEqual(PrecisionExhausted("x").exit_code, 3)
        self.assertEqual(NonConvergence("x").exit_code, 3)
        self.assertEqual(ResidualTooLarge("x").exit_code, 4)

    def test_context_in_message(self):
        """Test that keyword context is appended to the message."""
        error = PrecisionExhausted("too coarse", prec=3)
        self.assertEqual(str(error), "too coarse (prec=3)")
