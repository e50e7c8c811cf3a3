from django.test import SimpleTestCase
from factory.random import randgen, reseed_random

from fields.factories import FieldSpecFactory
from fields.finite import FieldSpec
from filtration.classes import PrincipalClass, decompose
from ore.factories import SkewLaurentPolyFactory
from ore.polynomials import SkewLaurentPoly
from series.factories import LaurentElementFactory
from series.laurent import LaurentElement

from .echelon import DROP, ELIMINATE, SCALE, skew_echelon, span_dimension


def row(field, entries):
    return PrincipalClass(
        field, {j: SkewLaurentPoly(field, f) for j, f in entries.items()}
    )


class SkewEchelonTests(SimpleTestCase):
    """
    Tests for the skew echelon form on hand-checked rows.
    """

    def setUp(self):
        self.f3 = FieldSpec(3, [0, 1])
        self.f4 = FieldSpec(2, [1, 1, 1])
        self.f9 = FieldSpec(3, [1, 0, 1])

    def test_rows_already_in_echelon_form(self):
        """Test that {1: 1} and {2: 1, 1: tau} keep pivots 1 and 2."""
        rows = [row(self.f3, {1: {0: 1}}), row(self.f3, {2: {0: 1}, 1: {1: 1}})]
        form = skew_echelon(rows)
        self.assertEqual(form.pivots, (1, 2))
        self.assertEqual(form.rank, 2)
        self.assertEqual(form.certificate, [])

    def test_scalar_multiple_is_dropped(self):
        """Test that [pi^-1] and z[pi^-1] over F_4 span a rank one module."""
        z = self.f4.generator()
        rows = [row(self.f4, {1: {0: 1}}), row(self.f4, {1: {0: z}})]
        form = skew_echelon(rows)
        self.assertEqual(form.pivots, (1,))
        kinds = [op[0] for op in form.certificate]
        self.assertEqual(kinds, [ELIMINATE, DROP])

    def test_shared_top_index_is_cleared(self):
        """Test that {2: 1} and {2: z, 1: 1} over F_9 give pivots 1 and 2."""
        z = self.f9.generator()
        rows = [row(self.f9, {2: {0: 1}}), row(self.f9, {2: {0: z}, 1: {0: 1}})]
        form = skew_echelon(rows)
        self.assertEqual(form.pivots, (1, 2))
        self.assertEqual([r.top_index() for r in form.rows], [2, 1])

    def test_negative_powers_are_normalized(self):
        """Test that a row tau^-2 [pi^-1] is scaled by tau^2."""
        form = skew_echelon([row(self.f3, {1: {-2: 1}})])
        self.assertEqual(form.certificate, [(SCALE, 0, 2)])
        self.assertEqual(form.rows[0], row(self.f3, {1: {0: 1}}))

    def test_zero_rows(self):
        """Test that zero rows are dropped and the empty input has rank 0."""
        form = skew_echelon([PrincipalClass.zero(self.f3)])
        self.assertEqual(form.rank, 0)
        self.assertEqual(form.pivots, ())
        self.assertEqual(skew_echelon([]).rank, 0)

    def test_span_dimension_of_single_row(self):
        """Test that c * tau^e [pi^-1] for e <= 3 spans 4 d dimensions."""
        self.assertEqual(span_dimension([row(self.f4, {1: {0: 1}})], 3), 8)


class EchelonOracleTests(SimpleTestCase):
    """
    Random rows checked against the F_p-dimension of their bounded spans.
    """

    def setUp(self):
        reseed_random(2718)

    def _rows(self, field):
        p = field.p
        indices = [j for j in range(1, 8) if j % p]
        rows = []
        for _ in range(randgen.randint(1, 4)):
            support = randgen.sample(indices, randgen.randint(1, 2))
            decomp = {
                j: SkewLaurentPolyFactory(
                    field=field, min_degree=0, max_degree=randgen.randint(0, 3)
                )
                for j in support
            }
            rows.append(PrincipalClass(field, decomp))
        return rows

    def _field(self):
        return FieldSpecFactory(p=randgen.choice([2, 3]), degree=randgen.choice([1, 2]))

    def test_rank_matches_span_growth(self):
        """Test that the span grows by d * rank_R per extra tau degree."""
        for _ in range(8):
            field = self._field()
            rows = self._rows(field)
            form = skew_echelon(rows)
            dims = [span_dimension(rows, D) for D in (18, 19, 20)]
            self.assertEqual(dims[1] - dims[0], field.d * form.rank)
            self.assertEqual(dims[2] - dims[1], field.d * form.rank)

    def test_pivots_strictly_increase(self):
        """Test that echelon rows have distinct top indices."""
        for _ in range(12):
            form = skew_echelon(self._rows(self._field()))
            self.assertEqual(len(set(form.pivots)), form.rank)
            self.assertEqual(sorted(form.pivots), list(form.pivots))

    def test_certificate_replays(self):
        """Test that replaying the certificate reproduces the echelon rows."""
        for _ in range(12):
            form = skew_echelon(self._rows(self._field()))
            self.assertEqual(form.replay(), form.rows)

    def test_certificate_unwinds(self):
        """Test that inverting the certificate recovers the input rows."""
        for _ in range(12):
            rows = self._rows(self._field())
            self.assertEqual(skew_echelon(rows).unwind(), rows)

    def test_distinct_j_invariants_are_independent(self):
        """Test that classes with distinct j-invariants have full rank."""
        for _ in range(8):
            field = self._field()
            p = field.p
            indices = [j for j in range(1, 8) if j % p]
            chosen = randgen.sample(indices, randgen.randint(1, 3))
            classes = []
            for j in chosen:
                exponent = -j * p ** randgen.randint(0, 1)
                xi = LaurentElement.monomial(field, exponent) + LaurentElementFactory(
                    field=field, low=exponent + 1, high=2, nonzero=False
                )
                classes.append(decompose(xi))
            self.assertEqual(skew_echelon(classes).rank, len(chosen))
