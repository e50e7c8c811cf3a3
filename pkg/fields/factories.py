import factory
from factory import fuzzy
from factory.random import randgen

from .finite import FFElem, FieldSpec

# Known irreducible polynomials, coefficients from degree 0 upward.
IRREDUCIBLE = {
    (2, 1): [0, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (3, 1): [0, 1],
    (3, 2): [1, 0, 1],
    (3, 3): [1, 2, 0, 1],
    (5, 1): [0, 1],
    (5, 2): [2, 0, 1],
    (5, 3): [1, 1, 0, 1],
}


class FieldSpecFactory(factory.Factory):
    class Meta:
        model = FieldSpec

    class Params:
        degree = fuzzy.FuzzyInteger(1, 3)

    p = fuzzy.FuzzyChoice([2, 3, 5])
    g = factory.LazyAttribute(lambda o: IRREDUCIBLE[(o.p, o.degree)])


class FFElemFactory(factory.Factory):
    class Meta:
        model = FFElem

    class Params:
        nonzero = False

    field = factory.SubFactory(FieldSpecFactory)

    @factory.lazy_attribute
    def coeffs(self):
        while True:
            coeffs = [randgen.randrange(self.field.p) for _ in range(self.field.d)]
            if any(coeffs) or not self.nonzero:
                return coeffs
