import factory
from factory.random import randgen

from fields.factories import FFElemFactory, FieldSpecFactory

from .laurent import LaurentElement


class LaurentElementFactory(factory.Factory):
    """Random finite sums c * pi^{n/p^level} with n in [low, high)."""

    class Meta:
        model = LaurentElement

    class Params:
        low = -6
        high = 6
        density = 0.5
        nonzero = True

    field = factory.SubFactory(FieldSpecFactory)
    level = 0
    prec = None

    @factory.lazy_attribute
    def terms(self):
        while True:
            terms = {
                n: FFElemFactory(field=self.field, nonzero=True)
                for n in range(self.low, self.high)
                if randgen.random() < self.density
            }
            if terms or not self.nonzero:
                return terms
