import factory
from factory import fuzzy

from fields.factories import FFElemFactory, FieldSpecFactory
from ore.polynomials import LOCAL, OrePoly
from series.factories import LaurentElementFactory
from series.laurent import LaurentElement

from .modules import DrinfeldModuleSpec


class GoodReductionPhiFactory(factory.Factory):
    """
    psi_t = sum_{i <= rank} (c_i + m_i) tau^i with c_i in k, m_i in m_K and
    c_rank nonzero.
    """

    class Meta:
        model = OrePoly

    class Params:
        rank = fuzzy.FuzzyInteger(1, 3)
        deformed = True

    field = factory.SubFactory(FieldSpecFactory)
    ring = LOCAL

    @factory.lazy_attribute
    def coeffs(self):
        coeffs = {}
        for i in range(self.rank + 1):
            residue = FFElemFactory(field=self.field, nonzero=(i == self.rank))
            c = LaurentElement.constant(self.field, residue)
            if self.deformed:
                c = c + LaurentElementFactory(
                    field=self.field, low=1, high=4, nonzero=False
                )
            coeffs[i] = c
        if self.deformed and all(
            c == LaurentElement.constant(self.field, c.residue())
            for c in coeffs.values()
        ):
            coeffs[0] = coeffs[0] + LaurentElement.monomial(self.field, 1)
        return coeffs


class DrinfeldModuleSpecFactory(factory.Factory):
    class Meta:
        model = DrinfeldModuleSpec

    class Params:
        rank = fuzzy.FuzzyInteger(1, 3)
        deformed = True

    field = factory.SubFactory(FieldSpecFactory)
    phi_t = factory.SubFactory(
        GoodReductionPhiFactory,
        field=factory.SelfAttribute("..field"),
        rank=factory.SelfAttribute("..rank"),
        deformed=factory.SelfAttribute("..deformed"),
    )
