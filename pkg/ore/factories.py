import factory
from factory.random import randgen

from fields.factories import FFElemFactory, FieldSpecFactory
from series.factories import LaurentElementFactory
from series.laurent import LaurentElement

from .polynomials import LOCAL, RESIDUE, OrePoly, SkewLaurentPoly
from .tau_series import TauSeries


class OrePolyFactory(factory.Factory):
    """Random twisted polynomial over k of degree at most max_degree."""

    class Meta:
        model = OrePoly

    class Params:
        max_degree = 3
        min_degree = 0

    field = factory.SubFactory(FieldSpecFactory)
    ring = RESIDUE

    @factory.lazy_attribute
    def coeffs(self):
        coeffs = {
            i: FFElemFactory(field=self.field)
            for i in range(self.min_degree, self.max_degree + 1)
        }
        coeffs[self.max_degree] = FFElemFactory(field=self.field, nonzero=True)
        return coeffs


class SkewLaurentPolyFactory(OrePolyFactory):
    class Meta:
        model = SkewLaurentPoly

    class Params:
        min_degree = -2


class IntegralOrePolyFactory(factory.Factory):
    """Random polynomial over O_K with integral finite-sum coefficients."""

    class Meta:
        model = OrePoly

    class Params:
        max_degree = 2

    field = factory.SubFactory(FieldSpecFactory)
    ring = LOCAL

    @factory.lazy_attribute
    def coeffs(self):
        return {
            i: LaurentElementFactory(field=self.field, low=0, high=4, nonzero=False)
            for i in range(self.max_degree + 1)
        }


class UnitTauSeriesFactory(factory.Factory):
    """Random tau^-1-series with x_0 = 1 mod m_K and x_j in m_K for j < 0."""

    class Meta:
        model = TauSeries

    field = factory.SubFactory(FieldSpecFactory)
    depth = 3

    @factory.lazy_attribute
    def coeffs(self):
        coeffs = {
            0: LaurentElement.one(self.field)
            + LaurentElementFactory(field=self.field, low=1, high=4, nonzero=False)
        }
        for j in range(-1, -self.depth - 1, -1):
            if randgen.random() < 0.8:
                coeffs[j] = LaurentElementFactory(field=self.field, low=1, high=5)
        return coeffs
