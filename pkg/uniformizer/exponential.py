"""
Truncated Tate uniformization.

A lattice M for psi is cut down to M_B = {m in M : v(m) >= -B}, an
F_p-subspace since the valuation is ultrametric.  The additive polynomial
e_B with constant coefficient 1 and kernel M_B approximates the exponential
of M, and phi_t is solved from e_B * psi_t = phi_t * e_B.
"""

import itertools
import logging
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from core.exceptions import CancellationWarning, ResidualTooLarge
from core.utils import coordinate_rows, fp_rref
from drinfeld.modules import ensure_validated
from kummer.lattice import check_independence
from ore.polynomials import LOCAL, OrePoly, twisted_product
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)


def enumeration_degree(spec, lattice, bound):
    """Least D >= 0 with p^(r D) * min |v(m_i)| >= B."""
    smallest = lattice.min_abs_valuation()
    step = spec.p**spec.r
    degree = 0
    while smallest * step**degree < bound:
        degree += 1
    return degree


@dataclass(frozen=True)
class LatticeBasis:
    """An F_p-basis of M_B with pivots in increasing valuation."""

    field: object
    bound: Fraction
    degree: int
    vectors: tuple
    valuations: tuple
    certified: bool

    @property
    def dimension(self):
        return len(self.vectors)

    def points(self):
        """Every F_p-combination of the basis, zero first."""
        result = []
        for coeffs in itertools.product(range(self.field.p), repeat=self.dimension):
            point = LaurentElement.zero(self.field)
            for c, vector in zip(coeffs, self.vectors):
                if c:
                    point = point + vector * c
            result.append(point)
        return result


def lattice_basis(spec, lattice, bound):
    """
    Row-reduce the psi_{t^e}(m_i), e <= D(B), over F_p with columns in
    increasing exponent; the reduced rows with pivot exponent >= -B span M_B.

    A reduced row whose valuation exceeds that of every vector it combines is
    a cancellation among equal-valuation lattice terms, and then the
    completeness of M_B is not certified.
    """
    spec = ensure_validated(spec)
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError(f"lattice bound must be positive, got {bound}")
    if not len(lattice):
        return LatticeBasis(spec.field, bound, 0, (), (), True)
    check_independence(spec, lattice)
    degree = enumeration_degree(spec, lattice, bound)

    vectors = []
    for m in lattice:
        current = m
        for _ in range(degree + 1):
            vectors.append(current)
            current = spec.phi_t.apply(current)

    cap = min(
        (v.precision for v in vectors if not v.is_exact()), default=math.inf
    )
    maps = [{q: c for q, c in v.items() if q < cap} for v in vectors]
    columns, rows = coordinate_rows(maps, spec.d)
    width = len(columns)
    augmented = [
        row + [int(k == i) for k in range(len(vectors))] for i, row in enumerate(rows)
    ]
    reduced, pivots = fp_rref(augmented, spec.p)

    basis, valuations = [], []
    certified = True
    for row, pivot in zip(reduced, pivots):
        if pivot >= width:
            break
        valuation = columns[pivot][0]
        if valuation < -bound:
            continue
        combination = row[width:]
        element = LaurentElement.zero(spec.field)
        predicted = math.inf
        for c, vector in zip(combination, vectors):
            if c:
                element = element + vector * c
                predicted = min(predicted, vector.valuation())
        if valuation > predicted:
            certified = False
        basis.append(element)
        valuations.append(valuation)

    order = sorted(range(len(basis)), key=lambda i: valuations[i])
    result = LatticeBasis(
        field=spec.field,
        bound=bound,
        degree=degree,
        vectors=tuple(basis[i] for i in order),
        valuations=tuple(valuations[i] for i in order),
        certified=certified,
    )
    if not certified:
        message = f"cancellation among lattice terms; M_B for B = {bound} uncertified"
        logger.warning(message)
        warnings.warn(message, CancellationWarning, stacklevel=2)
    logger.debug(f"M_B for B = {bound}: dimension {result.dimension}, D = {degree}")
    return result


def enumerate_lattice(spec, lattice, bound):
    """The points of M_B, zero first."""
    return lattice_basis(spec, lattice, bound).points()


class TruncatedExponential:
    """
    e_B = prod over a basis of M_B of the factors (1 - a^(1-p) tau), built so
    that each new factor kills the image of the next basis vector.
    """

    def __init__(self, spec, basis, prec=None):
        self.spec = ensure_validated(spec)
        self.basis = basis
        self.bound = basis.bound
        self.prec = settings.DRINFELD_DEFAULT_PRECISION if prec is None else prec
        field = self.spec.field
        p = field.p
        coeffs = {0: LaurentElement.one(field)}
        for vector in basis.vectors:
            a = self._apply(coeffs, vector)
            factor = a.power(p - 1).inverse(prec=self.prec)
            coeffs = twisted_product({0: LaurentElement.one(field), 1: -factor}, coeffs)
            coeffs = {
                i: c if c.is_exact() else c.truncate(self.prec)
                for i, c in coeffs.items()
            }
        self.coeffs = coeffs

    @staticmethod
    def _apply(coeffs, xi):
        result = LaurentElement.zero(xi.field)
        for i, c in coeffs.items():
            result = result + c * xi.p_power(i)
        return result

    @property
    def degree(self):
        return max(self.coeffs)

    def polynomial(self):
        return OrePoly(self.spec.field, self.coeffs, LOCAL)

    def apply(self, xi):
        """e_B(xi) = sum_i e_i * xi^(p^i)."""
        return self._apply(self.coeffs, xi)

    def points(self):
        return self.basis.points()

    def __repr__(self):
        return f"TruncatedExponential(B={self.bound}, degree={self.degree})"


@dataclass
class AnalyticQuotient:
    exponential: TruncatedExponential
    phi_t: OrePoly
    solved: dict
    residual_valuation: object
    tail_valuation: object
    declared_rank: int
    certified: bool

    @property
    def rank(self):
        return self.phi_t.degree()


def _min_valuation(coeffs, degrees):
    values = [coeffs[k].valuation_bound() for k in degrees if k in coeffs]
    return min(values, default=math.inf)


def solve_phi(exponential, psi_t):
    """
    phi_k = (e psi)_k - sum_{i < k} phi_i * e_{k-i}^(p^i) for k <= deg e + deg psi.
    """
    e = exponential.coeffs
    left = twisted_product(e, psi_t.coeffs)
    top = exponential.degree + psi_t.degree()
    field = exponential.spec.field
    phi = {}
    for k in range(top + 1):
        value = left.get(k, LaurentElement.zero(field))
        for i in range(k):
            if i in phi and (k - i) in e:
                value = value - phi[i] * e[k - i].p_power(i)
        phi[k] = value
    return phi, top


def analytic_quotient(spec, lattice, bound, prec=None):
    """
    e_B and phi_t for the lattice truncated at valuation -B.

    phi_t is reported up to degree r + declared rank; the solved coefficients
    beyond it give tail_valuation.  residual_valuation is the least valuation
    of e_B * psi_t - phi_t * e_B in degrees above the solved range.
    """
    spec = ensure_validated(spec)
    basis = lattice_basis(spec, lattice, bound)
    exponential = TruncatedExponential(spec, basis, prec)
    phi, top = solve_phi(exponential, spec.phi_t)

    right = twisted_product(phi, exponential.coeffs)
    residual = _min_valuation(right, range(top + 1, top + exponential.degree + 1))
    if residual <= 0:
        raise ResidualTooLarge(
            "functional equation residual is not in m_K",
            bound=str(bound),
            residual=str(residual),
        )

    declared = lattice.declared_rank
    keep = spec.r + declared
    phi_t = OrePoly(
        spec.field, {k: c for k, c in phi.items() if k <= keep}, LOCAL
    )
    tail = _min_valuation(phi, range(keep + 1, top + 1))
    logger.info(
        f"analytic quotient for B = {bound}: deg e = {exponential.degree}, "
        f"residual {residual}, tail {tail}"
    )
    return AnalyticQuotient(
        exponential=exponential,
        phi_t=phi_t,
        solved=phi,
        residual_valuation=residual,
        tail_valuation=tail,
        declared_rank=declared,
        certified=basis.certified,
    )
