"""
The isomorphism chi between K^perf/O viewed through psi and through phibar,
evaluated with the canonical lift x and its inverse.
"""

import logging

from core.exceptions import PrecisionExhausted
from drinfeld.lift import canonical_lift, required_depth, required_precision
from drinfeld.modules import ensure_validated
from filtration.classes import PrincipalClass, decompose
from ore.tau_series import series_inverse
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)


def _representative(xi):
    if isinstance(xi, PrincipalClass):
        return xi.reconstruct() if xi.representative is None else xi.representative
    return xi


def resolve_parameters(spec, valuation, depth=None, prec=None):
    """
    Depth J with p^J * w >= |v| and precision ceil(|v|) + margin, unless
    given; a given depth or precision below the requirement is refused,
    since the dropped terms would not be integral.
    """
    needed = required_precision(valuation)
    if prec is None:
        prec = needed
    elif prec < needed:
        raise PrecisionExhausted(
            "working precision below the requirement", prec=prec, required=needed
        )
    required = required_depth(spec.w, valuation, spec.p)
    if depth is None:
        depth = required
    elif depth < required:
        raise PrecisionExhausted(
            "tau-depth below the requirement", depth=depth, required=required
        )
    logger.debug(f"resolved depth {depth}, precision {prec} for v = {valuation}")
    return depth, prec


def lift_pair(spec, depth, prec):
    """The canonical lift and its inverse to the given depth and precision."""
    x = canonical_lift(spec, depth, prec)
    return x, series_inverse(x, prec=prec)


def _sum_terms(field, terms):
    total = LaurentElement.zero(field)
    for term in terms:
        total = total + term
    return total


def chi_inverse_class(spec, xi, depth=None, prec=None, inverse=None):
    """
    chi^-1([xi]) = sum_{-J <= j <= 0} [(z_j xi)^{p^j}] with z_j the integral
    coefficients of x^-1; the omitted terms j < -J are integral.
    """
    spec = ensure_validated(spec)
    xi = _representative(xi)
    head = xi.principal_part()
    if head.is_exact_zero():
        return PrincipalClass.zero(spec.field)
    if spec.exact_reduction:
        return decompose(xi)
    v = head.valuation()
    depth, prec = resolve_parameters(spec, v, depth, prec)
    if inverse is None or inverse.depth < depth:
        _, inverse = lift_pair(spec, depth, prec)
    terms = [(inverse.z(j) * xi).p_power(j) for j in range(-depth, 1)]
    return decompose(_sum_terms(spec.field, terms))


def chi_class(spec, xi, depth=None, prec=None, lift=None):
    """chi([xi]) = sum_{-J <= j <= 0} [x_j xi^{p^j}] for xi in K^perf."""
    spec = ensure_validated(spec)
    xi = _representative(xi)
    head = xi.principal_part()
    if head.is_exact_zero():
        return PrincipalClass.zero(spec.field)
    if spec.exact_reduction:
        return decompose(xi)
    v = head.valuation()
    depth, prec = resolve_parameters(spec, v, depth, prec)
    if lift is None or lift.depth < depth:
        lift = canonical_lift(spec, depth, prec)
    terms = [lift[j] * xi.p_power(j) for j in range(-depth, 1)]
    return decompose(_sum_terms(spec.field, terms))


def build_Mbar(spec, lattice, progress=None, depth=None, prec=None):
    """
    The R-generators chi^-1([m_i]) of Mbar, one row per generator.

    One lift is shared by all generators, sized for the largest |v(m_i)|.
    """
    spec = ensure_validated(spec)
    if not len(lattice):
        return []
    generators = list(lattice)
    v = -lattice.max_abs_valuation()
    inverse = None
    if not spec.exact_reduction:
        depth, prec = resolve_parameters(spec, v, depth, prec)
        _, inverse = lift_pair(spec, depth, prec)
    iterable = progress(generators) if progress is not None else generators
    rows = [
        chi_inverse_class(spec, m, depth, prec, inverse=inverse) for m in iterable
    ]
    logger.info(f"built {len(rows)} generator rows of Mbar")
    return rows
