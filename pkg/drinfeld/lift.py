"""
The canonical lift x in O_K[[tau^-1]] with psi_t * x = x * phibar_t.
"""

import logging
import math
from fractions import Fraction

from django.conf import settings

from core.exceptions import NonConvergence, PrecisionExhausted
from ore.tau_series import TauSeries, product_with_polynomial
from series.laurent import LaurentElement, artin_schreier_root, unit_root

from .modules import ensure_validated

logger = logging.getLogger(__name__)


def required_depth(w, valuation, p):
    """Smallest J >= 1 with p^J * w >= |valuation|."""
    if w == math.inf:
        return 1
    target = abs(Fraction(valuation))
    depth = 1
    while p**depth * Fraction(w) < target:
        depth += 1
    return depth


def required_precision(valuation):
    """ceil(|valuation|) plus the configured margin."""
    margin = getattr(settings, "DRINFELD_PRECISION_MARGIN", 1)
    return math.ceil(abs(Fraction(valuation))) + margin


def _leading_term(spec, prec):
    """x_0 with x_0^{p^r - 1} = fbar_r / f_r and x_0 = 1 mod m_K."""
    r = spec.r
    f_r = spec.coefficient(r)
    fbar_r = spec.reduced_coefficient(r)
    ratio = f_r.inverse(prec=prec).scale(fbar_r)
    return unit_root(ratio, spec.p**r - 1, prec)


def _known_sum(spec, x, ell):
    """
    sum_{l < j <= min(0, r + l)} (f_i * x_j^{p^i} - x_j * fbar_i^{p^j}),
    i = r + l - j; every x_j involved is already known.
    """
    r = spec.r
    acc = LaurentElement.zero(spec.field)
    for j in range(ell + 1, min(0, r + ell) + 1):
        i = r + ell - j
        f_i = spec.coefficient(i)
        x_j = x[j]
        if not f_i.is_exact_zero():
            acc = acc + f_i * x_j.p_power(i)
        fbar_i = spec.reduced_coefficient(i)
        if fbar_i:
            acc = acc - x_j.scale(fbar_i.frobenius_pow(j))
    return acc


def canonical_lift(spec, depth, prec=None, check=True):
    """
    Solve psi_t * x = x * phibar_t for x = sum_{-depth <= l <= 0} x_l tau^l.

    x_0 comes from a Newton solve of degree p^r - 1.  Each x_l with l < 0
    solves x_l = lead * S_l + lead * f_r * x_l^{p^r}, lead = fbar_r^{-p^l},
    by fixed-point iteration in m_K.  All coefficients are known mod pi^prec.
    """
    spec = ensure_validated(spec)
    prec = settings.DRINFELD_DEFAULT_PRECISION if prec is None else prec
    if prec < 1:
        raise PrecisionExhausted("lift precision must be positive", prec=prec)
    if spec.exact_reduction:
        logger.debug("exact reduction, canonical lift is 1")
        return TauSeries.one(spec.field, depth)

    r = spec.r
    f_r = spec.coefficient(r)
    fbar_r = spec.reduced_coefficient(r)
    coeffs = {0: _leading_term(spec, prec)}
    known = TauSeries(spec.field, coeffs, depth)
    for ell in range(-1, -depth - 1, -1):
        lead = fbar_r.frobenius_pow(ell).inverse()
        seed = _known_sum(spec, known, ell).scale(lead)
        coeffs[ell] = artin_schreier_root(seed, f_r.scale(lead), r, prec)
        known = TauSeries(spec.field, coeffs, depth)
        logger.debug(f"x_{ell} >= pi^{coeffs[ell].valuation_bound()}")

    x = TauSeries(spec.field, coeffs, depth)
    if check and not commutes(spec, x):
        logger.error(f"canonical lift of {spec} fails the commutation check")
        raise NonConvergence(
            "lift does not satisfy psi_t x = x phibar_t", depth=depth, prec=prec
        )
    logger.info(f"canonical lift of {spec} to depth {depth}, prec {prec}")
    return x


def _residual(left, right):
    degrees = set(left) | set(right)
    residual = {}
    for k in sorted(degrees):
        a = left.get(k)
        b = right.get(k)
        if a is None:
            diff = -b
        elif b is None:
            diff = a
        else:
            diff = a - b
        if not isinstance(diff, LaurentElement):
            diff = LaurentElement.constant(diff.field, diff)
        residual[k] = diff
    return residual


def commutation_residual(spec, x, a=None):
    """
    Coefficients of psi_a * x - x * phibar_a in the tau-degrees fully
    determined by x; a defaults to t.
    """
    spec = ensure_validated(spec)
    if a is None:
        psi_a, phibar_a = spec.phi_t, spec.phibar_t
    else:
        psi_a = spec.evaluate(a)
        phibar_a = spec.evaluate(a, reduced=True)
    left = product_with_polynomial(psi_a, x, side="left")
    right = product_with_polynomial(phibar_a, x, side="right")
    return _residual(left, right)


def commutes(spec, x, a=None):
    return all(c.is_zero() for c in commutation_residual(spec, x, a).values())


def lift_bounds(spec, x, inverse=None):
    """
    Check v(x_l - delta_{l,0}) >= w and the same for the inverse when given.

    Coefficients with no known term satisfy the bound vacuously.
    """
    spec = ensure_validated(spec)
    w = spec.w

    def _bound(series):
        worst = math.inf
        holds = True
        for j, c in series.items():
            if j == 0:
                c = c - 1
            worst = min(worst, c.valuation_bound())
            if c.terms and c.valuation() < w:
                holds = False
        return worst, holds

    x_bound, x_holds = _bound(x)
    report = {"w": w, "x_minus_one": x_bound, "x_holds": x_holds}
    if inverse is not None:
        y_bound, y_holds = _bound(inverse)
        report.update(inverse_minus_one=y_bound, inverse_holds=y_holds)
    return report


def check_endomorphism(spec, x, h):
    """
    For integral h in O_K[tau], report whether h commutes with psi_t and
    whether h * x = x * hbar to the depth and precision of x.
    """
    spec = ensure_validated(spec)
    if h.ring != spec.phi_t.ring:
        h = h.lift()
    swap = _residual((h * spec.phi_t).coeffs, (spec.phi_t * h).coeffs)
    commutes_with_psi = all(c.is_zero() for c in swap.values())
    if not commutes_with_psi:
        logger.warning(f"{h} does not commute with {spec}")
    if not all(c.is_integral() for _, c in h.items()):
        return {"commutes": commutes_with_psi, "compatible": False}
    hbar = h.reduce()
    left = product_with_polynomial(h, x, side="left")
    right = product_with_polynomial(hbar, x, side="right")
    residual = _residual(left, right)
    compatible = all(c.is_zero() for c in residual.values())
    return {"commutes": commutes_with_psi, "compatible": compatible}
