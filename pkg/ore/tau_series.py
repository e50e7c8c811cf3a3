"""
Truncated series sum_{-J <= j <= 0} c_j tau^j with Laurent coefficients.
"""

import logging

from core.exceptions import NotAUnit
from series.laurent import LaurentElement

from .polynomials import twist, twisted_product

logger = logging.getLogger(__name__)


class TauSeries:
    """
    An element of S[[tau^-1]] known to depth J.

    Coefficients are stored at whatever level the computation produced;
    the coefficient of tau^j for -J <= j <= 0 that is absent is exactly zero.
    """

    __slots__ = ("field", "depth", "coeffs")

    def __init__(self, field, coeffs, depth):
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        self.field = field
        self.depth = depth
        clean = {}
        for j, c in coeffs.items():
            j = int(j)
            if -depth <= j <= 0:
                if not isinstance(c, LaurentElement):
                    c = LaurentElement.constant(field, c)
                if not c.is_exact_zero():
                    clean[j] = c
        self.coeffs = clean

    @classmethod
    def one(cls, field, depth):
        return cls(field, {0: LaurentElement.one(field)}, depth)

    def __getitem__(self, j):
        if j > 0 or j < -self.depth:
            raise IndexError(f"tau-exponent {j} outside 0..-{self.depth}")
        return self.coeffs.get(j, LaurentElement.zero(self.field))

    def items(self):
        for j in range(0, -self.depth - 1, -1):
            yield j, self[j]

    def truncate(self, depth):
        return TauSeries(self.field, self.coeffs, min(depth, self.depth))

    def z(self, j):
        """z_j = c_j^{p^{|j|}}; for the inverse of the canonical lift it lies in O_K."""
        return self[j].p_power(-j)

    def apply(self, xi):
        """sum_j c_j * xi^{p^j}."""
        result = LaurentElement.zero(self.field)
        for j, c in self.coeffs.items():
            result = result + c * xi.p_power(j)
        return result

    def inverse(self, depth=None, prec=None):
        return series_inverse(self, depth, prec)

    def __eq__(self, other):
        if not isinstance(other, TauSeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.depth == other.depth
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.depth, frozenset(self.coeffs.items())))

    def __repr__(self):
        body = ", ".join(f"{j}: {c}" for j, c in sorted(self.coeffs.items()))
        return f"TauSeries(depth={self.depth}, {{{body}}})"


def series_mul(x, y, depth=None):
    """Product truncated at depth J: (xy)_l = sum_{i+j=l} x_i * y_j^{p^i}."""
    depth = min(x.depth, y.depth) if depth is None else depth
    coeffs = {}
    for ell in range(0, -depth - 1, -1):
        acc = LaurentElement.zero(x.field)
        for i in range(ell, 1):
            a = x.coeffs.get(i)
            b = y.coeffs.get(ell - i)
            if a is not None and b is not None:
                acc = acc + a * twist(b, i)
        coeffs[ell] = acc
    return TauSeries(x.field, coeffs, depth)


def product_with_polynomial(f, x, side="left"):
    """
    Coefficients of f * x (side="left") or x * f as a map tau-exponent ->
    scalar, keeping only the degrees fully determined by x to its depth.
    """
    if side == "left":
        product = twisted_product(f.coeffs, x.coeffs)
    else:
        product = twisted_product(x.coeffs, f.coeffs)
    lowest = f.degree() - x.depth
    return {k: c for k, c in product.items() if k >= lowest}


def series_inverse(x, depth=None, prec=None):
    """
    Two-sided inverse y of x with y_0 = x_0^-1 and, for l < 0,

        y_l = -x_0^-1 * sum_{l < j <= 0} x_{l-j} * y_j^{p^{l-j}}.

    The recursion is run on z_l = y_l^{p^{|l|}}, which stays at level 0
    with no loss of precision, and y_l is recovered as z_l^{p^l}.  A finite
    prec caps the absolute precision of every y_l.
    """
    depth = x.depth if depth is None else min(depth, x.depth)
    x0 = x[0]
    if x0.is_zero() or x0.valuation() != 0:
        raise NotAUnit("constant tau-coefficient is not a unit", x0=str(x0))
    y0 = x0.inverse(prec=prec)
    z = {0: y0}
    for ell in range(-1, -depth - 1, -1):
        m = -ell
        acc = LaurentElement.zero(x.field)
        for j in range(ell + 1, 1):
            a = x.coeffs.get(ell - j)
            if a is not None:
                acc = acc + a.p_power(m) * z[j]
        z[ell] = -(y0.p_power(m) * acc)
        if prec is not None:
            z[ell] = z[ell].truncate(prec * x.field.p**m)
        logger.debug(
            f"inverse coefficient {ell}: v(z) >= {z[ell].valuation_bound()}"
        )
    return TauSeries(x.field, {j: zj.p_power(j) for j, zj in z.items()}, depth)
