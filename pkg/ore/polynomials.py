"""
Twisted polynomials with the commutation rule tau * c = c^p * tau.

OrePoly lives in S[tau] for S = k or S = O_K, SkewLaurentPoly in
k[tau, tau^-1].  Both store a sparse map from tau-exponent to a nonzero
scalar and share one twisted product.
"""

import logging

from core.exceptions import DivisionByZero, FieldMismatch
from fields.finite import FFElem, format_ff
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)

RESIDUE = "k"
LOCAL = "K"


def twist(c, n):
    """c^{p^n} for a scalar of k or of K^perf."""
    if isinstance(c, FFElem):
        return c.frobenius_pow(n)
    return c.p_power(n)


def twisted_product(f, g):
    """
    Product of two coefficient maps under tau^i * c = c^{p^i} * tau^i.

    Entries whose known part vanishes are kept, so precision information
    survives; callers filter as needed.
    """
    product = {}
    for i, a in f.items():
        for j, b in g.items():
            term = a * twist(b, i)
            k = i + j
            product[k] = product[k] + term if k in product else term
    return product


def format_scalar(c):
    text = format_ff(c) if isinstance(c, FFElem) else str(c)
    return f"({text})" if " + " in text else text


class TwistedPolynomial:
    """Common storage and arithmetic for OrePoly and SkewLaurentPoly."""

    __slots__ = ("field", "ring", "coeffs")
    allow_negative = False

    def __init__(self, field, coeffs=None, ring=RESIDUE):
        self.field = field
        self.ring = ring
        clean = {}
        for i, c in (coeffs or {}).items():
            i = int(i)
            if i < 0 and not self.allow_negative:
                raise ValueError(f"negative tau-exponent {i} in {type(self).__name__}")
            c = self._scalar(c)
            if not c.is_zero():
                clean[i] = c
        self.coeffs = clean

    def _scalar(self, c):
        if self.ring == LOCAL:
            if isinstance(c, LaurentElement):
                if c.field != self.field:
                    raise FieldMismatch("coefficient over another field")
                return c
            return LaurentElement.constant(self.field, c)
        if isinstance(c, LaurentElement):
            raise FieldMismatch("series coefficient in a polynomial over k")
        return self.field.element(c)

    def _new(self, coeffs, ring=None):
        return type(self)(self.field, coeffs, ring or self.ring)

    def _coerce(self, other):
        if isinstance(other, TwistedPolynomial):
            if other.field != self.field:
                raise FieldMismatch(
                    "twisted polynomials over different fields",
                    left=self.field,
                    right=other.field,
                )
            return other
        if isinstance(other, (int, FFElem, LaurentElement)):
            ring = LOCAL if isinstance(other, LaurentElement) else self.ring
            return self._new({0: other}, ring)
        return None

    @staticmethod
    def _join(a, b):
        return LOCAL if LOCAL in (a.ring, b.ring) else RESIDUE

    # Structure

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Largest tau-exponent, -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def lowest_degree(self):
        return min(self.coeffs) if self.coeffs else None

    def leading_coefficient(self):
        return self.coeffs[self.degree()]

    def coefficient(self, i):
        if i in self.coeffs:
            return self.coeffs[i]
        if self.ring == LOCAL:
            return LaurentElement.zero(self.field)
        return self.field.zero()

    def items(self):
        for i in sorted(self.coeffs):
            yield i, self.coeffs[i]

    # Arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            coeffs[i] = coeffs[i] + c if i in coeffs else c
        return self._new(coeffs, self._join(self, other))

    __radd__ = __add__

    def __neg__(self):
        return self._new({i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        skew = isinstance(self, SkewLaurentPoly) or isinstance(other, SkewLaurentPoly)
        cls = SkewLaurentPoly if skew else OrePoly
        return cls(
            self.field,
            twisted_product(self.coeffs, other.coeffs),
            self._join(self, other),
        )

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n):
        result = self._new({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def apply(self, xi):
        """f(xi) = sum_i f_i * xi^{p^i}."""
        result = LaurentElement.zero(xi.field)
        for i, c in self.coeffs.items():
            result = result + xi.p_power(i) * c
        return result

    def evaluate(self, poly):
        """a(f) for a in F_p[t] given by residues from degree 0 upward."""
        result = self._new({})
        for a in reversed(list(poly)):
            result = result * self + self._new({0: a % self.field.p})
        return result

    # Comparison and display

    def __eq__(self, other):
        if not isinstance(other, TwistedPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, frozenset(self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs, reverse=True):
            coeff = format_scalar(self.coeffs[i])
            if i == 0:
                parts.append(coeff)
                continue
            monomial = "tau" if i == 1 else f"tau^{i}"
            parts.append(monomial if coeff == "1" else f"{coeff}*{monomial}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class OrePoly(TwistedPolynomial):
    """Sum of c_i tau^i, i >= 0, over k or over Laurent scalars."""

    __slots__ = ()

    def lift(self):
        """The same polynomial with coefficients viewed in O_K."""
        return OrePoly(self.field, self.coeffs, LOCAL)

    def reduce(self):
        """Coefficientwise residue in k of an integral polynomial."""
        if self.ring == RESIDUE:
            return self
        return OrePoly(
            self.field, {i: c.residue() for i, c in self.coeffs.items()}, RESIDUE
        )


class SkewLaurentPoly(TwistedPolynomial):
    """Sum of c_nu tau^nu over k with nu of either sign."""

    __slots__ = ()
    allow_negative = True

    def to_ore(self):
        return OrePoly(self.field, self.coeffs)

    @classmethod
    def from_ore(cls, f):
        return cls(f.field, f.coeffs)


def left_divmod(f, g):
    """
    Return (q, r) with f = q * g + r and deg r < deg g, over k[tau].

    The leading coefficient of each quotient term solves
    lc(f) = q_c * lc(g)^{p^delta}.
    """
    if g.is_zero():
        raise DivisionByZero("division by the zero twisted polynomial")
    cls = type(f)
    quotient = {}
    remainder = f
    m = g.degree()
    lead = g.leading_coefficient()
    while not remainder.is_zero() and remainder.degree() >= m:
        delta = remainder.degree() - m
        c = remainder.leading_coefficient() / twist(lead, delta)
        quotient[delta] = quotient[delta] + c if delta in quotient else c
        remainder = remainder - cls(f.field, {delta: c}) * g
    return cls(f.field, quotient), remainder
