"""
Arithmetic in the prime field F_p and in k = F_p[z]/(g(z)).

Elements are stored as coefficient vectors in the basis 1, z, ..., z^{d-1}.
Frobenius powers act through cached images of the basis, so a^{p^n} costs
one F_p-linear combination for every n.
"""

import logging
from itertools import product

from sympy import Poly, Symbol, isprime

from core.exceptions import DivisionByZero, FieldMismatch, InvalidFieldSpec

logger = logging.getLogger(__name__)

_Z = Symbol("z")


class FieldSpec:
    """
    The finite field k of order p^d, given by a prime p and a monic
    irreducible g over F_p listed from degree 0 upward.
    """

    __slots__ = ("p", "g", "d", "_frobenius_images")

    def __init__(self, p, g):
        p = int(p)
        if not isprime(p):
            raise InvalidFieldSpec("characteristic is not prime", p=p)
        g = tuple(int(c) % p for c in g)
        if len(g) < 2:
            raise InvalidFieldSpec("field polynomial must have degree >= 1", g=list(g))
        if g[-1] != 1:
            raise InvalidFieldSpec("field polynomial must be monic", g=list(g))
        if len(g) > 2:
            poly = Poly(list(reversed(g)), _Z, modulus=p)
            if not poly.is_irreducible:
                raise InvalidFieldSpec(
                    "field polynomial is reducible over F_p", p=p, g=list(g)
                )
        self.p = p
        self.g = g
        self.d = len(g) - 1
        self._frobenius_images = {}

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.p == other.p and self.g == other.g

    def __hash__(self):
        return hash((self.p, self.g))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, g={list(self.g)})"

    @property
    def order(self):
        return self.p**self.d

    def element(self, value):
        """Coerce an int, a coefficient list or an FFElem into k."""
        if isinstance(value, FFElem):
            if value.field != self:
                raise FieldMismatch("element belongs to another field", field=self)
            return value
        if isinstance(value, int):
            return FFElem(self, (value % self.p,) + (0,) * (self.d - 1))
        coeffs = list(value)
        if len(coeffs) != self.d:
            raise FieldMismatch(
                "coefficient vector has the wrong length",
                expected=self.d,
                got=len(coeffs),
            )
        return FFElem(self, coeffs)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def generator(self):
        """The class of z."""
        if self.d == 1:
            return self.element(-self.g[0])
        return FFElem(self, (0, 1) + (0,) * (self.d - 2))

    def elements(self):
        """Iterate over all p^d elements in a fixed order."""
        for coeffs in product(range(self.p), repeat=self.d):
            yield FFElem(self, coeffs)

    def basis(self):
        """The F_p-basis 1, z, ..., z^{d-1}."""
        for i in range(self.d):
            yield FFElem(self, tuple(1 if j == i else 0 for j in range(self.d)))

    def frobenius_images(self, n):
        """Images of the basis under a -> a^{p^n}, with n reduced mod d."""
        n %= self.d
        images = self._frobenius_images.get(n)
        if images is None:
            z_image = self.generator() if self.d > 1 else self.one()
            for _ in range(n):
                z_image = z_image._pow(self.p)
            images = [self.one()]
            for _ in range(1, self.d):
                images.append(images[-1] * z_image)
            images = tuple(images)
            self._frobenius_images[n] = images
        return images

    def _mul(self, a, b):
        p, d, g = self.p, self.d, self.g
        if d == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(d):
                    prod[k - d + i] -= c * g[i]
        return tuple(c % p for c in prod[:d])


class FFElem:
    """An element of k, immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = tuple(int(c) % field.p for c in coeffs)
        if len(coeffs) != field.d:
            raise FieldMismatch(
                "coefficient vector has the wrong length",
                expected=field.d,
                got=len(coeffs),
            )
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise FieldMismatch(
                    "operands belong to different fields",
                    left=self.field,
                    right=other.field,
                )
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field.element(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FFElem({format_ff(self)})"

    def is_zero(self):
        return not any(self.coeffs)

    def in_prime_field(self):
        return not any(self.coeffs[1:])

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FFElem(
            self.field, ((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return FFElem(self.field, (-a for a in self.coeffs))

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
        return FFElem(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def _pow(self, n):
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __pow__(self, n):
        if n < 0:
            return self.inverse()._pow(-n)
        return self._pow(n)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("zero has no inverse in k", field=self.field)
        return self._pow(self.field.order - 2)

    def frobenius_pow(self, n):
        """Return a^{p^n}; negative n gives the inverse Frobenius powers."""
        n %= self.field.d
        if n == 0 or self.in_prime_field():
            return self
        images = self.field.frobenius_images(n)
        result = self.field.zero()
        for c, image in zip(self.coeffs, images):
            if c:
                result = result + image * c
        return result

    def minimal_polynomial(self):
        """Minimal polynomial over F_p as residues from degree 0 upward."""
        conjugates = [self]
        current = self.frobenius_pow(1)
        while current != self:
            conjugates.append(current)
            current = current.frobenius_pow(1)
        poly = [self.field.one()]
        for root in conjugates:
            shifted = [self.field.zero()] + poly
            for i, c in enumerate(poly):
                shifted[i] = shifted[i] - root * c
            poly = shifted
        return [c.coeffs[0] for c in poly]


def format_ff(a):
    """Render an element as a polynomial in z, or as a residue when d = 1."""
    if a.field.d == 1:
        return str(a.coeffs[0])
    parts = []
    for i in range(a.field.d - 1, -1, -1):
        c = a.coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            monomial = "z" if i == 1 else f"z^{i}"
            parts.append(monomial if c == 1 else f"{c}*{monomial}")
    return " + ".join(parts) if parts else "0"


def ff_literal(a):
    """Literal used in documents and reports: a residue or a coefficient list."""
    if a.field.d == 1:
        return a.coeffs[0]
    return list(a.coeffs)
