"""
Classes in K^perf / O_{K^perf} over the basis [pi^-j], p not dividing j.

Every class is a finite sum sum_j f_j([pi^-j]) with f_j in k[tau, tau^-1];
W_i is spanned by the basis classes with j < i.
"""

import logging
from fractions import Fraction

from core.exceptions import FieldMismatch, ZeroClass
from ore.polynomials import SkewLaurentPoly, TwistedPolynomial
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)


def split_index(m, p):
    """Write m > 0 with p-power denominator as j * p^nu, p not dividing j."""
    m = Fraction(m)
    numerator, denominator = m.numerator, m.denominator
    nu = 0
    while numerator % p == 0:
        numerator //= p
        nu += 1
    while denominator % p == 0:
        denominator //= p
        nu -= 1
    if denominator != 1:
        raise ValueError(f"{m} does not have a {p}-power denominator")
    return numerator, nu


def basis_element(field, j):
    """xi_j = pi^-j."""
    return LaurentElement.monomial(field, -j)


# rank of gr^i over k, i.e. d * graded_rank(i, p)
GRADED_RULE = "rank 0 if p|i, d if p∤i"


def graded_rank(i, p):
    """R°-rank of gr^i: 1 when i > 0 and p does not divide i, else 0."""
    return 1 if i > 0 and i % p else 0


class PrincipalClass:
    """
    A class sum_j f_j([pi^-j]) stored by its coefficients f_j.

    representative, when known, is an element of K^perf whose class this is;
    it is what the j-invariant reads.
    """

    __slots__ = ("field", "decomp", "representative")

    def __init__(self, field, decomp=None, representative=None):
        p = field.p
        clean = {}
        for j, f in (decomp or {}).items():
            j = int(j)
            if j <= 0 or j % p == 0:
                raise ValueError(f"basis index {j} must be positive, prime to {p}")
            if not isinstance(f, SkewLaurentPoly):
                f = SkewLaurentPoly(field, getattr(f, "coeffs", f))
            if not f.is_zero():
                clean[j] = f
        self.field = field
        self.decomp = clean
        self.representative = representative

    @classmethod
    def zero(cls, field):
        return cls(field, {}, LaurentElement.zero(field))

    @classmethod
    def basis(cls, field, j):
        one = SkewLaurentPoly(field, {0: 1})
        return cls(field, {j: one}, basis_element(field, j))

    # Structure

    def is_zero(self):
        return not self.decomp

    def coefficient(self, j):
        return self.decomp.get(j, SkewLaurentPoly(self.field, {}))

    def indices(self):
        return sorted(self.decomp)

    def top_index(self):
        """Largest basis index in the support, 0 for the zero class."""
        return max(self.decomp) if self.decomp else 0

    def w_level(self):
        """Least i with the class in W_i."""
        return self.top_index() + 1 if self.decomp else 0

    def w_membership(self, i):
        """Membership in W_i is decided by the support, not by valuations."""
        return all(j < i for j in self.decomp)

    def reconstruct(self):
        """The representative sum_j f_j(pi^-j), supported in negative exponents."""
        result = LaurentElement.zero(self.field)
        for j, f in self.decomp.items():
            result = result + f.apply(basis_element(self.field, j))
        return result

    def j_invariant(self):
        """Prime-to-p part of -v of the representative's principal part."""
        if self.is_zero():
            raise ZeroClass("the zero class has no j-invariant")
        rep = self.representative
        if rep is None:
            rep = self.reconstruct()
        head = rep.principal_part()
        if head.is_exact_zero():
            head = self.reconstruct()
        j, _ = split_index(-head.valuation(), self.field.p)
        return j

    # Arithmetic

    def _check(self, other):
        if not isinstance(other, PrincipalClass):
            return False
        if other.field != self.field:
            raise FieldMismatch("classes over different fields")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        decomp = dict(self.decomp)
        for j, f in other.decomp.items():
            decomp[j] = decomp[j] + f if j in decomp else f
        rep = None
        if self.representative is not None and other.representative is not None:
            rep = self.representative + other.representative
        return PrincipalClass(self.field, decomp, rep)

    def __neg__(self):
        rep = None if self.representative is None else -self.representative
        return PrincipalClass(
            self.field, {j: -f for j, f in self.decomp.items()}, rep
        )

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, g):
        """Left action of g in k[tau, tau^-1]: f_j -> g * f_j."""
        if not isinstance(g, TwistedPolynomial):
            g = SkewLaurentPoly(self.field, {0: g})
        decomp = {
            j: SkewLaurentPoly.from_ore(g * f) for j, f in self.decomp.items()
        }
        rep = None if self.representative is None else g.apply(self.representative)
        return PrincipalClass(self.field, decomp, rep)

    def __eq__(self, other):
        if not isinstance(other, PrincipalClass):
            return NotImplemented
        return self.field == other.field and self.decomp == other.decomp

    def __hash__(self):
        return hash((self.field, frozenset(self.decomp.items())))

    def __str__(self):
        if not self.decomp:
            return "0"
        parts = [
            f"({f})[pi^-{j}]" for j, f in sorted(self.decomp.items(), reverse=True)
        ]
        return " + ".join(parts)

    def __repr__(self):
        return f"PrincipalClass({self})"


def decompose(xi):
    """
    The class of xi over the basis: a term c * pi^-(j p^nu) of the principal
    part contributes c * tau^nu to f_j.
    """
    field = xi.field
    p = field.p
    decomp = {}
    for q, c in xi.principal_part().items():
        j, nu = split_index(-q, p)
        f = SkewLaurentPoly(field, {nu: c})
        decomp[j] = decomp[j] + f if j in decomp else f
    return PrincipalClass(field, decomp, xi)
