"""
Laurent series over k in fractional powers of the uniformizer pi.

An element of K^{1/p^e} is stored at an explicit level e: the key n of a
term stands for the exponent n/p^e, and a finite precision N means that
every exponent >= N/p^e is unknown.  Elements are kept in canonical form,
so the level is minimal and equality is structural.
"""

import logging
import math
from fractions import Fraction

from django.conf import settings

from core.exceptions import (
    DivisionByZero,
    FieldMismatch,
    NonConvergence,
    NotAUnit,
    PrecisionExhausted,
    ZeroValuation,
)
from fields.finite import FFElem, format_ff

logger = logging.getLogger(__name__)

EXACT = None


def level_of(exponent, p):
    """Smallest e with exponent * p^e integral."""
    exponent = Fraction(exponent)
    denominator = exponent.denominator
    level = 0
    while denominator % p == 0:
        denominator //= p
        level += 1
    if denominator != 1:
        raise ValueError(f"{exponent} does not have a {p}-power denominator")
    return level


def _ceil(value):
    return math.ceil(value) if not isinstance(value, int) else value


class LaurentElement:
    __slots__ = ("field", "level", "terms", "prec")

    def __init__(self, field, terms=None, prec=EXACT, level=0):
        p = field.p
        clean = {}
        for n, c in (terms or {}).items():
            n = int(n)
            if prec is not None and n >= prec:
                continue
            c = field.element(c)
            if c:
                clean[n] = c
        if prec is not None:
            prec = int(prec)
        while (
            level > 0
            and all(n % p == 0 for n in clean)
            and (prec is None or prec % p == 0)
        ):
            clean = {n // p: c for n, c in clean.items()}
            prec = None if prec is None else prec // p
            level -= 1
        self.field = field
        self.level = level
        self.terms = clean
        self.prec = prec

    # Constructors

    @classmethod
    def zero(cls, field, prec=EXACT):
        """Exact zero, or O(pi^prec) when an integer precision is given."""
        return cls(field, {}, prec)

    @classmethod
    def one(cls, field):
        return cls(field, {0: 1})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {0: c})

    @classmethod
    def monomial(cls, field, exponent, coeff=1, prec=EXACT):
        """c * pi^exponent for a rational exponent with p-power denominator."""
        return cls.from_exponents(field, {Fraction(exponent): coeff}, prec)

    @classmethod
    def from_exponents(cls, field, terms, prec=EXACT):
        """Build an element from a map of rational exponents to coefficients."""
        p = field.p
        exponents = [Fraction(q) for q in terms]
        if prec is not None:
            exponents.append(Fraction(prec))
        level = max((level_of(q, p) for q in exponents), default=0)
        scale = p**level
        collected = {}
        for q, c in terms.items():
            n = int(Fraction(q) * scale)
            c = field.element(c)
            collected[n] = collected[n] + c if n in collected else c
        n_prec = None if prec is None else int(Fraction(prec) * scale)
        return cls(field, collected, n_prec, level)

    # Structure

    def _at_level(self, level):
        shift = self.field.p ** (level - self.level)
        terms = {n * shift: c for n, c in self.terms.items()}
        prec = None if self.prec is None else self.prec * shift
        return terms, prec

    def _coerce(self, other):
        if isinstance(other, LaurentElement):
            if other.field != self.field:
                raise FieldMismatch(
                    "series over different fields",
                    left=self.field,
                    right=other.field,
                )
            return other
        if isinstance(other, (int, FFElem)):
            return LaurentElement.constant(self.field, other)
        return None

    @property
    def precision(self):
        """Absolute precision as a rational, or EXACT."""
        if self.prec is None:
            return EXACT
        return Fraction(self.prec, self.field.p**self.level)

    def is_exact(self):
        return self.prec is None

    def is_zero(self):
        """True when no known term is nonzero."""
        return not self.terms

    def is_exact_zero(self):
        return not self.terms and self.prec is None

    def is_monomial(self):
        return len(self.terms) == 1 and self.prec is None

    def valuation(self):
        if self.terms:
            return Fraction(min(self.terms), self.field.p**self.level)
        if self.prec is None:
            raise ZeroValuation("the zero element has no valuation")
        raise PrecisionExhausted(
            "no known terms, valuation undetermined", precision=self.precision
        )

    def valuation_bound(self):
        """Valuation, or the precision as a lower bound when no term is known."""
        if self.terms:
            return Fraction(min(self.terms), self.field.p**self.level)
        if self.prec is None:
            return math.inf
        return self.precision

    def leading_coefficient(self):
        if not self.terms:
            self.valuation()
        return self.terms[min(self.terms)]

    def coefficient(self, exponent):
        """Coefficient of pi^exponent."""
        exponent = Fraction(exponent)
        scaled = exponent * self.field.p**self.level
        if self.prec is not None and scaled >= self.prec:
            raise PrecisionExhausted(
                "coefficient beyond the known precision",
                exponent=exponent,
                precision=self.precision,
            )
        if scaled.denominator != 1:
            return self.field.zero()
        return self.terms.get(int(scaled), self.field.zero())

    def residue(self):
        """Image of an integral element in k."""
        return self.coefficient(0)

    def is_integral(self):
        if self.prec is not None and self.prec < 0:
            raise PrecisionExhausted(
                "class modulo O is undetermined", precision=self.precision
            )
        return all(n >= 0 for n in self.terms)

    def principal_part(self):
        if self.prec is not None and self.prec < 0:
            raise PrecisionExhausted(
                "class modulo O is undetermined", precision=self.precision
            )
        return LaurentElement(
            self.field,
            {n: c for n, c in self.terms.items() if n < 0},
            EXACT,
            self.level,
        )

    def items(self):
        """Pairs (rational exponent, coefficient) in increasing order."""
        scale = self.field.p**self.level
        for n in sorted(self.terms):
            yield Fraction(n, scale), self.terms[n]

    def truncate(self, precision):
        """Forget every term of exponent >= precision."""
        if precision is None:
            return self
        cap = _ceil(Fraction(precision) * self.field.p**self.level)
        prec = cap if self.prec is None else min(self.prec, cap)
        if prec == self.prec:
            return self
        return LaurentElement(self.field, self.terms, prec, self.level)

    # Arithmetic

    @staticmethod
    def _checked(result):
        if not result.terms and result.prec is not None and result.prec < 0:
            raise PrecisionExhausted(
                "result has no known terms", precision=result.precision
            )
        return result

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        level = max(self.level, other.level)
        ta, pa = self._at_level(level)
        tb, pb = other._at_level(level)
        for n, c in tb.items():
            ta[n] = ta[n] + c if n in ta else c
        precs = [q for q in (pa, pb) if q is not None]
        prec = min(precs) if precs else None
        return self._checked(LaurentElement(self.field, ta, prec, level))

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement(
            self.field, {n: -c for n, c in self.terms.items()}, self.prec, self.level
        )

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

    def scale(self, c):
        """Multiply by a constant of k."""
        c = self.field.element(c)
        if c.is_zero():
            return LaurentElement.zero(self.field)
        return LaurentElement(
            self.field, {n: c * a for n, a in self.terms.items()}, self.prec, self.level
        )

    def __mul__(self, other):
        if isinstance(other, (int, FFElem)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentElement.zero(self.field)
        level = max(self.level, other.level)
        ta, pa = self._at_level(level)
        tb, pb = other._at_level(level)
        va = min(ta) if ta else pa
        vb = min(tb) if tb else pb
        bounds = []
        if pa is not None:
            bounds.append(pa + vb)
        if pb is not None:
            bounds.append(pb + va)
        prec = min(bounds) if bounds else None
        keys_b = sorted(tb)
        product = {}
        for n1, c1 in ta.items():
            for n2 in keys_b:
                n = n1 + n2
                if prec is not None and n >= prec:
                    break
                term = c1 * tb[n2]
                product[n] = product[n] + term if n in product else term
        return self._checked(LaurentElement(self.field, product, prec, level))

    __rmul__ = __mul__

    def power(self, n, precision=None):
        """a^n for n >= 0, truncating intermediate results at precision."""
        result = LaurentElement.one(self.field)
        base = self.truncate(precision)
        while n:
            if n & 1:
                result = (result * base).truncate(precision)
            n >>= 1
            if n:
                base = (base * base).truncate(precision)
        return result

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return self.power(n)

    def inverse(self, prec=None):
        """
        Multiplicative inverse.

        The result carries the precision propagated from the input.  An
        exact element that is not a monomial has an infinite expansion, so
        an absolute precision cap must be given for it.
        """
        if not self.terms:
            if self.prec is None:
                raise DivisionByZero("zero has no inverse")
            raise PrecisionExhausted(
                "leading term unknown, cannot invert", precision=self.precision
            )
        v = min(self.terms)
        lead = self.terms[v]
        lead_inv = lead.inverse()
        if self.is_monomial():
            return LaurentElement(self.field, {-v: lead_inv}, EXACT, self.level)
        target = None if self.prec is None else self.prec - 2 * v
        if prec is not None:
            cap = _ceil(Fraction(prec) * self.field.p**self.level)
            target = cap if target is None else min(target, cap)
        if target is None:
            raise PrecisionExhausted(
                "inverse of an exact non-monomial needs a precision cap",
                element=str(self),
            )
        count = target + v
        unit = {n - v: c * lead_inv for n, c in self.terms.items() if n != v}
        unit_keys = sorted(unit)
        series = []
        for m in range(max(count, 0)):
            if m == 0:
                series.append(self.field.one())
                continue
            acc = self.field.zero()
            for k in unit_keys:
                if k > m:
                    break
                s = series[m - k]
                if s:
                    acc = acc + unit[k] * s
            series.append(-acc)
        terms = {m - v: s * lead_inv for m, s in enumerate(series) if s}
        return self._checked(LaurentElement(self.field, terms, target, self.level))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def p_power(self, n):
        """
        a^{p^n}.  Exponents and precision are multiplied by p^n; for n < 0
        the level grows by |n| before renormalization.
        """
        if n == 0:
            return self
        terms = {k: c.frobenius_pow(n) for k, c in self.terms.items()}
        if n > 0:
            q = self.field.p**n
            return LaurentElement(
                self.field,
                {k * q: c for k, c in terms.items()},
                None if self.prec is None else self.prec * q,
                self.level,
            )
        return LaurentElement(self.field, terms, self.prec, self.level - n)

    # Comparison and display

    def __eq__(self, other):
        if isinstance(other, (int, FFElem)):
            other = LaurentElement.constant(self.field, other)
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return (
            self.field == other.field
            and self.level == other.level
            and self.prec == other.prec
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.level, self.prec, frozenset(self.terms.items())))

    def __str__(self):
        parts = [_format_term(q, c) for q, c in self.items()]
        if self.prec is not None:
            parts.append(f"O({_format_power(self.precision)})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"LaurentElement({self})"


def _format_power(q):
    if q == 1:
        return "pi"
    if q.denominator == 1:
        return f"pi^{q.numerator}"
    return f"pi^({q})"


def _format_term(q, c):
    coeff = format_ff(c)
    if q == 0:
        return coeff
    if " + " in coeff:
        coeff = f"({coeff})"
    monomial = _format_power(q)
    return monomial if coeff == "1" else f"{coeff}*{monomial}"


def _iteration_budget(precision, level, p):
    slack = getattr(settings, "DRINFELD_ITERATION_SLACK", 2)
    return _ceil(Fraction(precision) * p**level) + slack


def unit_root(y, n, prec):
    """
    Solve x^n = y with x = 1 mod m_K by Newton iteration, p not dividing n.

    Convergence is quadratic and the solution satisfies v(x - 1) >= v(y - 1).
    """
    field = y.field
    if n % field.p == 0:
        raise ValueError("root degree must be prime to p")
    one = LaurentElement.one(field)
    if (y - one).valuation_bound() <= 0:
        raise NotAUnit("right-hand side is not a principal unit", y=str(y))
    if y == one:
        return one
    n_inv = field.element(n).inverse()
    x = one.truncate(prec)
    for iteration in range(_iteration_budget(prec, y.level, field.p)):
        residual = (x.power(n, prec) - y).truncate(prec)
        if residual.is_zero():
            logger.debug(f"unit root of degree {n} settled after {iteration} steps")
            return x
        derivative = x.power(n - 1, prec).inverse(prec=prec)
        x = (x - (residual * derivative).scale(n_inv)).truncate(prec)
    raise NonConvergence("Newton iteration exceeded its budget", degree=n, prec=prec)


def artin_schreier_root(z, c, r, prec):
    """
    Solve x = z + c * x^{p^r} in m_K by fixed-point iteration.

    Requires v(z) > 0 and v(c) >= 0; the root satisfies v(x) >= v(z) and
    each step gains at least one unit of precision.
    """
    field = z.field
    if z.valuation_bound() <= 0:
        raise NonConvergence("fixed-point seed is not in the maximal ideal", z=str(z))
    x = z.truncate(prec)
    budget = _iteration_budget(prec, max(z.level, c.level), field.p)
    for iteration in range(budget):
        nxt = (z + c * x.p_power(r).truncate(prec)).truncate(prec)
        if nxt == x:
            logger.debug(f"fixed point settled after {iteration} steps")
            return x
        x = nxt
    raise NonConvergence("fixed-point iteration exceeded its budget", prec=prec)
