"""
Forms validating the blocks of an input document.

Literals follow one grammar everywhere: an element of k is a residue or a
list of d residues; a series is {"terms": [[n, e, c], ...], "prec": P} with
each term c * pi^(n / p^e); a twisted polynomial maps tau-exponents to
series.
"""

from fractions import Fraction

from django import forms
from django.core.exceptions import ValidationError

from core.exceptions import DrinfeldError
from fields.finite import FieldSpec
from kummer.lattice import LatticeSpec
from ore.polynomials import LOCAL, OrePoly
from series.laurent import EXACT, LaurentElement


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def parse_ff(field, literal):
    if _is_int(literal):
        return field.element(literal)
    if isinstance(literal, list) and len(literal) == field.d:
        if all(_is_int(c) for c in literal):
            return field.element(literal)
    raise ValidationError(
        f"{literal!r} is not an element of k: give a residue or {field.d} residues",
        code="ff",
    )


def parse_precision(field, literal):
    if literal is None or literal == "exact":
        return EXACT
    if _is_int(literal):
        return Fraction(literal)
    if isinstance(literal, list) and len(literal) == 2 and all(map(_is_int, literal)):
        n, e = literal
        if e >= 0:
            return Fraction(n, field.p**e)
    raise ValidationError(f"{literal!r} is not a precision", code="prec")


def parse_series(field, literal):
    """A series literal, or a bare element of k for a constant."""
    if not isinstance(literal, dict):
        return LaurentElement.constant(field, parse_ff(field, literal))
    if "terms" not in literal:
        raise ValidationError("series literal needs a terms list", code="series")
    terms = {}
    for term in literal["terms"]:
        if not isinstance(term, list) or len(term) != 3:
            raise ValidationError(f"{term!r} is not a term [n, e, c]", code="series")
        n, e, c = term
        if not (_is_int(n) and _is_int(e)) or e < 0:
            raise ValidationError(f"{term!r} has a bad exponent", code="series")
        q = Fraction(n, field.p**e)
        c = parse_ff(field, c)
        terms[q] = terms[q] + c if q in terms else c
    prec = parse_precision(field, literal.get("prec"))
    return LaurentElement.from_exponents(field, terms, prec)


def parse_ore(field, literal):
    if not isinstance(literal, dict) or not literal:
        raise ValidationError(
            "twisted polynomial must map tau-exponents to series", code="ore"
        )
    coeffs = {}
    for key, value in literal.items():
        try:
            i = int(key)
        except (TypeError, ValueError):
            raise ValidationError(f"{key!r} is not a tau-exponent", code="ore")
        if i < 0:
            raise ValidationError(f"negative tau-exponent {i}", code="ore")
        coeffs[i] = parse_series(field, value)
    return OrePoly(field, coeffs, LOCAL)


def _auto_int(value, name):
    if value in (None, "", "auto"):
        return None
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f'{name} must be an integer or "auto"', code=name)
    if number < 0:
        raise ValidationError(f"{name} must be nonnegative", code=name)
    return number


class FieldForm(forms.Form):
    """
    Form for the finite field block: a prime p and the coefficients of g.
    """

    p = forms.IntegerField(min_value=2)
    g = forms.JSONField()

    def clean_g(self):
        g = self.cleaned_data["g"]
        if not isinstance(g, list) or not all(_is_int(c) for c in g):
            raise ValidationError("g must list integer coefficients from degree 0 up")
        return g

    def clean(self):
        cleaned_data = super().clean()
        if "p" in cleaned_data and "g" in cleaned_data:
            try:
                cleaned_data["spec"] = FieldSpec(cleaned_data["p"], cleaned_data["g"])
            except DrinfeldError as exc:
                raise ValidationError(str(exc), code="field")
        return cleaned_data


class FieldBoundForm(forms.Form):
    """Base for blocks whose literals are read over a known field."""

    def __init__(self, field, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.field_spec = field

    def _parse(self, parser, value):
        try:
            return parser(self.field_spec, value)
        except DrinfeldError as exc:
            raise ValidationError(str(exc), code="literal")


class ModuleForm(FieldBoundForm):
    phi_t = forms.JSONField()

    def clean_phi_t(self):
        return self._parse(parse_ore, self.cleaned_data["phi_t"])


class LatticeForm(FieldBoundForm):
    """
    Form for the lattice block: generators in K with negative valuation, an
    optional declared rank and the degree bound of the independence search.
    """

    generators = forms.JSONField(required=False)
    declared_rank = forms.IntegerField(min_value=0, required=False)
    independence_bound = forms.IntegerField(min_value=0, required=False)

    def clean_generators(self):
        generators = self.cleaned_data.get("generators") or []
        if not isinstance(generators, list):
            raise ValidationError("generators must be a list of series")
        return [self._parse(parse_series, m) for m in generators]

    def clean(self):
        cleaned_data = super().clean()
        if "generators" not in cleaned_data:
            return cleaned_data
        try:
            cleaned_data["lattice"] = LatticeSpec(
                self.field_spec,
                cleaned_data["generators"],
                declared_rank=cleaned_data.get("declared_rank"),
                independence_bound=cleaned_data.get("independence_bound"),
            )
        except DrinfeldError as exc:
            raise ValidationError(str(exc), code="lattice")
        return cleaned_data


class ParamsForm(forms.Form):
    depth = forms.CharField(required=False)
    prec = forms.CharField(required=False)
    bound = forms.CharField(required=False)

    def clean_depth(self):
        return _auto_int(self.cleaned_data.get("depth"), "depth")

    def clean_prec(self):
        return _auto_int(self.cleaned_data.get("prec"), "prec")

    def clean_bound(self):
        value = self.cleaned_data.get("bound")
        if value in (None, ""):
            return None
        try:
            bound = Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValidationError(f"{value!r} is not a rational bound")
        if bound <= 0:
            raise ValidationError("bound must be positive")
        return bound


class ElementForm(FieldBoundForm):
    element = forms.JSONField()

    def clean_element(self):
        return self._parse(parse_series, self.cleaned_data["element"])


class EndomorphismsForm(FieldBoundForm):
    endomorphisms = forms.JSONField(required=False)

    def clean_endomorphisms(self):
        value = self.cleaned_data.get("endomorphisms") or []
        if not isinstance(value, list):
            raise ValidationError("endomorphisms must be a list of polynomials")
        return [self._parse(parse_ore, h) for h in value]
