"""
JSON-ready dictionaries for the command reports.

Rationals are written as integers when integral and as "n/d" strings
otherwise; an infinite valuation is written as "inf".  Series and twisted
polynomial coefficients are written in their display form.
"""

import json
import math
from fractions import Fraction

from drinfeld.modules import format_polynomial
from fields.finite import ff_literal
from ore.polynomials import format_scalar


def rational(value):
    if value is None:
        return None
    if value == math.inf:
        return "inf"
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return str(value)


def ore_poly(f):
    return {str(i): format_scalar(c) for i, c in f.items()}


def tau_series(x):
    """Known coefficients x_j, j = 0, -1, ..., exact zeros omitted."""
    return {str(j): str(c) for j, c in x.items() if not c.is_exact_zero()}


def principal_class(c):
    """The class as {j: [[nu, coefficient of tau^nu in f_j], ...]}."""
    return {
        str(j): [[nu, ff_literal(coeff)] for nu, coeff in f.items()]
        for j, f in sorted(c.decomp.items())
    }


def module_report(spec):
    return {
        "p": spec.p,
        "d": spec.d,
        "r": spec.r,
        "phi_t": ore_poly(spec.phi_t),
        "phibar_t": ore_poly(spec.phibar_t),
        "w": rational(spec.w),
        "pres": format_polynomial(list(spec.pres)),
        "h": spec.h,
        "good_reduction": spec.good_reduction,
        "exact_reduction": spec.exact_reduction,
    }


def bounds_report(bounds):
    return {
        key: rational(value) if isinstance(value, (Fraction, float)) else value
        for key, value in bounds.items()
    }


def inertia_report(report):
    return {
        "d": report.d,
        "r_psi": report.r_psi,
        "h": report.h,
        "pres": format_polynomial(report.pres),
        "w": rational(report.w),
        "declared_rank": report.declared_rank,
        "S": list(report.S),
        "rank_R": report.rank_R,
        "conductor": report.conductor,
        "image_rank": report.image_rank,
        "open": report.open,
        "filtration": [
            {
                "i": row.i,
                "rank": row.rank,
                "classification": row.classification,
                "image_infinite": row.image_infinite,
            }
            for row in report.filtration
        ],
        "tate": report.tate.as_dict(),
        "bounds": report.bounds,
        "local_conductors": report.local_conductors,
        "independence_verified_to": report.independence_verified_to,
        "rows": [principal_class(row) for row in report.rows],
        "grJK_rule": report.grJK_rule,
        "graded_ranks": report.graded_ranks,
    }


def quotient_report(result):
    exponential = result.exponential
    return {
        "bound": rational(exponential.bound),
        "prec": exponential.prec,
        "lattice_dimension": exponential.basis.dimension,
        "lattice_basis": [str(m) for m in exponential.basis.vectors],
        "e": ore_poly(exponential.polynomial()),
        "phi_t": ore_poly(result.phi_t),
        "rank": result.rank,
        "residual_valuation": rational(result.residual_valuation),
        "tail_valuation": rational(result.tail_valuation),
        "certified": result.certified,
    }


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
