"""
Pass/fail matrices for --verify.

Each function replays the invariants of one command on the objects it
computed and returns {check name: bool}.  A failed check is logged, never
raised: the report carries the matrix and the exit code stays 0.
"""

import logging
import math

from drinfeld.lift import check_endomorphism, commutes, lift_bounds
from filtration.classes import decompose
from kummer.chi import chi_class, lift_pair, resolve_parameters
from ore.tau_series import series_mul
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)

# t^2 as residues of F_p[t], for the commutation check beyond t
T_SQUARED = [0, 0, 1]


def _logged(checks, subject):
    for name, passed in checks.items():
        if not passed:
            logger.warning(f"check {name} failed for {subject}")
    return checks


def inverts(x, inverse):
    """x * x^-1 = 1 to the common depth and precision."""
    product = series_mul(x, inverse)
    return all((c - 1 if j == 0 else c).is_zero() for j, c in product.items())


def module_checks(spec):
    return _logged(
        {
            "reduction_keeps_rank": spec.phibar_t.degree() == spec.r,
            "height_at_most_rank": 1 <= spec.h <= spec.r,
            "deformation_positive": spec.w > 0,
        },
        spec,
    )


def tate_checks(table, rank_M):
    pres_rank = table.rank_at("pres")
    return _logged(
        {
            "rank_adds_lattice_rank": table.r_phi == table.r_psi + rank_M,
            "rank_at_pres_in_range": 0 <= pres_rank <= table.r_phi,
            "rank_at_pres_drops_by_height": table.r_phi - pres_rank == table.h,
        },
        table,
    )


def lift_checks(spec, x, inverse, endomorphisms=()):
    bounds = lift_bounds(spec, x, inverse)
    checks = {
        "commutes_with_t": commutes(spec, x),
        "commutes_with_t_squared": commutes(spec, x, T_SQUARED),
        "lift_bound": bounds["x_holds"],
        "inverse_bound": bounds["inverse_holds"],
        "two_sided_inverse": inverts(x, inverse) and inverts(inverse, x),
    }
    for index, h in enumerate(endomorphisms):
        result = check_endomorphism(spec, x, h)
        checks[f"endomorphism_{index}_compatible"] = (
            result["commutes"] and result["compatible"]
        )
    return _logged(checks, spec)


def chi_checks(spec, xi, eta, depth, prec):
    back = chi_class(spec, eta, depth, prec)
    original = decompose(xi)
    checks = {
        "round_trip": back == original,
        "j_preserved": eta.is_zero() or eta.j_invariant() == original.j_invariant(),
    }
    head = xi.principal_part()
    if not head.is_exact_zero() and head.valuation().denominator == 1:
        # v(xi) = -i gives chi^-1([xi]) - [xi] in W_i
        i = int(-head.valuation())
        checks["difference_in_W"] = (eta - original).w_membership(i)
    return _logged(checks, spec)


def _filtration_decreasing(report):
    ranks = [row.rank for row in report.filtration]
    last = report.filtration[-1]
    return (
        all(a >= b for a, b in zip(ranks, ranks[1:]))
        and last.i == report.conductor + 1
        and last.rank == 0
    )


def _replays(echelon):
    try:
        return echelon.replay() == echelon.rows
    except ValueError:
        return False


def inertia_checks(spec, lattice, report, depth=None, prec=None):
    """
    The lift, chi on every generator, the rank chain, the break and
    j-invariant statements, the echelon certificate and the filtration shape.
    """
    bounds = report.bounds
    checks = {}
    if len(lattice):
        valuation = -lattice.max_abs_valuation()
        depth, prec = resolve_parameters(spec, valuation, depth, prec)
        x, inverse = lift_pair(spec, depth, prec)
        checks.update(lift_checks(spec, x, inverse))
        checks["chi_round_trip"] = all(
            chi_class(spec, row, depth, prec, lift=x) == decompose(m)
            for m, row in zip(lattice, report.rows)
        )
    echelon = report.echelon
    checks.update(
        {
            "rank_chain": bounds["iRankBound_ok"],
            "jump_breaks_in_S": bounds["iMJump_ok"],
            "j_preserved": bounds["j_preserved"],
            "certificate_replay": _replays(echelon),
            "certificate_unwind": echelon.unwind() == echelon.inputs,
            "filtration_decreasing": _filtration_decreasing(report),
            "distinct_j_forces_open": (
                not bounds["iOpenness_sufficient"] or report.open
            ),
            "rank_one_open": not bounds["rank_one_open"] or report.open,
        }
    )
    return _logged(checks, lattice)


def quotient_checks(spec, result, samples=()):
    """
    e_B vanishes on M_B and is additive on samples of valuation >= -B paired
    with basis vectors and with each other; phi keeps the constant term of psi.
    """
    exponential = result.exponential
    bound = exponential.bound
    points = exponential.points()
    vectors = list(exponential.basis.vectors)
    monomials = [
        LaurentElement.monomial(spec.field, -n) for n in range(1, math.floor(bound) + 1)
    ]
    samples = monomials + [
        s for s in samples if not s.is_exact_zero() and s.valuation() >= -bound
    ]
    pairs = [(a, b) for a in samples for b in vectors]
    pairs += list(zip(samples, samples[1:]))
    checks = {
        "kernel": all(exponential.apply(m).is_zero() for m in points),
        "additive": all(
            (exponential.apply(a + b) - exponential.apply(a) - exponential.apply(b))
            .is_zero()
            for a, b in pairs
        ),
        "constant_term_kept": (
            result.phi_t.coefficient(0) - spec.phi_t.coefficient(0)
        ).is_zero(),
        "residual_in_maximal_ideal": result.residual_valuation > 0,
    }
    return _logged(checks, spec)
