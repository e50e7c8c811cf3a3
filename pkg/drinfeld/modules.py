"""
Drinfeld F_p[t]-modules over K given by psi_t, with their reduction data.
"""

import logging
import math
from dataclasses import dataclass

from core.exceptions import BadReduction, NotADrinfeldModule, PrecisionExhausted
from ore.polynomials import LOCAL, OrePoly
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)

# w = v(psi - phibar) is infinite exactly when psi has coefficients in k.
EXACT_REDUCTION = math.inf


def format_polynomial(coeffs, variable="t"):
    """Render residues listed from degree 0 upward, e.g. [1, 1, 1] -> t^2 + t + 1."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        monomial = variable if i == 1 else f"{variable}^{i}"
        parts.append(monomial if c == 1 else f"{c}*{monomial}")
    return " + ".join(parts) if parts else "0"


class DrinfeldModuleSpec:
    """
    psi_t = sum_i f_i tau^i with integral coefficients in K.

    The derived invariants (r, phibar_t, w, pres, h) are filled in by
    validate().
    """

    def __init__(self, field, phi_t):
        if not isinstance(phi_t, OrePoly):
            phi_t = OrePoly(field, phi_t, LOCAL)
        elif phi_t.ring != LOCAL:
            phi_t = phi_t.lift()
        self.field = field
        self.phi_t = phi_t
        self.validated = False
        self.r = None
        self.phibar_t = None
        self.w = None
        self.pres = None
        self.h = None
        self.good_reduction = None

    @property
    def d(self):
        return self.field.d

    @property
    def p(self):
        return self.field.p

    @property
    def exact_reduction(self):
        return self.w == EXACT_REDUCTION

    def coefficient(self, i):
        return self.phi_t.coefficient(i)

    def reduced_coefficient(self, i):
        return self.phibar_t.coefficient(i)

    def evaluate(self, a, reduced=False):
        """psi_a, or phibar_a when reduced, for a in F_p[t] given by residues."""
        base = self.phibar_t if reduced else self.phi_t
        return base.evaluate(a)

    def __str__(self):
        return f"psi_t = {self.phi_t}"

    def __repr__(self):
        return f"DrinfeldModuleSpec({self.field!r}, {self.phi_t})"


def validate(spec):
    """Check good reduction and compute r, phibar_t, w, pres and h."""
    phi_t = spec.phi_t
    r = phi_t.degree()
    if r < 1:
        raise NotADrinfeldModule("psi_t must have tau-degree at least 1", degree=r)
    for i, c in phi_t.items():
        if c.level != 0:
            raise NotADrinfeldModule(
                "coefficients must lie in K", index=i, coefficient=str(c)
            )
        if c.prec is not None and c.prec <= 0:
            raise PrecisionExhausted(
                "coefficient residue is not determined", index=i, coefficient=str(c)
            )
        if not c.is_integral():
            raise NotADrinfeldModule(
                "coefficients must be integral", index=i, coefficient=str(c)
            )
    phibar_t = phi_t.reduce()
    if phibar_t.degree() != r:
        raise BadReduction(
            "leading coefficient lies in the maximal ideal",
            leading=str(phi_t.leading_coefficient()),
        )

    w = EXACT_REDUCTION
    for i, c in phi_t.items():
        diff = c - LaurentElement.constant(spec.field, c.residue())
        if not diff.is_exact_zero():
            w = min(w, diff.valuation_bound())

    pres = phibar_t.coefficient(0).minimal_polynomial()
    phibar_pres = phibar_t.evaluate(pres)
    lowest = phibar_pres.lowest_degree()
    degree = len(pres) - 1
    if lowest % degree:
        raise NotADrinfeldModule(
            "height is not an integer", lowest_degree=lowest, pres=pres
        )

    spec.r = r
    spec.phibar_t = phibar_t
    spec.w = w
    spec.pres = pres
    spec.h = lowest // degree
    spec.good_reduction = True
    spec.validated = True
    logger.info(
        f"validated {spec}: r={r}, w={w}, pres={format_polynomial(pres)}, h={spec.h}"
    )
    return spec


def ensure_validated(spec):
    return spec if spec.validated else validate(spec)


@dataclass(frozen=True)
class TateRankTable:
    """Ranks of the p-adic Tate modules: r_phi - h at pres, r_phi elsewhere."""

    r_psi: int
    r_phi: int
    h: int
    pres: tuple

    def rank_at(self, prime):
        """prime is "pres" or any other prime of F_p[t]."""
        if prime == "pres" or tuple(prime) == self.pres:
            return self.r_phi - self.h
        return self.r_phi

    @property
    def rule(self):
        return "rank = r_phi - h at pres, r_phi elsewhere"

    def as_dict(self):
        return {
            "r_psi": self.r_psi,
            "r_phi": self.r_phi,
            "h": self.h,
            "pres": format_polynomial(list(self.pres)),
            "rank_at_pres": self.rank_at("pres"),
            "rank_elsewhere": self.r_phi,
            "rule": self.rule,
        }


def tate_rank_table(spec, rank_M):
    spec = ensure_validated(spec)
    table = TateRankTable(
        r_psi=spec.r, r_phi=spec.r + rank_M, h=spec.h, pres=tuple(spec.pres)
    )
    assert 0 <= table.h <= table.r_psi
    return table
