"""
Skew echelon form of finitely many classes under left k[tau, tau^-1]-combinations.
"""

import logging
from dataclasses import dataclass, field

from core.utils import coordinate_rows, fp_rank
from filtration.classes import PrincipalClass
from ore.polynomials import OrePoly, SkewLaurentPoly, left_divmod

logger = logging.getLogger(__name__)

SCALE = "scale"
ELIMINATE = "eliminate"
DROP = "drop"


def _tau(field_spec, n):
    return SkewLaurentPoly(field_spec, {n: 1})


def _scale(row, n):
    return row if n == 0 else _tau(row.field, n) * row


@dataclass
class EchelonForm:
    """
    Rows with strictly decreasing top index, their pivots and the row
    operations that produced them from inputs.
    """

    inputs: list
    rows: list
    pivots: tuple
    order: list
    certificate: list = field(default_factory=list)

    @property
    def rank(self):
        return len(self.rows)

    def replay(self):
        """Apply the certificate to the inputs; returns the echelon rows."""
        state = list(self.inputs)
        for op in self.certificate:
            kind, target = op[0], op[1]
            if kind == SCALE:
                state[target] = _scale(state[target], op[2])
            elif kind == ELIMINATE:
                source, q = op[2], op[3]
                state[target] = state[target] - q * state[source]
            elif kind == DROP:
                if not state[target].is_zero():
                    raise ValueError(f"certificate drops a nonzero row {target}")
                state[target] = None
        rows = [state[i] for i in self.order]
        logger.debug(f"replayed {len(self.certificate)} row operations")
        return rows

    def unwind(self):
        """Invert the certificate on the echelon rows; returns the inputs."""
        field_spec = self.inputs[0].field if self.inputs else None
        state = [PrincipalClass.zero(field_spec) for _ in self.inputs]
        for i, row in zip(self.order, self.rows):
            state[i] = row
        for op in reversed(self.certificate):
            kind, target = op[0], op[1]
            if kind == SCALE:
                state[target] = _scale(state[target], -op[2])
            elif kind == ELIMINATE:
                source, q = op[2], op[3]
                state[target] = state[target] + q * state[source]
        return state


def _normalize(row):
    """Smallest n with every f_j of tau^n * row in k[tau] and some f_j(0) != 0."""
    return -min(f.lowest_degree() for f in row.decomp.values())


def skew_echelon(rows):
    """
    Bring rows to echelon form by left Euclid on shared top indices.

    Rows sharing the largest duplicated top index are taken in input order;
    the row whose top entry has the larger degree is reduced by the other.
    """
    inputs = list(rows)
    state = list(inputs)
    certificate = []
    live = []
    for i, row in enumerate(state):
        if row.is_zero():
            certificate.append((DROP, i))
            continue
        n = _normalize(row)
        if n:
            state[i] = _scale(row, n)
            certificate.append((SCALE, i, n))
        live.append(i)

    while True:
        tops = {}
        for i in live:
            tops.setdefault(state[i].top_index(), []).append(i)
        shared = [j for j, members in tops.items() if len(members) > 1]
        if not shared:
            break
        j = max(shared)
        a, b = tops[j][:2]
        ga = state[a].coefficient(j).to_ore()
        gb = state[b].coefficient(j).to_ore()
        if ga.degree() < gb.degree():
            a, b, ga, gb = b, a, gb, ga
        q, _ = left_divmod(ga, gb)
        state[a] = state[a] - q * state[b]
        certificate.append((ELIMINATE, a, b, q))
        logger.debug(f"eliminated at index {j}: row {a} -= ({q}) * row {b}")
        if state[a].is_zero():
            certificate.append((DROP, a))
            state[a] = None
            live.remove(a)

    order = sorted(live, key=lambda i: state[i].top_index(), reverse=True)
    result = [state[i] for i in order]
    pivots = tuple(sorted(row.top_index() for row in result))
    logger.info(f"echelon form: pivots {list(pivots)}, rank {len(result)}")
    return EchelonForm(
        inputs=inputs,
        rows=result,
        pivots=pivots,
        order=order,
        certificate=certificate,
    )


def span_dimension(rows, degree):
    """
    dim over F_p of the span of c * tau^e * row for c in k, 0 <= e <= degree.

    For large degree the increments equal d * rank_R of the rows.
    """
    rows = [row for row in rows if not row.is_zero()]
    if not rows:
        return 0
    field_spec = rows[0].field
    basis = field_spec.basis()
    maps = []
    for row in rows:
        for e in range(degree + 1):
            for c in basis:
                image = OrePoly(field_spec, {e: c}) * row
                maps.append(
                    {
                        (j, nu): coeff
                        for j, f in image.decomp.items()
                        for nu, coeff in f.items()
                    }
                )
    _, matrix = coordinate_rows(maps, field_spec.d)
    return fp_rank(matrix, field_spec.p)
