"""
The structure report of the inertia image on the modified adelic Tate module.

All quantities are read off the echelon form of Mbar: the breaks S, the
R-rank, the conductor, the filtration ranks and the openness criterion.
"""

import logging
from dataclasses import dataclass, field

from core.exceptions import RankInconsistent
from drinfeld.modules import ensure_validated, tate_rank_table
from filtration.classes import GRADED_RULE, decompose, graded_rank

from .chi import build_Mbar
from .echelon import skew_echelon
from .lattice import check_independence

logger = logging.getLogger(__name__)

FINITE = "finite"
FREE_RANK_D = "free_rank_d"
ZERO = "zero"

GRJK_RULE = GRADED_RULE


@dataclass(frozen=True)
class FiltrationRow:
    i: int
    rank: int
    classification: str

    @property
    def image_infinite(self):
        return self.rank > 0


@dataclass
class InertiaReport:
    d: int
    r_psi: int
    h: int
    pres: list
    w: object
    declared_rank: int
    S: list
    rank_R: int
    conductor: int
    image_rank: int
    open: bool
    filtration: list
    tate: object
    bounds: dict
    local_conductors: dict
    independence_verified_to: int
    rows: list = field(default_factory=list)
    echelon: object = None
    graded_ranks: list = field(default_factory=list)
    grJK_rule: str = GRJK_RULE


def filtration_table(S, d):
    """Rows (i, d * |{s in S : s >= i}|, classification) for 0 <= i <= f + 1."""
    conductor = max(S, default=0)
    table = []
    for i in range(conductor + 2):
        rank = d * sum(1 for s in S if s >= i)
        if i in S:
            classification = FREE_RANK_D
        elif rank > 0:
            classification = FINITE
        else:
            classification = ZERO
        table.append(FiltrationRow(i=i, rank=rank, classification=classification))
    return table


def graded_table(conductor, d, p):
    """Ranks over k of gr^i for 0 <= i <= f + 1."""
    return [d * graded_rank(i, p) for i in range(conductor + 2)]


def generator_j_set(lattice):
    """j-invariants of the generators: a lower bound for |j(M)|."""
    return sorted({decompose(m).j_invariant() for m in lattice})


def jump_breaks(lattice, p):
    """Indices i with a generator of valuation exactly -i, p not dividing i."""
    breaks = set()
    for m in lattice:
        v = m.valuation()
        if v.denominator == 1 and (-v) % p:
            breaks.add(int(-v))
    return sorted(breaks)


def _bounds(spec, lattice, rows, S, rank_R):
    j_set = generator_j_set(lattice)
    declared = lattice.declared_rank
    breaks = jump_breaks(lattice, spec.p)
    j_preserved = all(
        row.j_invariant() == decompose(m).j_invariant()
        for m, row in zip(lattice, rows)
    )
    bounds = {
        "j_set_of_generators": j_set,
        "j_set_is_lower_bound": True,
        "iRankBound_ok": len(j_set) <= rank_R <= declared,
        "iRankBound_strict": len(j_set) < rank_R,
        "iOpenness_sufficient": len(j_set) == declared,
        "iMJump_breaks": breaks,
        "iMJump_ok": set(breaks) <= set(S),
        "j_preserved": j_preserved,
        "rank_one_open": declared == 1,
    }
    for name in ("iRankBound_ok", "iMJump_ok", "j_preserved"):
        if not bounds[name]:
            logger.error(f"invariant {name} failed for {lattice}")
    return bounds


def inertia_report(spec, lattice, progress=None, depth=None, prec=None):
    spec = ensure_validated(spec)
    independence = check_independence(spec, lattice)
    rows = build_Mbar(spec, lattice, progress, depth, prec)
    echelon = skew_echelon(rows)
    S = list(echelon.pivots)
    rank_R = echelon.rank
    declared = lattice.declared_rank
    if declared < rank_R:
        raise RankInconsistent(
            "declared rank is below rank_R(Mbar)",
            declared_rank=declared,
            rank_R=rank_R,
        )
    conductor = max(S, default=0)
    is_open = declared == rank_R
    bounds = _bounds(spec, lattice, rows, S, rank_R)
    if bounds["iOpenness_sufficient"] and not is_open:
        logger.error("distinct j-invariants did not force an open image")
    if bounds["rank_one_open"] and not is_open:
        logger.error("rank-one lattice with a non-open image")
    tate = tate_rank_table(spec, declared)
    local_conductors = {
        "pres": conductor if tate.rank_at("pres") > 0 else 0,
        "other": conductor if tate.r_phi > 0 else 0,
    }
    report = InertiaReport(
        d=spec.d,
        r_psi=spec.r,
        h=spec.h,
        pres=list(spec.pres),
        w=spec.w,
        declared_rank=declared,
        S=S,
        rank_R=rank_R,
        conductor=conductor,
        image_rank=spec.d * rank_R,
        open=is_open,
        filtration=filtration_table(S, spec.d),
        tate=tate,
        bounds=bounds,
        local_conductors=local_conductors,
        independence_verified_to=independence.bound,
        rows=rows,
        echelon=echelon,
        graded_ranks=graded_table(conductor, spec.d, spec.p),
    )
    logger.info(
        f"inertia report: S={S}, rank_R={rank_R}, conductor={conductor}, "
        f"open={is_open}"
    )
    return report


def sublattice_report(spec, lattice, dropped, declared_rank=None):
    """The report for the lattice spanned by the generators not in dropped."""
    return inertia_report(spec, lattice.without(dropped, declared_rank))
