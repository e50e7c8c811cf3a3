"""
Period lattices M in K and the bounded search for A-relations among their
generators.
"""

import logging
from dataclasses import dataclass

from django.conf import settings

from core.exceptions import InvalidLattice, RankInconsistent
from core.utils import coordinate_rows, fp_nullspace, fp_rank
from drinfeld.modules import ensure_validated
from series.laurent import LaurentElement

logger = logging.getLogger(__name__)


class LatticeSpec:
    """
    Generators m_1..m_n of M with v(m_i) < 0, all in K.

    declared_rank is the user's rank_A(M); independence_bound is the degree
    D of the relation search.
    """

    def __init__(
        self, field, generators, declared_rank=None, independence_bound=None
    ):
        clean = []
        for i, m in enumerate(generators):
            if not isinstance(m, LaurentElement):
                m = LaurentElement.constant(field, m)
            if m.level != 0:
                raise InvalidLattice("generators must lie in K", index=i, m=str(m))
            if m.is_zero() or m.valuation() >= 0:
                raise InvalidLattice(
                    "generators must have negative valuation", index=i, m=str(m)
                )
            clean.append(m)
        if independence_bound is None:
            independence_bound = settings.DRINFELD_INDEPENDENCE_BOUND
        self.field = field
        self.generators = clean
        self.declared_rank = len(clean) if declared_rank is None else declared_rank
        self.independence_bound = independence_bound
        if self.declared_rank < 0 or independence_bound < 0:
            raise InvalidLattice(
                "declared rank and independence bound must be nonnegative"
            )

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def min_abs_valuation(self):
        return min(-m.valuation() for m in self.generators)

    def max_abs_valuation(self):
        return max(-m.valuation() for m in self.generators)

    def without(self, indices, declared_rank=None):
        """The sub-lattice spanned by the generators not listed in indices."""
        kept = [m for i, m in enumerate(self.generators) if i not in set(indices)]
        if declared_rank is None:
            declared_rank = min(self.declared_rank, len(kept))
        return LatticeSpec(self.field, kept, declared_rank, self.independence_bound)

    def __repr__(self):
        generators = [str(m) for m in self.generators]
        return f"LatticeSpec({generators}, rank={self.declared_rank})"


@dataclass(frozen=True)
class IndependenceCheck:
    bound: int
    vectors: int
    rank: int
    relations: int

    @property
    def independent(self):
        return self.relations == 0


def iterate_psi(spec, lattice, bound):
    """Rows psi_{t^e}(m_i) for 0 <= e <= bound, generator-major."""
    points = []
    for i, m in enumerate(lattice):
        current = m
        for e in range(bound + 1):
            points.append((i, e, current))
            current = spec.phi_t.apply(current)
    return points


def check_independence(spec, lattice, bound=None):
    """
    Search for sum_i psi_{a_i}(m_i) in O with deg a_i <= D, not all a_i zero.

    Such a combination is an F_p-relation among the principal parts of the
    psi_{t^e}(m_i), so the search is a kernel computation.  A relation
    contradicts declared_rank = n.
    """
    spec = ensure_validated(spec)
    bound = lattice.independence_bound if bound is None else bound
    n = len(lattice)
    if lattice.declared_rank > n:
        raise RankInconsistent(
            "declared rank exceeds the number of generators",
            declared_rank=lattice.declared_rank,
            generators=n,
        )
    if n == 0:
        return IndependenceCheck(bound=bound, vectors=0, rank=0, relations=0)
    points = iterate_psi(spec, lattice, bound)
    maps = [dict(value.principal_part().items()) for _, _, value in points]
    _, rows = coordinate_rows(maps, spec.d)
    rank = fp_rank(rows, spec.p)
    relations = len(points) - rank
    if relations:
        kernel = fp_nullspace(rows, spec.p)
        logger.info(f"{relations} relations of degree <= {bound} among generators")
        if lattice.declared_rank == n:
            raise RankInconsistent(
                "generators are A-dependent or meet O",
                bound=bound,
                relation=kernel[0] if kernel else None,
            )
    logger.debug(f"independence verified to degree {bound}: rank {rank}")
    return IndependenceCheck(
        bound=bound, vectors=len(points), rank=rank, relations=relations
    )
