"""
Linear algebra over F_p shared by the apps, on top of sympy's DomainMatrix.
"""

from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix


def prime_field(p):
    return GF(p, symmetric=False)


def fp_matrix(rows, p, width=None):
    """DomainMatrix over F_p from integer rows padded to a common width."""
    width = max((len(row) for row in rows), default=0) if width is None else width
    dense = [[ZZ(c) for c in row] + [ZZ(0)] * (width - len(row)) for row in rows]
    return DomainMatrix(dense, (len(dense), width), ZZ).convert_to(prime_field(p))


def fp_rank(rows, p):
    if not rows or not any(any(row) for row in rows):
        return 0
    return fp_matrix(rows, p).rank()


def fp_rref(rows, p):
    """Reduced row echelon form as integer rows, with the pivot columns."""
    if not rows or not rows[0]:
        return [], ()
    domain = prime_field(p)
    reduced, pivots = fp_matrix(rows, p).rref()
    dense = [[int(domain.to_int(c)) % p for c in row] for row in reduced.to_list()]
    return dense[: len(pivots)], tuple(pivots)


def fp_nullspace(rows, p):
    """Basis of the left kernel: the F_p-relations among the rows."""
    if not rows:
        return []
    if not rows[0]:
        return [[int(i == k) for i in range(len(rows))] for k in range(len(rows))]
    domain = prime_field(p)
    kernel = fp_matrix(rows, p).transpose().nullspace()
    return [[int(domain.to_int(c)) % p for c in row] for row in kernel.to_list()]


def coordinate_rows(maps, d, key=None):
    """
    Flatten maps {position: element of k} into F_p rows.

    Columns are the pairs (position, basis index) over every position that
    occurs, sorted by position with the optional key.
    """
    positions = sorted({pos for m in maps for pos in m}, key=key)
    columns = [(pos, b) for pos in positions for b in range(d)]
    index = {pos: i * d for i, pos in enumerate(positions)}
    rows = []
    for m in maps:
        row = [0] * len(columns)
        for pos, c in m.items():
            for b, value in enumerate(c.coeffs):
                row[index[pos] + b] = value
        rows.append(row)
    return columns, rows
