"""
Exact Linear Algebra - poly_core
Sparse systems over F_p or Q solved with sympy's DomainMatrix
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from .field import Coefficient, CoefficientField

logger = logging.getLogger(__name__)

SparseRow = dict[int, Coefficient]


@dataclass
class LinearSolution:
    """Outcome of solving A x = b"""
    consistent: bool
    rank: int
    augmented_rank: int
    solution: SparseRow = field(default_factory=dict)


def _dense(rows: Sequence[SparseRow], ncols: int, fld: CoefficientField) -> DomainMatrix:
    domain = fld.sympy_domain()
    zero = domain.zero
    dense = []
    for row in rows:
        line = [zero] * ncols
        for j, value in row.items():
            if value:
                line[j] = fld.to_domain(domain, value)
        dense.append(line)
    return DomainMatrix(dense, (len(rows), ncols), domain)


def row_echelon(rows: Sequence[SparseRow], ncols: int, fld: CoefficientField) -> tuple[list[SparseRow], tuple[int, ...]]:
    """
    Reduced row echelon form

    Returns:
        Nonzero rows of the rref as sparse dicts and the pivot columns
    """
    if not rows or not ncols:
        return [], ()
    matrix = _dense(rows, ncols, fld)
    reduced, pivots = matrix.rref()
    domain = matrix.domain
    out = []
    for line in reduced.to_list()[: len(pivots)]:
        sparse = {}
        for j, value in enumerate(line):
            if value:
                sparse[j] = fld.from_domain(domain, value)
        out.append(sparse)
    return out, tuple(pivots)


def rank(rows: Sequence[SparseRow], ncols: int, fld: CoefficientField) -> int:
    return len(row_echelon(rows, ncols, fld)[1])


def solve(rows: Sequence[SparseRow], rhs: Sequence[Coefficient], ncols: int, fld: CoefficientField) -> LinearSolution:
    """
    Solve A x = b exactly; free variables are set to zero

    Args:
        rows: Sparse rows of A
        rhs: Right-hand side, one entry per row
        ncols: Number of unknowns
        fld: Coefficient field
    """
    augmented = []
    for row, value in zip(rows, rhs):
        line = dict(row)
        if value:
            line[ncols] = value
        augmented.append(line)
    reduced, pivots = row_echelon(augmented, ncols + 1, fld)
    if ncols in pivots:
        return LinearSolution(False, len(pivots) - 1, len(pivots))
    solution = {}
    for line, pivot in zip(reduced, pivots):
        value = line.get(ncols)
        if value:
            solution[pivot] = value
    return LinearSolution(True, len(pivots), len(pivots), solution)


def nullspace(rows: Sequence[SparseRow], ncols: int, fld: CoefficientField) -> list[SparseRow]:
    """Basis of {x : A x = 0}, one vector per free column"""
    reduced, pivots = row_echelon(rows, ncols, fld)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = {free: fld.one}
        for line, pivot in zip(reduced, pivots):
            value = line.get(free)
            if value:
                vector[pivot] = fld.reduce(-value)
        basis.append(vector)
    return basis


def smallest_support(vectors: Sequence[SparseRow]) -> Optional[SparseRow]:
    """The vector whose sorted support is lexicographically smallest"""
    if not vectors:
        return None
    return min(vectors, key=lambda v: tuple(sorted(v)))
