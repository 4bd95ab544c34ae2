"""
Exact linear algebra over ℚ and 𝔽_p through sympy's DomainMatrix.
"""

from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from src.polyalg.fields import Coefficient, FieldSpec
from src.utils.sympy_bridge import domain_element, sympy_domain


def matrix_rank(rows: Sequence[Sequence[Coefficient]], ncols: int, field: FieldSpec) -> int:
    """Rank of a dense matrix given as a list of rows."""
    if not rows or ncols == 0:
        return 0
    domain = sympy_domain(field)
    entries = [[domain_element(field, value) for value in row] for row in rows]
    return DomainMatrix(entries, (len(rows), ncols), domain).rank()


def nullity(rows: Sequence[Sequence[Coefficient]], ncols: int, field: FieldSpec) -> int:
    """Dimension of the kernel of the ncols-dimensional side."""
    return ncols - matrix_rank(rows, ncols, field)


def is_consistent(rows: Sequence[Sequence[Coefficient]], rhs: Sequence[Coefficient], ncols: int, field: FieldSpec) -> bool:
    """True when A·μ = b has a solution."""
    if not rows:
        return True
    if ncols == 0:
        return all(not value for value in rhs)
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    return matrix_rank(rows, ncols, field) == matrix_rank(augmented, ncols + 1, field)
