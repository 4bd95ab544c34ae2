"""
Dubé's degree bound for reduced Gröbner bases.
"""

import math
from fractions import Fraction
from typing import NamedTuple

from src.utils.errors import InvalidParameter

# beyond this many variables the coarse bound exceeds any degree we can store
_EXACT_VARIABLE_LIMIT = 16


class DubeBound(NamedTuple):
    refined: int
    coarse: int


def dube_bound(d: int, n: int) -> DubeBound:
    """
    Degree bound for the reduced Gröbner basis of an ideal generated in degree ≤ d
    in n variables.

    Returns:
        refined = ⌈2(d²/2 + d)^(2^(n−1))⌉ and coarse = 2d^(2^n)
    """
    if d < 1 or n < 1:
        raise InvalidParameter(f"dube_bound needs d ≥ 1 and n ≥ 1, got d={d}, n={n}", stage="groebner")
    base = Fraction(d * d, 2) + d
    refined = 2 * base ** (2 ** (n - 1))
    return DubeBound(math.ceil(refined), 2 * d ** (2 ** n))


def within_dube_bound(max_degree: int, d: int, n: int) -> bool:
    """max_degree ≤ 2d^(2^n), without materialising astronomically large bounds."""
    if d < 1 or n < 1 or max_degree <= 2:
        return True
    if d == 1:
        return max_degree <= 2
    if n > _EXACT_VARIABLE_LIMIT:
        return max_degree.bit_length() <= 2 ** n
    return max_degree <= dube_bound(d, n).coarse
