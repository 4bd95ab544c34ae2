"""
Monomials as exponent tuples, and admissible monomial orders.

A monomial is a tuple of n non-negative integers. Orders are compared through a
sort key, so `max(terms, key=order.key)` is the leading monomial.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

from src.utils.errors import InvalidParameter, RingMismatch

Monomial = Tuple[int, ...]


class OrderKind(str, Enum):
    GRADED_LEX = "grlex"
    LEX = "lex"
    BLOCK = "block"


class Comparison(int, Enum):
    LT = -1
    EQ = 0
    GT = 1


def one(n: int) -> Monomial:
    return (0,) * n


def degree(m: Monomial) -> int:
    return sum(m)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True if a divides b."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def is_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def support(m: Monomial) -> Tuple[int, ...]:
    """Indices of the variables the monomial depends on."""
    return tuple(i for i, e in enumerate(m) if e)


@dataclass(frozen=True)
class MonomialOrder:
    """
    An admissible monomial order.

    GradedLex compares total degree first and then the exponent of the first
    variable (in priority order) where the monomials differ. Block orders compare
    block by block, GradedLex inside each block; the first block is the heavy one.
    """

    kind: OrderKind = OrderKind.GRADED_LEX
    priority: Optional[Tuple[int, ...]] = None
    blocks: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.kind == OrderKind.BLOCK and not self.blocks:
            raise InvalidParameter("block order needs at least one block", stage="order")
        if self.kind != OrderKind.BLOCK and self.blocks:
            raise InvalidParameter("only block orders take blocks", stage="order")

    def key(self, m: Monomial):
        if self.kind == OrderKind.BLOCK:
            out = []
            for block in self.blocks:
                exps = [m[i] for i in block]
                out.append(sum(exps))
                out.extend(exps)
            return tuple(out)
        exps = m if self.priority is None else tuple(m[i] for i in self.priority)
        if self.kind == OrderKind.LEX:
            return exps
        return (sum(exps),) + tuple(exps)

    def validate(self, n: int):
        """Check the order covers exactly the variables 0..n-1."""
        if self.kind == OrderKind.BLOCK:
            indices = sorted(i for block in self.blocks for i in block)
        elif self.priority is not None:
            indices = sorted(self.priority)
        else:
            return
        if indices != list(range(n)):
            raise RingMismatch(f"order {self} does not cover {n} variables", stage="order")

    def is_graded(self) -> bool:
        return self.kind == OrderKind.GRADED_LEX

    def __str__(self):
        if self.kind == OrderKind.BLOCK:
            return "block" + "".join(str(list(b)) for b in self.blocks)
        if self.priority is None:
            return self.kind.value
        return f"{self.kind.value}{list(self.priority)}"


GRADED_LEX = MonomialOrder()


def graded_lex(priority: Optional[Sequence[int]] = None) -> MonomialOrder:
    return MonomialOrder(OrderKind.GRADED_LEX, tuple(priority) if priority is not None else None)


def lex(priority: Optional[Sequence[int]] = None) -> MonomialOrder:
    return MonomialOrder(OrderKind.LEX, tuple(priority) if priority is not None else None)


def block(*blocks: Iterable[int]) -> MonomialOrder:
    """Block order with the given index blocks, heaviest first; empty blocks are dropped."""
    cleaned = tuple(tuple(b) for b in blocks if tuple(b))
    return MonomialOrder(OrderKind.BLOCK, None, cleaned)


def elimination_order(n: int, eliminated: Iterable[int], use_lex: bool = False) -> MonomialOrder:
    """
    An order in which every monomial involving an eliminated variable is larger
    than every monomial of the remaining subring.

    Args:
        n: Number of ring variables
        eliminated: Indices of the variables to eliminate (the heavy block)
        use_lex: Use pure Lex with the eliminated variables first instead of a block order

    Returns:
        The elimination order
    """
    heavy = tuple(sorted(set(eliminated)))
    light = tuple(i for i in range(n) if i not in heavy)
    if use_lex:
        return lex(heavy + light)
    return block(heavy, light)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder = GRADED_LEX) -> Comparison:
    """Three-way comparison of two monomials of the same ring."""
    if len(m1) != len(m2):
        raise RingMismatch(f"monomials of length {len(m1)} and {len(m2)} are not comparable", stage="order")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 == k2:
        return Comparison.EQ
    return Comparison.GT if k1 > k2 else Comparison.LT


def parse_order(text: str, n: int) -> MonomialOrder:
    """
    Parse an order label used on the command line.

    Args:
        text: 'grlex', 'lex' or 'block:r' (the first r variables form the heavy block)
        n: Number of ring variables

    Returns:
        The monomial order
    """
    label = text.strip().lower()
    if label == "grlex":
        return GRADED_LEX
    if label == "lex":
        return lex()
    if label.startswith("block:"):
        try:
            r = int(label[6:])
        except ValueError:
            raise InvalidParameter(f"bad block size in {text!r}", stage="order")
        if not 0 < r < n:
            raise InvalidParameter(f"block size must lie in 1..{n - 1}, got {r}", stage="order")
        return block(range(r), range(r, n))
    raise InvalidParameter(f"unknown order {text!r} (expected grlex, lex or block:r)", stage="order")
