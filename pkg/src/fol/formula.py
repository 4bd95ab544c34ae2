"""
First-order formulas in the language of rings.

Terms are built from named variables, integer constants (shorthand for 1+…+1),
+, −, × and unary minus. Formulas combine equations with ¬, ∧, ∨, ∃ and ∀.
Conjunctions and disjunctions may be lazy: their children are produced by a
factory on every traversal, so combinatorially large formulas can be evaluated
along a single branch without ever being materialised.
"""

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Set, Tuple, Union

from src.utils.config import ResourceLimits, default_limits
from src.utils.errors import FormulaTooLarge, InvalidParameter


# Terms

@dataclass(frozen=True, eq=False)
class Var:
    name: str


@dataclass(frozen=True, eq=False)
class Const:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise InvalidParameter(f"constants are non-negative, got {self.value}", stage="fol")


@dataclass(frozen=True, eq=False)
class Add:
    terms: Tuple["Term", ...]


@dataclass(frozen=True, eq=False)
class Sub:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, eq=False)
class Mul:
    terms: Tuple["Term", ...]


@dataclass(frozen=True, eq=False)
class Neg:
    term: "Term"


Term = Union[Var, Const, Add, Sub, Mul, Neg]

ZERO = Const(0)
ONE = Const(1)


def is_zero_term(t: Term) -> bool:
    return isinstance(t, Const) and t.value == 0


def is_one_term(t: Term) -> bool:
    return isinstance(t, Const) and t.value == 1


def const(k: int) -> Term:
    if k == 0:
        return ZERO
    if k == 1:
        return ONE
    return Const(k) if k > 0 else Neg(Const(-k))


def t_add(*terms: Term) -> Term:
    kept = tuple(t for t in terms if not is_zero_term(t))
    if not kept:
        return ZERO
    if len(kept) == 1:
        return kept[0]
    return Add(kept)


def t_mul(*terms: Term) -> Term:
    if any(is_zero_term(t) for t in terms):
        return ZERO
    kept = tuple(t for t in terms if not is_one_term(t))
    if not kept:
        return ONE
    if len(kept) == 1:
        return kept[0]
    return Mul(kept)


def t_neg(t: Term) -> Term:
    if is_zero_term(t):
        return ZERO
    if isinstance(t, Neg):
        return t.term
    return Neg(t)


def t_sub(a: Term, b: Term) -> Term:
    if is_zero_term(b):
        return a
    if is_zero_term(a):
        return t_neg(b)
    return Sub(a, b)


# Formulas

@dataclass(frozen=True, eq=False)
class Eq:
    lhs: Term
    rhs: Term = ZERO


@dataclass(frozen=True, eq=False)
class Not:
    body: "Node"


class Junction:
    """An n-ary ∧ or ∨ whose children are either stored or produced on demand."""

    symbol = "?"

    def __init__(self, items: Iterable["Node"] = (), factory: Optional[Callable[[], Iterable["Node"]]] = None):
        self._items: Optional[Tuple["Node", ...]] = None if factory is not None else tuple(items)
        self._factory = factory

    @classmethod
    def lazy(cls, factory: Callable[[], Iterable["Node"]]):
        return cls(factory=factory)

    @property
    def is_lazy(self) -> bool:
        return self._factory is not None

    def children(self) -> Iterator["Node"]:
        if self._factory is not None:
            return iter(self._factory())
        return iter(self._items)

    def __repr__(self):
        if self.is_lazy:
            return f"{type(self).__name__}(<lazy>)"
        return f"{type(self).__name__}({len(self._items)} children)"


class And(Junction):
    symbol = "&"


class Or(Junction):
    symbol = "|"


@dataclass(frozen=True, eq=False)
class Exists:
    variables: Tuple[str, ...]
    body: "Node"


@dataclass(frozen=True, eq=False)
class Forall:
    variables: Tuple[str, ...]
    body: "Node"


Node = Union[Eq, Not, And, Or, Exists, Forall]

TRUE = And(())
FALSE = Or(())


def conj(*nodes: Node) -> Node:
    """Eager conjunction dropping literal TRUE children."""
    kept = tuple(n for n in nodes if n is not TRUE)
    if any(n is FALSE for n in kept):
        return FALSE
    if len(kept) == 1:
        return kept[0]
    return And(kept)


def disj(*nodes: Node) -> Node:
    """Eager disjunction dropping literal FALSE children."""
    kept = tuple(n for n in nodes if n is not FALSE)
    if any(n is TRUE for n in kept):
        return TRUE
    if len(kept) == 1:
        return kept[0]
    return Or(kept)


def eq_zero(t: Term) -> Node:
    """t = 0, folded to TRUE/FALSE when t is a constant."""
    if isinstance(t, Const):
        return TRUE if t.value == 0 else FALSE
    return Eq(t, ZERO)


def ne_zero(t: Term) -> Node:
    if isinstance(t, Const):
        return FALSE if t.value == 0 else TRUE
    return Not(Eq(t, ZERO))


def exists(variables: Iterable[str], body: Node) -> Node:
    variables = tuple(variables)
    return Exists(variables, body) if variables else body


# Wrapper with free-variable metadata

class Slot(NamedTuple):
    """Which coefficient of which bounded object a free variable stands for."""

    name: str
    role: str
    position: Tuple[int, ...]


@dataclass(frozen=True)
class Formula:
    """
    A formula together with its ordered free variables.

    Attributes:
        root: The formula tree
        free: Free variables in assignment order
        slots: Arity metadata, one Slot per free variable (may be empty for parsed formulas)
        label: Builder name and parameters, e.g. 'beta(d=3,n=1)'
    """

    root: Node
    free: Tuple[str, ...] = ()
    slots: Tuple[Slot, ...] = ()
    label: str = ""

    @property
    def is_sentence(self) -> bool:
        return len(self.free) == 0

    @property
    def arity(self) -> int:
        return len(self.free)

    def size(self, limits: Optional[ResourceLimits] = None) -> int:
        return formula_size(self.root, limits)

    def check_well_formed(self, limits: Optional[ResourceLimits] = None):
        check_well_formed(self.root, self.free, limits)

    def __repr__(self):
        return f"Formula({self.label or 'anonymous'}, free={len(self.free)})"


# Traversal

def _term_size(t: Term) -> int:
    if isinstance(t, (Var, Const)):
        return 1
    if isinstance(t, (Add, Mul)):
        return 1 + sum(_term_size(s) for s in t.terms)
    if isinstance(t, Sub):
        return 1 + _term_size(t.left) + _term_size(t.right)
    return 1 + _term_size(t.term)


def formula_size(root: Node, limits: Optional[ResourceLimits] = None) -> int:
    """
    Node count of the fully materialised formula (terms included).

    Raises:
        FormulaTooLarge: The count passes the configured ceiling
    """
    ceiling = (default_limits() if limits is None else limits).formula_size_ceiling
    total = 0
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, Eq):
            total += 1 + _term_size(node.lhs) + _term_size(node.rhs)
        elif isinstance(node, Not):
            total += 1
            stack.append(node.body)
        elif isinstance(node, Junction):
            total += 1
            stack.extend(node.children())
        else:
            total += len(node.variables)
            stack.append(node.body)
        if total > ceiling:
            raise FormulaTooLarge(f"formula has more than {ceiling} nodes", stage="fol")
    return total


def term_variables(t: Term, out: Set[str]):
    if isinstance(t, Var):
        out.add(t.name)
    elif isinstance(t, (Add, Mul)):
        for s in t.terms:
            term_variables(s, out)
    elif isinstance(t, Sub):
        term_variables(t.left, out)
        term_variables(t.right, out)
    elif isinstance(t, Neg):
        term_variables(t.term, out)


def check_well_formed(root: Node, free: Iterable[str], limits: Optional[ResourceLimits] = None):
    """
    Every variable is free or bound by an enclosing quantifier, and no quantifier
    rebinds a variable already in scope. Sibling subformulas may reuse bound names.

    Raises:
        InvalidParameter: The formula is not well formed
        FormulaTooLarge: Materialising it passes the size ceiling
    """
    formula_size(root, limits)
    free = frozenset(free)

    def visit(node: Node, scope: frozenset):
        if isinstance(node, Eq):
            names: Set[str] = set()
            term_variables(node.lhs, names)
            term_variables(node.rhs, names)
            unknown = names - scope
            if unknown:
                raise InvalidParameter(f"unbound variables {sorted(unknown)}", stage="fol")
        elif isinstance(node, Not):
            visit(node.body, scope)
        elif isinstance(node, Junction):
            for child in node.children():
                visit(child, scope)
        else:
            clash = [v for v in node.variables if v in scope]
            if clash or len(set(node.variables)) != len(node.variables):
                raise InvalidParameter(f"quantifier rebinds {clash or list(node.variables)}", stage="fol")
            visit(node.body, scope | frozenset(node.variables))

    visit(root, free)
