"""
Truth of bounded formulas under an assignment of their free variables.

Quantifier-free parts are evaluated directly. An existential block is decided by
exact linear algebra: its body must be a conjunction of equations that are affine
in the quantified variables once the free variables are substituted. Universal
quantifiers are rejected.
"""

import logging
from typing import Dict, Iterator, Mapping, Optional, Sequence

from src.fol.formula import Add, Const, Eq, Exists, Formula, Junction, Mul, Neg, Node, Not, Or, Sub, Term, Var
from src.polyalg.fields import Coefficient, FieldSpec
from src.utils.errors import InvalidParameter, MissingAssignment, UnsupportedQuantifierShape
from src.utils.linalg import is_consistent

logger = logging.getLogger(__name__)


class Assignment:
    """Field values for free variables."""

    def __init__(self, values: Mapping[str, Coefficient], field: FieldSpec):
        """
        Initialize an assignment.

        Args:
            values: Variable name → value (ints or Fractions, converted into the field)
            field: Target field (Q or Fp)
        """
        if not field.is_field:
            raise InvalidParameter(f"formulas are evaluated over a field, not {field}", stage="fol")
        self.field = field
        self.values: Dict[str, Coefficient] = {name: field.convert(v) for name, v in values.items()}

    @classmethod
    def for_formula(cls, F: Formula, values: Sequence[Coefficient], field: FieldSpec) -> "Assignment":
        """Zip a flat value list with the formula's free variables."""
        if len(values) != len(F.free):
            raise InvalidParameter(
                f"{F.label or 'formula'} has {len(F.free)} free variables, got {len(values)} values", stage="fol"
            )
        return cls(dict(zip(F.free, values)), field)

    def __repr__(self):
        return f"Assignment({len(self.values)} values over {self.field})"


class _Affine:
    """c + Σ a_v·v over the quantified variables of the enclosing block."""

    __slots__ = ("const", "coeffs")

    def __init__(self, const: Coefficient, coeffs: Optional[Dict[str, Coefficient]] = None):
        self.const = const
        self.coeffs = coeffs or {}


class _Evaluator:
    def __init__(self, assignment: Assignment):
        self.field = assignment.field
        self.values = assignment.values
        self.memo: Dict[int, tuple] = {}

    # Terms

    def _add(self, a: _Affine, b: _Affine, sign: int = 1) -> _Affine:
        field = self.field
        coeffs = dict(a.coeffs)
        for v, c in b.coeffs.items():
            total = field.normalize(coeffs.get(v, 0) + sign * c)
            if total:
                coeffs[v] = total
            else:
                coeffs.pop(v, None)
        return _Affine(field.normalize(a.const + sign * b.const), coeffs)

    def _mul(self, a: _Affine, b: _Affine) -> _Affine:
        if a.coeffs and b.coeffs:
            raise UnsupportedQuantifierShape("existential body is not linear in the quantified variables", stage="fol")
        if b.coeffs:
            a, b = b, a
        field = self.field
        scale = b.const
        coeffs = {v: field.normalize(c * scale) for v, c in a.coeffs.items()} if scale else {}
        return _Affine(field.normalize(a.const * scale), {v: c for v, c in coeffs.items() if c})

    def term(self, t: Term, bound: Mapping[str, int]) -> _Affine:
        cached = self.memo.get(id(t))
        if cached is not None and cached[0] is t:
            return cached[1]
        field = self.field
        if isinstance(t, Var):
            if t.name in bound:
                value = _Affine(field.zero, {t.name: field.one})
            elif t.name in self.values:
                value = _Affine(self.values[t.name])
            else:
                raise MissingAssignment(f"no value for {t.name}", stage="fol")
        elif isinstance(t, Const):
            value = _Affine(field.convert(t.value))
        elif isinstance(t, Add):
            value = _Affine(field.zero)
            for s in t.terms:
                value = self._add(value, self.term(s, bound))
        elif isinstance(t, Sub):
            value = self._add(self.term(t.left, bound), self.term(t.right, bound), -1)
        elif isinstance(t, Neg):
            value = self._add(_Affine(field.zero), self.term(t.term, bound), -1)
        elif isinstance(t, Mul):
            value = _Affine(field.one)
            for s in t.terms:
                value = self._mul(value, self.term(s, bound))
        else:
            raise InvalidParameter(f"not a term: {t!r}", stage="fol")
        self.memo[id(t)] = (t, value)
        return value

    # Formulas

    def node(self, node: Node) -> bool:
        if isinstance(node, Eq):
            form = self._add(self.term(node.lhs, {}), self.term(node.rhs, {}), -1)
            return not form.const
        if isinstance(node, Not):
            return not self.node(node.body)
        if isinstance(node, Junction):
            if isinstance(node, Or):
                return any(self.node(child) for child in node.children())
            return all(self.node(child) for child in node.children())
        if isinstance(node, Exists):
            return self.exists(node)
        raise UnsupportedQuantifierShape("universal quantifiers cannot be evaluated", stage="fol")

    def _equations(self, node: Node) -> Iterator[Optional[Eq]]:
        """Equations of a conjunctive body; None marks an empty disjunction (FALSE)."""
        if isinstance(node, Eq):
            yield node
        elif isinstance(node, Or):
            children = list(node.children())
            if not children:
                yield None
            elif len(children) == 1:
                yield from self._equations(children[0])
            else:
                raise UnsupportedQuantifierShape("existential body contains a disjunction", stage="fol")
        elif isinstance(node, Junction):
            for child in node.children():
                yield from self._equations(child)
        else:
            raise UnsupportedQuantifierShape(
                f"existential body must be a conjunction of equations, found {type(node).__name__}", stage="fol"
            )

    def exists(self, node: Exists) -> bool:
        field = self.field
        index = {v: k for k, v in enumerate(node.variables)}
        rows = []
        rhs = []
        for eq in self._equations(node.body):
            if eq is None:
                return False
            form = self._add(self.term(eq.lhs, index), self.term(eq.rhs, index), -1)
            if not form.coeffs:
                if form.const:
                    return False
                continue
            rows.append(form.coeffs)
            rhs.append(field.normalize(-form.const))
        if not rows:
            return True
        used = sorted({index[v] for row in rows for v in row})
        column = {j: k for k, j in enumerate(used)}
        matrix = []
        for row in rows:
            dense = [field.zero] * len(used)
            for v, c in row.items():
                dense[column[index[v]]] = c
            matrix.append(dense)
        return is_consistent(matrix, rhs, len(used), field)


def evaluate(F: Formula, assignment: Assignment) -> bool:
    """
    Truth value of F under the assignment.

    Raises:
        MissingAssignment: A free variable has no value
        UnsupportedQuantifierShape: F has a universal quantifier or a non-linear existential block
    """
    missing = [name for name in F.free if name not in assignment.values]
    if missing:
        raise MissingAssignment(f"no values for {', '.join(missing[:5])}{'…' if len(missing) > 5 else ''}", stage="fol")
    verdict = _Evaluator(assignment).node(F.root)
    logger.debug(f"evaluate: {F.label or 'formula'} over {assignment.field} -> {verdict}")
    return verdict


def evaluate_values(F: Formula, values: Sequence[Coefficient], field: FieldSpec) -> bool:
    """evaluate() with a flat value list in free-variable order."""
    return evaluate(F, Assignment.for_formula(F, values, field))
