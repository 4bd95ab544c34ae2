"""
ASCII rendering and parsing of formulas.

    terms      l1   0   1   3   (a+b)   (a-b)   (a*b)   -a
    formulas   (s=t)   ~F   (F&G)   (F|G)   (exists m1)F   (forall l1)F

An empty conjunction prints as (0=0) and an empty disjunction as (1=0).
Printing a parsed printout gives the same text back.
"""

import re
from typing import List, Optional, Sequence, Tuple

from src.fol.formula import (
    ONE,
    ZERO,
    Add,
    And,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Junction,
    Mul,
    Neg,
    Node,
    Not,
    Or,
    Sub,
    Term,
    Var,
    formula_size,
)
from src.utils.config import ResourceLimits
from src.utils.errors import PolynomialParseError

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[()+\-*=~&|]))")
_QUANTIFIERS = ("exists", "forall")


# Printing

def _term(t: Term, out: List[str], wrap_additive: bool = True):
    if isinstance(t, Var):
        out.append(t.name)
    elif isinstance(t, Const):
        out.append(str(t.value))
    elif isinstance(t, Add):
        if wrap_additive:
            out.append("(")
        for k, s in enumerate(t.terms):
            if k:
                out.append("+")
            _term(s, out)
        if wrap_additive:
            out.append(")")
    elif isinstance(t, Sub):
        if wrap_additive:
            out.append("(")
        _term(t.left, out)
        out.append("-")
        _term(t.right, out)
        if wrap_additive:
            out.append(")")
    elif isinstance(t, Mul):
        out.append("(")
        for k, s in enumerate(t.terms):
            if k:
                out.append("*")
            _term(s, out)
        out.append(")")
    else:
        out.append("-")
        _term(t.term, out)


def _formula(node: Node, out: List[str]):
    if isinstance(node, Eq):
        out.append("(")
        _term(node.lhs, out, wrap_additive=False)
        out.append("=")
        _term(node.rhs, out, wrap_additive=False)
        out.append(")")
    elif isinstance(node, Not):
        out.append("~")
        _formula(node.body, out)
    elif isinstance(node, Junction):
        children = list(node.children())
        if not children:
            out.append("(0=0)" if isinstance(node, And) else "(1=0)")
        elif len(children) == 1:
            _formula(children[0], out)
        else:
            out.append("(")
            for k, child in enumerate(children):
                if k:
                    out.append(node.symbol)
                _formula(child, out)
            out.append(")")
    else:
        word = "exists" if isinstance(node, Exists) else "forall"
        for v in node.variables:
            out.append(f"({word} {v})")
        _formula(node.body, out)


def print_formula(F, limits: Optional[ResourceLimits] = None) -> str:
    """
    Fully parenthesised ASCII text of a formula.

    Raises:
        FormulaTooLarge: Materialising the formula passes the size ceiling
    """
    root = F.root if isinstance(F, Formula) else F
    formula_size(root, limits)
    out: List[str] = []
    _formula(root, out)
    return "".join(out)


# Parsing

class _ParseFailure(Exception):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            match = _TOKEN_RE.match(stripped, position)
            if not match or match.end() == position:
                raise PolynomialParseError("unexpected character", text, position, stage="fol")
            kind = match.lastgroup
            self.tokens.append((kind, match.group(kind), match.start(kind)))
            position = match.end()
        self.pos = 0

    def peek(self, offset: int = 0) -> Tuple[str, str, int]:
        index = self.pos + offset
        if index < len(self.tokens):
            return self.tokens[index]
        return ("end", "", len(self.text))

    def take(self, value: Optional[str] = None) -> Tuple[str, str, int]:
        token = self.peek()
        if value is not None and token[1] != value:
            raise _ParseFailure(f"expected {value!r}", token[2])
        if token[0] == "end":
            raise _ParseFailure("unexpected end of input", token[2])
        self.pos += 1
        return token

    # formula := conj ('|' conj)* ; conj := unary ('&' unary)*

    def formula(self) -> Node:
        items = [self.conjunction()]
        while self.peek()[1] == "|":
            self.take("|")
            items.append(self.conjunction())
        return items[0] if len(items) == 1 else Or(items)

    def conjunction(self) -> Node:
        items = [self.unary()]
        while self.peek()[1] == "&":
            self.take("&")
            items.append(self.unary())
        return items[0] if len(items) == 1 else And(items)

    def unary(self) -> Node:
        if self.peek()[1] == "~":
            self.take("~")
            return Not(self.unary())
        if self.peek()[1] == "(" and self.peek(1)[1] in _QUANTIFIERS:
            word = self.peek(1)[1]
            variables = []
            while self.peek()[1] == "(" and self.peek(1)[1] == word:
                self.take("(")
                self.take(word)
                kind, name, position = self.take()
                if kind != "name" or name in _QUANTIFIERS:
                    raise _ParseFailure("expected a variable name", position)
                variables.append(name)
                self.take(")")
            body = self.unary()
            return Exists(tuple(variables), body) if word == "exists" else Forall(tuple(variables), body)
        return self.atom()

    def atom(self) -> Node:
        start = self.pos
        self.take("(")
        try:
            lhs = self.sum()
            self.take("=")
            rhs = self.sum()
            self.take(")")
            return Eq(lhs, rhs)
        except _ParseFailure:
            self.pos = start
        self.take("(")
        node = self.formula()
        self.take(")")
        return node

    # sum := product (('+' | '-') product)* ; product := signed ('*' signed)*

    def sum(self) -> Term:
        acc = self.product()
        chain: Optional[List[Term]] = None
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            right = self.product()
            if op == "+":
                if chain is None:
                    chain = [acc]
                chain.append(right)
                acc = Add(tuple(chain))
            else:
                chain = None
                acc = Sub(acc, right)
        return acc

    def product(self) -> Term:
        factors = [self.signed()]
        while self.peek()[1] == "*":
            self.take("*")
            factors.append(self.signed())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def signed(self) -> Term:
        if self.peek()[1] == "-":
            self.take("-")
            return Neg(self.signed())
        kind, value, position = self.take()
        if kind == "int":
            number = int(value)
            return ZERO if number == 0 else ONE if number == 1 else Const(number)
        if kind == "name" and value not in _QUANTIFIERS:
            return Var(value)
        if value == "(":
            inner = self.sum()
            self.take(")")
            return inner
        raise _ParseFailure(f"unexpected {value!r}", position)


def _free_in_order(node: Node, bound: frozenset, seen: List[str]):
    if isinstance(node, Eq):
        for side in (node.lhs, node.rhs):
            names: List[str] = []
            _ordered_names(side, names)
            for name in names:
                if name not in bound and name not in seen:
                    seen.append(name)
    elif isinstance(node, Not):
        _free_in_order(node.body, bound, seen)
    elif isinstance(node, Junction):
        for child in node.children():
            _free_in_order(child, bound, seen)
    else:
        _free_in_order(node.body, bound | frozenset(node.variables), seen)


def _ordered_names(t: Term, out: List[str]):
    if isinstance(t, Var):
        out.append(t.name)
    elif isinstance(t, (Add, Mul)):
        for s in t.terms:
            _ordered_names(s, out)
    elif isinstance(t, Sub):
        _ordered_names(t.left, out)
        _ordered_names(t.right, out)
    elif isinstance(t, Neg):
        _ordered_names(t.term, out)


def parse_formula(text: str, free: Optional[Sequence[str]] = None, label: str = "") -> Formula:
    """
    Parse the ASCII rendering back into a Formula.

    Args:
        text: Output of print_formula (or hand-written text in the same syntax)
        free: Free-variable order; defaults to order of first occurrence
        label: Optional label for the result

    Raises:
        PolynomialParseError: The text is not a formula
    """
    parser = _Parser(text)
    try:
        root = parser.formula()
        if parser.peek()[0] != "end":
            raise _ParseFailure("trailing input", parser.peek()[2])
    except _ParseFailure as e:
        message, position = e.args
        raise PolynomialParseError(message, text, position, stage="fol")
    if free is None:
        names: List[str] = []
        _free_in_order(root, frozenset(), names)
        free = names
    return Formula(root, tuple(free), (), label)
