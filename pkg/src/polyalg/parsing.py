"""
ASCII polynomial grammar.

    polynomial ::= ['+'|'-'] term (('+'|'-') term)*
    term       ::= coeff | coeff '*' monos | monos
    monos      ::= var ['^' int] ('*' var ['^' int])*
    coeff      ::= int | int '/' int

Variable names are identifiers optionally followed by primes (x, x', x''), which is
how the tensor factors of a comultiplication are written.
"""

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from src.polyalg.monomials import Monomial
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.errors import PolynomialParseError

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_][A-Za-z0-9_]*'*)|(?P<op>[-+*^/−]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        if not match:
            offset = position + (len(text[position:]) - len(text[position:].lstrip()))
            raise PolynomialParseError(f"unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        if value == "−":
            value = "-"
        tokens.append((kind, value, start))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> Tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Tuple[str, str, int]):
        raise PolynomialParseError(message, self.text, token[2])

    def expect_int(self) -> int:
        token = self.take()
        if token[0] != "int":
            self.error("expected an integer", token)
        return int(token[1])

    def parse(self) -> Polynomial:
        terms: Dict[Monomial, Fraction] = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        self.parse_term(sign, terms)
        while True:
            token = self.peek()
            if token[0] == "end":
                break
            if token[0] == "op" and token[1] in "+-":
                self.take()
                self.parse_term(-1 if token[1] == "-" else 1, terms)
            elif token[0] == "op" and token[1] == "/":
                self.error("division is only allowed inside a/b literals", token)
            else:
                self.error(f"unexpected {token[1]!r}", token)
        return self.ring.from_terms(terms)

    def parse_term(self, sign: int, terms: Dict[Monomial, Fraction]):
        coefficient = Fraction(sign)
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            numerator = int(value)
            denominator = 1
            token = self.peek()
            if token[0] == "op" and token[1] == "/":
                self.take()
                denominator = self.expect_int()
                if denominator == 0:
                    self.error("zero denominator", token)
            coefficient *= Fraction(numerator, denominator)
            token = self.peek()
            if token[0] == "op" and token[1] == "*":
                self.take()
                monomial = self.parse_monos()
            else:
                monomial = (0,) * self.ring.nvars
        elif kind == "var":
            monomial = self.parse_monos()
        else:
            self.error("expected a term", self.peek())
        terms[monomial] = terms.get(monomial, 0) + coefficient

    def parse_monos(self) -> Monomial:
        exps = [0] * self.ring.nvars
        while True:
            token = self.take()
            if token[0] != "var":
                self.error("expected a variable", token)
            index = self.ring.index(token[1])
            exponent = 1
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                self.take()
                exponent = self.expect_int()
            exps[index] += exponent
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "*":
                self.take()
                continue
            if nxt[0] == "op" and nxt[1] == "/":
                self.error("division is only allowed inside a/b literals", nxt)
            return tuple(exps)


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """
    Parse an ASCII polynomial into an exact polynomial of the given ring.

    Args:
        text: Expression such as "x^2*y - 3*y" or "1/2*x + 1"
        ring: Ring declaring the allowed variables and the coefficient field

    Returns:
        The parsed polynomial

    Raises:
        PolynomialParseError: Syntax error (with position)
        UnknownVariable: Variable not declared in the ring
    """
    return _Parser(text, ring).parse()


def format_poly(f: Polynomial) -> str:
    """Canonical printer; parse_poly(format_poly(f)) == f."""
    return f.to_string()
