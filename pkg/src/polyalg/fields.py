"""
Coefficient fields: the rationals, prime fields and the integers (input only).

Coefficients are plain Python values: `Fraction` over ℚ, `int` in 0..p−1 over 𝔽_p
and `int` over ℤ. All arithmetic is exact.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from sympy import isprime

from src.utils.errors import BadCoefficient, BadReductionDenominator, InvalidParameter, PolynomialParseError

Coefficient = Union[int, Fraction]

_LITERAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class FieldKind(str, Enum):
    RATIONALS = "Q"
    PRIME = "Fp"
    INTEGERS = "Z"


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient ring: ℚ, 𝔽_p or ℤ (ℤ only as input destined for base change)."""

    kind: FieldKind
    p: int = 0

    def __post_init__(self):
        if self.kind == FieldKind.PRIME:
            if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
                raise InvalidParameter(f"p={self.p} is not prime", stage="field")
        elif self.p != 0:
            raise InvalidParameter(f"{self.kind.value} takes no modulus", stage="field")

    # Construction helpers

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def integers(cls) -> "FieldSpec":
        return cls(FieldKind.INTEGERS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """
        Parse a field label.

        Args:
            text: 'Q', 'Z' or 'Fp:<prime>'

        Returns:
            The corresponding FieldSpec
        """
        label = text.strip()
        if label == "Q":
            return cls.rationals()
        if label == "Z":
            return cls.integers()
        if label.startswith("Fp:"):
            try:
                return cls.prime(int(label[3:]))
            except ValueError:
                raise InvalidParameter(f"bad prime in field label {text!r}", stage="field")
        raise InvalidParameter(f"unknown field label {text!r} (expected Q, Z or Fp:p)", stage="field")

    def __str__(self):
        if self.kind == FieldKind.PRIME:
            return f"Fp:{self.p}"
        return self.kind.value

    # Properties

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == FieldKind.PRIME else 0

    @property
    def is_field(self) -> bool:
        return self.kind != FieldKind.INTEGERS

    @property
    def is_prime_field(self) -> bool:
        return self.kind == FieldKind.PRIME

    @property
    def zero(self) -> Coefficient:
        return Fraction(0) if self.kind == FieldKind.RATIONALS else 0

    @property
    def one(self) -> Coefficient:
        return Fraction(1) if self.kind == FieldKind.RATIONALS else 1

    # Arithmetic

    def convert(self, value: Coefficient) -> Coefficient:
        """Bring an int or Fraction into this ring's canonical representation."""
        if self.kind == FieldKind.RATIONALS:
            return Fraction(value)
        if self.kind == FieldKind.INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise BadCoefficient(f"{value} is not an integer", stage="coefficients")
                return int(value.numerator)
            return int(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise BadReductionDenominator(self.p, value.denominator)
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def normalize(self, value: Coefficient) -> Coefficient:
        """Canonical representative of an arithmetic result already in this ring."""
        if self.kind == FieldKind.PRIME:
            return value % self.p
        return value

    def inverse(self, value: Coefficient) -> Coefficient:
        if not value:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == FieldKind.PRIME:
            return pow(value, -1, self.p)
        if self.kind == FieldKind.RATIONALS:
            return 1 / Fraction(value)
        if value in (1, -1):
            return value
        raise BadCoefficient(f"{value} is not a unit in Z", stage="coefficients")

    def divide(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.normalize(a * self.inverse(b))

    def parse_literal(self, text: str) -> Coefficient:
        """Parse an integer or a/b literal into this ring."""
        match = _LITERAL_RE.match(text)
        if not match:
            raise PolynomialParseError("expected an integer or a/b literal", text, 0)
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise BadCoefficient(f"zero denominator in {text!r}", stage="parse")
        return self.convert(Fraction(numerator, denominator))

    def format(self, value: Coefficient) -> str:
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return str(value)
