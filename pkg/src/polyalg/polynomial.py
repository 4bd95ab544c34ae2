"""
Exact multivariate polynomials.

A `PolyRing` fixes the coefficient field, the variable names (declaration order is
the default priority: the first declared variable is the largest) and a default
monomial order. A `Polynomial` is an immutable sparse map monomial → nonzero
coefficient.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.polyalg import monomials as mono
from src.polyalg.fields import Coefficient, FieldSpec
from src.polyalg.monomials import GRADED_LEX, Monomial, MonomialOrder
from src.utils.errors import RingMismatch, UnknownVariable

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PolyRing:
    """k[x₁,…,xₙ] with a default monomial order."""

    field: FieldSpec
    variables: Tuple[str, ...]
    order: MonomialOrder = GRADED_LEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise RingMismatch(f"duplicate variable names in {self.variables}", stage="ring")
        self.order.validate(len(self.variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r} (ring has {list(self.variables)})", stage="parse")

    # Element constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: Scalar) -> "Polynomial":
        return Polynomial(self, {mono.one(self.nvars): self.field.convert(value)})

    def gen(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self) -> List["Polynomial"]:
        return [self.gen(name) for name in self.variables]

    def monomial(self, exponents: Sequence[int], coefficient: Scalar = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exponents): self.field.convert(coefficient)})

    def from_terms(self, terms: Mapping[Monomial, Scalar]) -> "Polynomial":
        convert = self.field.convert
        return Polynomial(self, {tuple(m): convert(c) for m, c in terms.items()})

    def parse(self, text: str) -> "Polynomial":
        from src.polyalg.parsing import parse_poly
        return parse_poly(text, self)

    # Derived rings

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return replace(self, order=order)

    def with_field(self, new_field: FieldSpec) -> "PolyRing":
        return replace(self, field=new_field)

    def extend(self, names: Iterable[str]) -> "PolyRing":
        """Append variables (default GradedLex order on the result)."""
        return PolyRing(self.field, self.variables + tuple(names), GRADED_LEX)

    def subring(self, names: Iterable[str]) -> "PolyRing":
        """The subring on the given variables, kept in declaration order."""
        wanted = set(names)
        for name in wanted:
            self.index(name)
        return PolyRing(self.field, tuple(v for v in self.variables if v in wanted), GRADED_LEX)

    def fresh_name(self, base: str) -> str:
        """A variable name not yet used by this ring."""
        name = base
        suffix = 0
        while name in self.variables:
            suffix += 1
            name = f"{base}{suffix}"
        return name

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"


class Polynomial:
    """Immutable sparse polynomial."""

    __slots__ = ("ring", "terms", "_lead_cache", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Coefficient]):
        self.ring = ring
        self.terms: Dict[Monomial, Coefficient] = {m: c for m, c in terms.items() if c}
        self._lead_cache: Dict[MonomialOrder, Monomial] = {}
        self._hash: Optional[int] = None

    # Basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Coefficient:
        return self.terms.get(mono.one(self.ring.nvars), self.ring.field.zero)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def support_indices(self) -> Tuple[int, ...]:
        """Indices of the variables occurring in some term."""
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(sorted(used))

    def variables_used(self) -> Tuple[str, ...]:
        return tuple(self.ring.variables[i] for i in self.support_indices())

    def _order(self, order: Optional[MonomialOrder]) -> MonomialOrder:
        return self.ring.order if order is None else order

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        order = self._order(order)
        lead = self._lead_cache.get(order)
        if lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            lead = max(self.terms, key=order.key)
            self._lead_cache[order] = lead
        return lead

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> Coefficient:
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, Coefficient]:
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> List[Tuple[Monomial, Coefficient]]:
        """Terms in descending order."""
        order = self._order(order)
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    # Arithmetic

    def _check_ring(self, other: "Polynomial"):
        if other.ring.field != self.ring.field or other.ring.variables != self.ring.variables:
            raise RingMismatch(f"cannot combine elements of {self.ring} and {other.ring}", stage="arithmetic")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = norm(out[m] + c) if m in out else c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Polynomial(self.ring, {m: norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        out: Dict[Monomial, Coefficient] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: norm(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent}")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, value: Scalar) -> "Polynomial":
        fld = self.ring.field
        c = fld.convert(value)
        return Polynomial(self.ring, {m: fld.normalize(k * c) for m, k in self.terms.items()})

    def mul_term(self, monomial: Monomial, coefficient: Coefficient) -> "Polynomial":
        """Multiply by a single term."""
        norm = self.ring.field.normalize
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, monomial)): norm(c * coefficient) for m, c in self.terms.items()},
        )

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        if self.is_zero():
            return self
        fld = self.ring.field
        inv = fld.inverse(self.leading_coefficient(order))
        return Polynomial(self.ring, {m: fld.normalize(c * inv) for m, c in self.terms.items()})

    def exact_quotient(self, divisor: "Polynomial") -> Optional["Polynomial"]:
        """
        Quotient self / divisor when the division is exact, else None.

        Division by a single polynomial has a unique remainder, so a zero remainder
        is equivalent to divisibility.
        """
        self._check_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        fld = self.ring.field
        order = self.ring.order
        lead_m, lead_c = divisor.leading_term(order)
        inv = fld.inverse(lead_c)
        rest = dict(self.terms)
        quotient: Dict[Monomial, Coefficient] = {}
        while rest:
            m = max(rest, key=order.key)
            if not mono.divides(lead_m, m):
                return None
            q_m = mono.div(m, lead_m)
            q_c = fld.normalize(rest[m] * inv)
            quotient[q_m] = q_c
            for dm, dc in divisor.terms.items():
                t = tuple(a + b for a, b in zip(dm, q_m))
                value = fld.normalize(rest.get(t, 0) - q_c * dc)
                if value:
                    rest[t] = value
                else:
                    rest.pop(t, None)
        return Polynomial(self.ring, quotient)

    # Evaluation and substitution

    def evaluate(self, point: Sequence[Coefficient]) -> Coefficient:
        """Value at a point of kⁿ."""
        if len(point) != self.ring.nvars:
            raise RingMismatch(f"point has {len(point)} coordinates, ring has {self.ring.nvars}", stage="evaluate")
        fld = self.ring.field
        total = fld.zero
        for m, c in self.terms.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value = value * x ** e
            total = total + value
        return fld.normalize(total)

    def substitute(self, images: Sequence["Polynomial"], target: Optional[PolyRing] = None) -> "Polynomial":
        """
        Apply the algebra map xᵢ ↦ images[i].

        Args:
            images: One polynomial per variable of this ring, all in the target ring
            target: Target ring (defaults to the ring of the images)

        Returns:
            The image polynomial in the target ring
        """
        if len(images) != self.ring.nvars:
            raise RingMismatch(f"need {self.ring.nvars} images, got {len(images)}", stage="substitute")
        if target is None:
            if not images:
                target = self.ring
            else:
                target = images[0].ring
        powers: List[Dict[int, Polynomial]] = [{} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cached = powers[i].get(e)
            if cached is None:
                cached = images[i] ** e
                powers[i][e] = cached
            return cached

        result = target.zero()
        for m, c in self.terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative; in characteristic p, p-th powers differentiate to zero."""
        norm = self.ring.field.normalize
        out: Dict[Monomial, Coefficient] = {}
        for m, c in self.terms.items():
            e = m[index]
            if e:
                dm = m[:index] + (e - 1,) + m[index + 1:]
                out[dm] = norm(c * e)
        return Polynomial(self.ring, out)

    def embed(self, target: PolyRing) -> "Polynomial":
        """Map into a ring containing all variables of this one (matched by name)."""
        if target.field != self.ring.field:
            raise RingMismatch(f"cannot embed {self.ring} into {target}", stage="embed")
        positions = [target.index(name) for name in self.ring.variables]
        n = target.nvars
        out = {}
        for m, c in self.terms.items():
            exps = [0] * n
            for i, e in zip(positions, m):
                exps[i] = e
            out[tuple(exps)] = c
        return Polynomial(target, out)

    def restrict(self, target: PolyRing) -> "Polynomial":
        """Map into a subring; every used variable must exist in the target."""
        for i in self.support_indices():
            target.index(self.ring.variables[i])
        positions = [self.ring.index(name) for name in target.variables]
        return Polynomial(target, {tuple(m[i] for i in positions): c for m, c in self.terms.items()})

    def change_field(self, new_field: FieldSpec) -> "Polynomial":
        """Coefficient-wise conversion into another coefficient ring (base change)."""
        target = self.ring.with_field(new_field)
        convert = new_field.convert
        return Polynomial(target, {m: convert(c) for m, c in self.terms.items()})

    # Comparison and printing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.field == other.ring.field
            and self.ring.variables == other.ring.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.field, self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    def to_string(self) -> str:
        """Canonical text: descending GradedLex terms, no '*1', no '^1'."""
        if not self.terms:
            return "0"
        fld = self.ring.field
        names = self.ring.variables
        pieces: List[str] = []
        for m, c in self.sorted_terms(GRADED_LEX):
            negative = (c < 0) if not fld.is_prime_field else False
            magnitude = -c if negative else c
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                text = fld.format(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{fld.format(magnitude)}*{body}"
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f" - {text}" if negative else f" + {text}")
        return "".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, ring={self.ring})"


def base_change(f: Polynomial, p: int) -> Polynomial:
    """
    Reduce an integer or rational polynomial modulo a prime.

    Raises:
        BadReductionDenominator: A rational coefficient has a denominator divisible by p
    """
    if f.ring.field.is_prime_field:
        if f.ring.field.p != p:
            raise RingMismatch(f"cannot reduce {f.ring} modulo {p}", stage="base_change")
        return f
    return f.change_field(FieldSpec.prime(p))
