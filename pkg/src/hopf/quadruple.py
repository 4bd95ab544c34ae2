"""
Hopf quadruples (𝓑, Δ, σ, ε) presenting an affine group scheme k[x₁,…,xₙ]/(𝓑).

Tensor powers S^{⊗r} are polynomial rings in r copies of the variables; the j-th
copy of x is written x followed by j primes (x', x'', x''').
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Union

from src.polyalg.bounded import bound_of_all
from src.polyalg.fields import Coefficient, FieldSpec
from src.polyalg.polynomial import PolyRing, Polynomial, base_change
from src.utils.errors import InvalidParameter, RingMismatch


def tensor_name(variable: str, factor: int) -> str:
    """Name of a variable in the given (1-based) tensor factor."""
    return variable + "'" * factor


def tensor_ring(ring: PolyRing, r: int) -> PolyRing:
    """
    S^{⊗r}: first-factor variables, then second-factor variables, and so on.

    r = 1 returns S itself (unprimed names).
    """
    if r < 1:
        raise InvalidParameter(f"tensor power must be ≥ 1, got {r}", stage="hopf")
    if r == 1:
        return ring
    names = [tensor_name(v, j) for j in range(1, r + 1) for v in ring.variables]
    return PolyRing(ring.field, tuple(names))


def factor_images(ring: PolyRing, r: int, factor: int) -> List[Polynomial]:
    """Images of x₁,…,xₙ under the inclusion of S as the given tensor factor of S^{⊗r}."""
    target = tensor_ring(ring, r)
    if r == 1:
        return target.gens()
    return [target.gen(tensor_name(v, factor)) for v in ring.variables]


def to_factors(f: Polynomial, ring: PolyRing, r: int, factors: Sequence[int]) -> Polynomial:
    """
    Relabel an element of S^{⊗len(factors)} into S^{⊗r}, sending copy j to copy factors[j].
    """
    source_r = len(factors)
    target = tensor_ring(ring, r)
    images: List[Polynomial] = []
    for j in range(source_r):
        images.extend(factor_images(ring, r, factors[j]))
    if f.ring.variables != tensor_ring(ring, source_r).variables:
        raise RingMismatch(f"{f} is not in the {source_r}-fold tensor power of {ring}", stage="hopf")
    return f.substitute(images, target=target)


@dataclass
class HopfQuadruple:
    """
    A candidate Hopf algebra structure on S/I.

    Attributes:
        ring: S = k[x₁,…,xₙ]
        relations: Generators 𝓑 of I
        comultiplication: xᵢ ↦ Δ(xᵢ) ∈ S ⊗ S
        antipode: xᵢ ↦ σ(xᵢ) ∈ S
        counit: xᵢ ↦ ε(xᵢ) ∈ k
        name: Optional label used in reports
    """

    ring: PolyRing
    relations: List[Polynomial]
    comultiplication: Dict[str, Polynomial]
    antipode: Dict[str, Polynomial]
    counit: Dict[str, Coefficient]
    name: Optional[str] = None

    def __post_init__(self):
        names = set(self.ring.variables)
        for label, mapping in (("comultiplication", self.comultiplication), ("antipode", self.antipode), ("counit", self.counit)):
            if set(mapping) != names:
                raise InvalidParameter(
                    f"{label} must define exactly the variables {list(self.ring.variables)}", stage="hopf"
                )
        double = tensor_ring(self.ring, 2)
        for f in self.relations:
            self._expect(f, self.ring, "relation")
        for f in self.comultiplication.values():
            self._expect(f, double, "comultiplication")
        for f in self.antipode.values():
            self._expect(f, self.ring, "antipode")
        self.counit = {v: self.ring.field.convert(c) for v, c in self.counit.items()}
        self._check = None

    @staticmethod
    def _expect(f: Polynomial, ring: PolyRing, label: str):
        if f.ring.variables != ring.variables or f.ring.field != ring.field:
            raise RingMismatch(f"{label} {f} does not live in {ring}", stage="hopf")

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def comultiplication_images(self) -> List[Polynomial]:
        return [self.comultiplication[v] for v in self.ring.variables]

    def antipode_images(self) -> List[Polynomial]:
        return [self.antipode[v] for v in self.ring.variables]

    def counit_point(self) -> List[Coefficient]:
        return [self.counit[v] for v in self.ring.variables]

    def structure_polynomials(self) -> List[Polynomial]:
        return list(self.relations) + self.comultiplication_images() + self.antipode_images()

    def d_bound(self) -> int:
        """
        Least d with 𝓑 ⊂ S_d, Δ(xᵢ) ∈ S_d^{⊗2} and σ(xᵢ) ∈ S_d.

        A tensor element is measured factor by factor: each term's monomial in every
        tensor factor must lie among 𝗆₁,…,𝗆_d.
        """
        d = bound_of_all(list(self.relations) + self.antipode_images())
        n = self.nvars
        for f in self.comultiplication_images():
            for m in f.terms:
                for j in range(2):
                    piece = Polynomial(self.ring, {m[j * n:(j + 1) * n]: 1})
                    d = max(d, bound_of_all([piece]))
        return d

    def with_relations(self, relations: Sequence[Polynomial]) -> "HopfQuadruple":
        return HopfQuadruple(
            self.ring, list(relations), dict(self.comultiplication), dict(self.antipode), dict(self.counit), self.name
        )


def _change(f: Polynomial, target: FieldSpec) -> Polynomial:
    if target.is_prime_field:
        return base_change(f, target.p)
    return f.change_field(target)


def base_change_quadruple(H: HopfQuadruple, target: Union[int, FieldSpec]) -> HopfQuadruple:
    """
    Coefficient-wise reduction of (𝓑, Δ, σ, ε) to 𝔽_p (or conversion ℤ → ℚ).

    Args:
        H: Quadruple over ℤ or ℚ
        target: A prime p or a FieldSpec

    Raises:
        BadReductionDenominator: Some coefficient has a denominator divisible by p
    """
    fld = FieldSpec.prime(target) if isinstance(target, int) else target
    ring = H.ring.with_field(fld)
    relations = [_change(f, fld) for f in H.relations]
    comul = {v: _change(f, fld) for v, f in H.comultiplication.items()}
    antipode = {v: _change(f, fld) for v, f in H.antipode.items()}
    counit = {v: fld.convert(c) for v, c in H.counit.items()}
    label = None if H.name is None else f"{H.name}/{fld}"
    return HopfQuadruple(ring, relations, comul, antipode, counit, label)


def quadruple_from_strings(
    field_spec: FieldSpec,
    variables: Sequence[str],
    relations: Sequence[str],
    comultiplication: Mapping[str, str],
    antipode: Mapping[str, str],
    counit: Mapping[str, str],
    name: Optional[str] = None,
) -> HopfQuadruple:
    """Build a quadruple from the textual form used by catalog files."""
    ring = PolyRing(field_spec, tuple(variables))
    double = tensor_ring(ring, 2)
    return HopfQuadruple(
        ring,
        [ring.parse(text) for text in relations],
        {v: double.parse(comultiplication[v]) for v in comultiplication},
        {v: ring.parse(antipode[v]) for v in antipode},
        {v: field_spec.parse_literal(str(counit[v])) for v in counit},
        name,
    )
