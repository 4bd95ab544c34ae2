"""
Polynomials in x whose coefficients are ring terms in the coefficient variables.

A d-bounded polynomial with unknown coefficients is Σ λ_k 𝗆_k; arithmetic on such
objects produces the coefficient terms that the formula builders compare with 0.
"""

from collections import defaultdict
from typing import Dict, Iterable, List, Sequence, Tuple

from src.fol.formula import ONE, Term, Var, const, is_zero_term, t_add, t_mul, t_neg
from src.polyalg.bounded import first_monomials, monomial_rank, monomial_unrank
from src.polyalg.monomials import Monomial
from src.polyalg.monomials import mul as mono_mul
from src.utils.errors import InvalidParameter


def graded_key(m: Monomial) -> Tuple[int, Monomial]:
    """GradedLex sort key (larger key = larger monomial)."""
    return (sum(m), m)


class SymPoly:
    """Sparse map monomial → coefficient term in a fixed number of variables."""

    def __init__(self, nvars: int, terms: Dict[Monomial, Term] = None):
        self.nvars = nvars
        self.terms: Dict[Monomial, Term] = {m: c for m, c in (terms or {}).items() if not is_zero_term(c)}

    @classmethod
    def bounded(cls, coefficients: Sequence[Term], n: int) -> "SymPoly":
        """Σ c_k 𝗆_k over the first len(coefficients) monomials in n variables."""
        return cls(n, {monomial_unrank(k + 1, n): c for k, c in enumerate(coefficients)})

    @classmethod
    def tensor_bounded(cls, coefficients: Sequence[Term], n: int, r: int, d: int) -> "SymPoly":
        """
        Σ c_{j₁…j_r} 𝗆_{j₁}⊗…⊗𝗆_{j_r} in r·n variables, j₁ varying slowest.
        """
        basis = first_monomials(d, n)
        terms: Dict[Monomial, Term] = {}
        for index, c in enumerate(coefficients):
            exps: Tuple[int, ...] = ()
            rest = index
            picks = []
            for _ in range(r):
                picks.append(rest % d)
                rest //= d
            for j in reversed(picks):
                exps += basis[j]
            terms[exps] = c
        return cls(n * r, terms)

    @classmethod
    def monomial(cls, m: Monomial, coefficient: Term = ONE) -> "SymPoly":
        return cls(len(m), {tuple(m): coefficient})

    @classmethod
    def constant(cls, nvars: int, coefficient: Term) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: coefficient})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SymPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): ONE})

    @classmethod
    def sum(cls, polys: Iterable["SymPoly"], nvars: int) -> "SymPoly":
        """Σ polys with one flat sum per monomial."""
        out: Dict[Monomial, List[Term]] = defaultdict(list)
        for f in polys:
            for m, c in f.terms.items():
                out[m].append(c)
        return cls(nvars, {m: t_add(*cs) for m, cs in out.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def _combine(self, other: "SymPoly", sign: int) -> "SymPoly":
        out: Dict[Monomial, List[Term]] = defaultdict(list)
        for m, c in self.terms.items():
            out[m].append(c)
        for m, c in other.terms.items():
            out[m].append(c if sign > 0 else t_neg(c))
        return SymPoly(self.nvars, {m: t_add(*cs) for m, cs in out.items()})

    def __add__(self, other: "SymPoly") -> "SymPoly":
        return self._combine(other, 1)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self._combine(other, -1)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {m: t_neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        out: Dict[Monomial, List[Term]] = defaultdict(list)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[mono_mul(m1, m2)].append(t_mul(c1, c2))
        return SymPoly(self.nvars, {m: t_add(*cs) for m, cs in out.items()})

    def scale(self, coefficient: Term) -> "SymPoly":
        return SymPoly(self.nvars, {m: t_mul(coefficient, c) for m, c in self.terms.items()})

    def shift(self, m: Monomial) -> "SymPoly":
        """Multiply by the monomial m."""
        return SymPoly(self.nvars, {mono_mul(k, m): c for k, c in self.terms.items()})

    def truncate(self, rank: int) -> "SymPoly":
        """Drop terms beyond 𝗆_rank."""
        return SymPoly(self.nvars, {m: c for m, c in self.terms.items() if monomial_rank(m) <= rank})

    def without(self, m: Monomial) -> "SymPoly":
        return SymPoly(self.nvars, {k: c for k, c in self.terms.items() if k != m})

    def place(self, nvars: int, offset: int) -> "SymPoly":
        """Embed into nvars variables, starting at variable `offset`."""
        pad_left = (0,) * offset
        pad_right = (0,) * (nvars - offset - self.nvars)
        return SymPoly(nvars, {pad_left + m + pad_right: c for m, c in self.terms.items()})

    def partial(self, index: int) -> "SymPoly":
        out = {}
        for m, c in self.terms.items():
            a = m[index]
            if a:
                lowered = m[:index] + (a - 1,) + m[index + 1:]
                out[lowered] = t_mul(const(a), c)
        return SymPoly(self.nvars, out)

    def compose(self, images: Sequence["SymPoly"], nvars: int) -> "SymPoly":
        """Substitute xᵢ ↦ images[i] (each in `nvars` variables)."""
        powers: Dict[Tuple[int, int], SymPoly] = {}
        one = SymPoly.constant(nvars, ONE)

        def power(i: int, e: int) -> SymPoly:
            if e == 0:
                return one
            if (i, e) not in powers:
                powers[(i, e)] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[(i, e)]

        out: Dict[Monomial, List[Term]] = defaultdict(list)
        for m, c in sorted(self.terms.items(), key=lambda item: graded_key(item[0])):
            product = one
            for i, e in enumerate(m):
                if e:
                    product = product * power(i, e)
            for k, pc in product.terms.items():
                out[k].append(t_mul(c, pc))
        return SymPoly(nvars, {k: t_add(*cs) for k, cs in out.items()})

    def max_monomial(self) -> Monomial:
        if not self.terms:
            return (0,) * self.nvars
        return max(self.terms, key=graded_key)

    def coefficients_by_rank(self, upto: int) -> List[Term]:
        """[c(𝗆₁), …, c(𝗆_upto)] with missing monomials as 0."""
        out = [const(0)] * upto
        for m, c in self.terms.items():
            rank = monomial_rank(m)
            if rank > upto:
                raise InvalidParameter(f"term of rank {rank} lies beyond 𝗆_{upto}", stage="fol")
            out[rank - 1] = c
        return out

    def sorted_coefficients(self) -> List[Term]:
        """Coefficient terms from the largest monomial down."""
        return [self.terms[m] for m in sorted(self.terms, key=graded_key, reverse=True)]


def variables(names: Iterable[str]) -> List[Term]:
    return [Var(name) for name in names]
