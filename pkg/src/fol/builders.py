"""
Builders for the ring formulas describing bounded Gröbner bases, ideal membership,
Hopf quadruples and smoothness.

Free variables are named l1, l2, … in the order of the objects they encode; each
carries a Slot recording its role and position:

    polynomial f        d coefficients                 ('f', (k,))
    basis 𝓑             d × d coefficients             ('B', (u, k))
    Δ, σ                n × d^r tensor coefficients    ('Delta' | 'sigma', (i, j₁, …, j_r))
    ε                   n coordinates                  ('eps', (i,))

Quantified coefficients of cofactors get structural names (m1_2_3_1, q2_1_1_4, …);
sibling subformulas may reuse them.
"""

import logging
from itertools import combinations, permutations
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from src.fol.formula import (
    FALSE,
    ONE,
    TRUE,
    ZERO,
    Add,
    And,
    Eq,
    Forall,
    Formula,
    Node,
    Not,
    Or,
    Slot,
    Term,
    Var,
    conj,
    disj,
    eq_zero,
    exists,
    ne_zero,
    t_add,
    t_mul,
    t_neg,
)
from src.fol.symbolic import SymPoly
from src.groebner.dimension import monomial_dimension
from src.polyalg.bounded import first_monomials, monomial_rank, monomial_unrank
from src.polyalg.monomials import Monomial, div, is_coprime, lcm
from src.polyalg.monomials import mul as mono_mul
from src.utils.errors import InvalidParameter

logger = logging.getLogger(__name__)


class _Layout:
    """Allocates free variables l1, l2, … together with their slots."""

    def __init__(self):
        self.names: List[str] = []
        self.slots: List[Slot] = []

    def _new(self, role: str, position: Tuple[int, ...]) -> Term:
        name = f"l{len(self.names) + 1}"
        self.names.append(name)
        self.slots.append(Slot(name, role, position))
        return Var(name)

    def poly(self, role: str, d: int) -> List[Term]:
        return [self._new(role, (k,)) for k in range(1, d + 1)]

    def basis(self, d: int) -> List[List[Term]]:
        return [[self._new("B", (u, k)) for k in range(1, d + 1)] for u in range(1, d + 1)]

    def structure_map(self, role: str, n: int, d: int, r: int) -> List[List[Term]]:
        rows = []
        for i in range(1, n + 1):
            row = []
            for index in range(d ** r):
                digits = []
                rest = index
                for _ in range(r):
                    digits.append(rest % d + 1)
                    rest //= d
                row.append(self._new(role, (i,) + tuple(reversed(digits))))
            rows.append(row)
        return rows

    def point(self, role: str, n: int) -> List[Term]:
        return [self._new(role, (i,)) for i in range(1, n + 1)]

    def formula(self, root: Node, label: str) -> Formula:
        logger.debug(f"built {label} with {len(self.names)} free variables")
        return Formula(root, tuple(self.names), tuple(self.slots), label)


def _check(condition: bool, message: str):
    if not condition:
        raise InvalidParameter(message, stage="fol")


def _guarded(guard: Node, build: Callable[[], Node]) -> Node:
    """guard ∧ build(), where the second conjunct is only constructed after the guard."""

    def items() -> Iterator[Node]:
        yield guard
        yield build()

    return And.lazy(items)


# Leading monomials

def _leading_is(coefficients: Sequence[Term], e: int) -> Node:
    """(λ_e ≠ 0) ∧ (λ_{e+1} = 0) ∧ … ∧ (λ_d = 0)."""
    return conj(ne_zero(coefficients[e - 1]), *[eq_zero(c) for c in coefficients[e:]])


def _is_zero(coefficients: Sequence[Term]) -> Node:
    return conj(*[eq_zero(c) for c in coefficients])


def _lead_or_zero(coefficients: Sequence[Term], c: int) -> Node:
    return _is_zero(coefficients) if c == 0 else _leading_is(coefficients, c)


def _lead_tree(rows: Sequence[Sequence[Term]], leaf: Callable[[Tuple[int, ...]], Node], prefix: Tuple[int, ...] = ()) -> Node:
    """
    ⋁ over leading-monomial assignments X = (c₁,…,c_d), cᵤ = 0 meaning gᵤ = 0, of
    φ_{c₁}(g₁) ∧ … ∧ φ_{c_d}(g_d) ∧ leaf(X), nested one element at a time so that an
    evaluation follows a single branch.
    """
    u = len(prefix)
    if u == len(rows):
        return leaf(prefix)
    d = len(rows[u])

    def branches() -> Iterator[Node]:
        for c in range(d + 1):
            yield _guarded(_lead_or_zero(rows[u], c), lambda c=c: _lead_tree(rows, leaf, prefix + (c,)))

    return Or.lazy(branches)


# Membership and standard representations

def _cofactor_sum(basis: Sequence[SymPoly], cofactors: Sequence[Tuple[int, Monomial]], tag: str, nvars: int):
    names = []
    products = []
    for u, m in cofactors:
        name = f"{tag}_{u + 1}_{monomial_rank(m)}"
        names.append(name)
        products.append(basis[u].shift(m).scale(Var(name)))
    return names, SymPoly.sum(products, nvars)


def _vanishes(f: SymPoly) -> Node:
    return conj(*[eq_zero(c) for c in f.sorted_coefficients()])


def _membership(f: SymPoly, basis: Sequence[SymPoly], tag: str) -> Node:
    """
    f ∈ (basis) for a Gröbner basis: ∃ cofactors qᵤ with f = Σ qᵤ gᵤ, every qᵤ
    supported on monomials up to the largest monomial of f.
    """
    if f.is_zero():
        return TRUE
    if not basis:
        return _vanishes(f)
    top = monomial_rank(f.max_monomial())
    monomials = first_monomials(top, f.nvars)
    cofactors = [(u, m) for u in range(len(basis)) for m in monomials]
    names, combination = _cofactor_sum(basis, cofactors, tag, f.nvars)
    return exists(names, _vanishes(f - combination))


def _standard_representation(S: SymPoly, polys: Sequence[SymPoly], leads: Tuple[int, ...], e: int, n: int, tag: str) -> Node:
    """∃ qᵤ: S = Σ qᵤ gᵤ with in(qᵤ gᵤ) ≤ 𝗆_e, given in(gᵤ) = 𝗆_{leads[u]}."""
    cofactors = []
    for u, a in enumerate(leads):
        if a == 0:
            continue
        lead = monomial_unrank(a, n)
        for m in first_monomials(e, n):
            if monomial_rank(mono_mul(m, lead)) <= e:
                cofactors.append((u, m))
    names, combination = _cofactor_sum(polys, cofactors, tag, n)
    return exists(names, _vanishes(S - combination))


def _pair_condition(i: int, j: int, polys: Sequence[SymPoly], leads: Tuple[int, ...], n: int) -> Node:
    """
    The S-polynomial of gᵢ, gⱼ is 0 or has a standard representation:

        (S = 0) ∨ ⋁_{e < rank(lcm)} (φ_e(S) ∧ χ_e(S))
    """
    a, b = leads[i], leads[j]
    if a == 0 or b == 0:
        return TRUE
    ma, mb = monomial_unrank(a, n), monomial_unrank(b, n)
    if is_coprime(ma, mb):
        return TRUE
    L = lcm(ma, mb)
    gi, gj = polys[i], polys[j]
    ci, cj = gi.terms.get(ma, ZERO), gj.terms.get(mb, ZERO)
    S = (gi.shift(div(L, ma)).scale(cj) - gj.shift(div(L, mb)).scale(ci)).without(L)
    top = monomial_rank(L) - 1
    coefficients = S.coefficients_by_rank(top)
    tag = f"m{i + 1}_{j + 1}"

    def cases() -> Iterator[Node]:
        yield _is_zero(coefficients)
        for e in range(1, top + 1):
            yield _guarded(
                _leading_is(coefficients, e),
                lambda e=e: _standard_representation(S, polys, leads, e, n, tag),
            )

    return Or.lazy(cases)


def _beta(rows: Sequence[Sequence[Term]], n: int) -> Node:
    polys = [SymPoly.bounded(row, n) for row in rows]
    d = len(rows)

    def leaf(leads: Tuple[int, ...]) -> Node:
        truncated = [polys[u].truncate(c) if c else SymPoly(n) for u, c in enumerate(leads)]
        return And.lazy(
            lambda: (_pair_condition(i, j, truncated, leads, n) for i in range(d) for j in range(i + 1, d))
        )

    return _lead_tree(rows, leaf)


def _delta(rows: Sequence[Sequence[Term]], e: int, n: int) -> Node:
    def leaf(leads: Tuple[int, ...]) -> Node:
        monomials = [monomial_unrank(c, n) for c in leads if c]
        return TRUE if monomial_dimension(monomials, n) == e else FALSE

    return _lead_tree(rows, leaf)


# Structure maps

def _tensor_basis(polys: Sequence[SymPoly], n: int, r: int) -> List[SymPoly]:
    return [g.place(n * r, n * j) for j in range(r) for g in polys]


def _factors_through(polys: Sequence[SymPoly], images: Sequence[SymPoly], n: int, r: int, tag: str) -> Node:
    """Λ(gₖ) ∈ J_r for every basis element gₖ, where J_r is generated by r copies of 𝓑."""
    basis = _tensor_basis(polys, n, r)

    def items() -> Iterator[Node]:
        for k, g in enumerate(polys):
            yield _membership(g.compose(images, n * r), basis, f"{tag}{k + 1}")

    return And.lazy(items)


def _zeta(polys: Sequence[SymPoly], images: Sequence[SymPoly], n: int, r: int) -> Node:
    return _factors_through(polys, images, n, r, f"q{r}_")


def _hopf_axioms(polys, delta, sigma, eps, n) -> Node:
    """Coassociativity (in J₃), counit laws and antipode laws (in J₁), per generator."""
    nn, n3 = 2 * n, 3 * n
    ident = [SymPoly.variable(n, k) for k in range(n)]
    eps_const = [SymPoly.constant(n, c) for c in eps]
    left = [f.place(n3, 0) for f in delta] + [SymPoly.variable(n3, nn + k) for k in range(n)]
    right = [SymPoly.variable(n3, k) for k in range(n)] + [f.place(n3, n) for f in delta]
    basis1 = polys
    basis3 = _tensor_basis(polys, n, 3)

    def items() -> Iterator[Node]:
        for i, D in enumerate(delta):
            yield _membership(D.compose(left, n3) - D.compose(right, n3), basis3, f"a{i + 1}")
        for i, D in enumerate(delta):
            x = ident[i]
            yield _membership(D.compose(eps_const + ident, n) - x, basis1, f"e{i + 1}l")
            yield _membership(D.compose(ident + eps_const, n) - x, basis1, f"e{i + 1}r")
        for i, D in enumerate(delta):
            unit = SymPoly.constant(n, eps[i])
            yield _membership(D.compose(sigma + ident, n) - unit, basis1, f"s{i + 1}l")
            yield _membership(D.compose(ident + sigma, n) - unit, basis1, f"s{i + 1}r")

    return And.lazy(items)


def _eta(rows, delta_rows, sigma_rows, eps, n, d) -> Node:
    polys = [SymPoly.bounded(row, n) for row in rows]
    delta = [SymPoly.tensor_bounded(row, n, 2, d) for row in delta_rows]
    sigma = [SymPoly.bounded(row, n) for row in sigma_rows]
    counit = [SymPoly.constant(0, c) for c in eps]

    def items() -> Iterator[Node]:
        yield _zeta(polys, delta, n, 2)
        yield _zeta(polys, sigma, n, 1)
        yield _zeta(polys, counit, n, 0)
        yield _hopf_axioms(polys, delta, sigma, eps, n)

    return And.lazy(items)


# Lie algebra dimension

def _determinant(matrix: Sequence[Sequence[Term]]) -> Term:
    size = len(matrix)
    summands = []
    for perm in permutations(range(size)):
        inversions = sum(1 for x in range(size) for y in range(x + 1, size) if perm[x] > perm[y])
        product = t_mul(*[matrix[row][perm[row]] for row in range(size)])
        summands.append(t_neg(product) if inversions % 2 else product)
    return t_add(*summands)


def jacobian_terms(rows: Sequence[Sequence[Term]], eps: Sequence[Term], n: int) -> List[List[Term]]:
    """ε(∂gₖ/∂x_l) as terms in the basis coefficients and the counit coordinates."""
    point = [SymPoly.constant(0, c) for c in eps]
    out = []
    for row in rows:
        g = SymPoly.bounded(row, n)
        out.append([g.partial(l).compose(point, 0).terms.get((), ZERO) for l in range(n)])
    return out


def _rank_is(matrix: Sequence[Sequence[Term]], rank: int, ncols: int) -> Node:
    """rank = ρ: some ρ×ρ minor is nonzero and every (ρ+1)×(ρ+1) minor vanishes."""
    nrows = len(matrix)
    if rank < 0 or rank > min(nrows, ncols):
        return FALSE

    def minors(size: int) -> Iterator[Term]:
        for rs in combinations(range(nrows), size):
            for cs in combinations(range(ncols), size):
                yield _determinant([[matrix[r][c] for c in cs] for r in rs])

    nonzero = Or.lazy(lambda: (ne_zero(m) for m in minors(rank))) if rank > 0 else TRUE
    vanishing = And.lazy(lambda: (eq_zero(m) for m in minors(rank + 1))) if rank < min(nrows, ncols) else TRUE
    return conj(nonzero, vanishing)


def _tau(rows, eps, e: int, n: int) -> Node:
    return _rank_is(jacobian_terms(rows, eps, n), n - e, n)


def _theta(rows, eps, n: int) -> Node:
    def items() -> Iterator[Node]:
        for e in range(n + 1):
            yield _guarded(_delta(rows, e, n), lambda e=e: _tau(rows, eps, e, n))

    return Or.lazy(items)


# Public builders

def phi(e: int, d: int, n: int = 1) -> Formula:
    """in(f) = 𝗆_e for a d-bounded f (d free variables)."""
    _check(d >= 1 and 1 <= e <= d, f"phi needs 1 ≤ e ≤ d, got e={e}, d={d}")
    layout = _Layout()
    f = layout.poly("f", d)
    return layout.formula(_leading_is(f, e), f"phi(e={e},d={d})")


def beta(d: int, n: int) -> Formula:
    """The d-bounded list 𝓑 is a Gröbner basis (d² free variables)."""
    _check(d >= 1 and n >= 1, f"beta needs d, n ≥ 1, got d={d}, n={n}")
    layout = _Layout()
    rows = layout.basis(d)
    return layout.formula(_beta(rows, n), f"beta(d={d},n={n})")


def delta(e: int, d: int, n: int) -> Formula:
    """dim (𝓑) = e for a d-bounded Gröbner basis 𝓑 (d² free variables)."""
    _check(d >= 1 and n >= 1 and 0 <= e <= d, f"delta needs 0 ≤ e ≤ d, got e={e}, d={d}")
    layout = _Layout()
    rows = layout.basis(d)
    return layout.formula(_delta(rows, e, n), f"delta(e={e},d={d},n={n})")


def iota(d: int, n: int) -> Formula:
    """f ∈ (𝓑) for a d-bounded Gröbner basis 𝓑 and d-bounded f (d² + d free variables)."""
    _check(d >= 1 and n >= 1, f"iota needs d, n ≥ 1, got d={d}, n={n}")
    layout = _Layout()
    rows = layout.basis(d)
    f = layout.poly("f", d)
    polys = [SymPoly.bounded(row, n) for row in rows]
    return layout.formula(_membership(SymPoly.bounded(f, n), polys, "q"), f"iota(d={d},n={n})")


def zeta(d: int, r: int, n: int) -> Formula:
    """
    A d-bounded Λ: S → S^{⊗r} descends to S/I → (S/I)^{⊗r}, I = (𝓑) a Gröbner basis
    (d² + n·d^r free variables; r = 0 is a point of Spec S).
    """
    _check(d >= 1 and n >= 1 and r >= 0, f"zeta needs d, n ≥ 1 and r ≥ 0, got d={d}, r={r}, n={n}")
    layout = _Layout()
    rows = layout.basis(d)
    images = layout.structure_map("Lambda", n, d, r)
    polys = [SymPoly.bounded(row, n) for row in rows]
    maps = [SymPoly.tensor_bounded(row, n, r, d) for row in images]
    return layout.formula(_zeta(polys, maps, n, r), f"zeta(d={d},r={r},n={n})")


def eta(d: int, n: int) -> Formula:
    """
    (S/(𝓑), Δ, σ, ε) is a Hopf algebra, for a d-bounded Gröbner basis 𝓑 and
    d-bounded structure maps (d² + n(d² + d + 1) free variables).
    """
    _check(d >= 1 and n >= 1, f"eta needs d, n ≥ 1, got d={d}, n={n}")
    layout = _Layout()
    rows = layout.basis(d)
    delta_rows = layout.structure_map("Delta", n, d, 2)
    sigma_rows = layout.structure_map("sigma", n, d, 1)
    eps = layout.point("eps", n)
    return layout.formula(_eta(rows, delta_rows, sigma_rows, eps, n, d), f"eta(d={d},n={n})")


def tau(e: int, d: int, n: int) -> Formula:
    """The Jacobian of 𝓑 at ε has nullity e (d² + n free variables)."""
    _check(d >= 1 and n >= 1 and 0 <= e <= d, f"tau needs 0 ≤ e ≤ d, got e={e}, d={d}")
    layout = _Layout()
    rows = layout.basis(d)
    eps = layout.point("eps", n)
    return layout.formula(_tau(rows, eps, e, n), f"tau(e={e},d={d},n={n})")


def theta(d: int, n: int) -> Formula:
    """⋁_{e=0..n} (δ_e ∧ τ_e): the group described by 𝓑 is smooth (d² + n free variables)."""
    _check(d >= 1 and n >= 1, f"theta needs d, n ≥ 1, got d={d}, n={n}")
    layout = _Layout()
    rows = layout.basis(d)
    eps = layout.point("eps", n)
    return layout.formula(_theta(rows, eps, n), f"theta(d={d},n={n})")


def psi(p: int) -> Formula:
    """The sentence 1 + ⋯ + 1 = 0 (p ones): the characteristic divides p."""
    _check(p >= 1, f"psi needs p ≥ 1, got {p}")
    lhs = ONE if p == 1 else Add((ONE,) * p)
    return Formula(Eq(lhs, ZERO), (), (), f"psi(p={p})")


def smoothness_sentence(d: int, n: int) -> Formula:
    """
    (∀λ₁)…(∀λ_N) (β ∧ η → θ): every d-bounded Hopf quadruple in n variables
    describes a smooth group. Constructible and printable; not evaluable.
    """
    _check(d >= 1 and n >= 1, f"Phi needs d, n ≥ 1, got d={d}, n={n}")
    layout = _Layout()
    rows = layout.basis(d)
    delta_rows = layout.structure_map("Delta", n, d, 2)
    sigma_rows = layout.structure_map("sigma", n, d, 1)
    eps = layout.point("eps", n)
    hypothesis = conj(_beta(rows, n), _eta(rows, delta_rows, sigma_rows, eps, n, d))
    body = disj(Not(hypothesis), _theta(rows, eps, n))
    return Formula(Forall(tuple(layout.names), body), (), (), f"Phi(d={d},n={n})")


BUILDERS: Dict[str, Callable[..., Formula]] = {
    "phi": lambda d, n=1, e=1, **_: phi(e, d, n),
    "beta": lambda d, n=1, **_: beta(d, n),
    "delta": lambda d, n=1, e=0, **_: delta(e, d, n),
    "iota": lambda d, n=1, **_: iota(d, n),
    "zeta": lambda d, n=1, r=1, **_: zeta(d, r, n),
    "eta": lambda d, n=1, **_: eta(d, n),
    "tau": lambda d, n=1, e=0, **_: tau(e, d, n),
    "theta": lambda d, n=1, **_: theta(d, n),
    "psi": lambda p, **_: psi(p),
    "Phi": lambda d, n=1, **_: smoothness_sentence(d, n),
}


def build(kind: str, **params) -> Formula:
    """
    Build a formula by name.

    Args:
        kind: One of phi, beta, delta, iota, zeta, eta, tau, theta, psi, Phi
        params: d, n, e, r or p as the builder requires

    Returns:
        The formula with its free-variable ledger
    """
    if kind not in BUILDERS:
        raise InvalidParameter(f"unknown formula {kind!r} (known: {', '.join(BUILDERS)})", stage="fol")
    try:
        return BUILDERS[kind](**params)
    except TypeError as e:
        raise InvalidParameter(f"bad parameters for {kind}: {e}", stage="fol")
