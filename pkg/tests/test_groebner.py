"""
Unit tests for the groebner package: division, Buchberger, membership,
elimination, dimension and the degree bounds.

Membership is cross-checked against a linear-algebra oracle (standard
representations of degree ≤ deg f) and dimension against the growth of the
Hilbert function of monomial ideals.
"""

import random
import sys
import unittest
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from src.groebner import (
    GroebnerBasis,
    buchberger,
    dimension,
    divide,
    dube_bound,
    eliminate,
    is_groebner,
    max_independent_set,
    member,
    monomial_dimension,
    reduce_to_d_bounded,
    within_dube_bound,
)
from src.polyalg import GRADED_LEX, FieldSpec, PolyRing, lex
from src.polyalg.bounded import bound_of_all
from src.utils.config import ResourceLimits
from src.utils.errors import BasisNotVerified, InvalidParameter, ResourceLimitExceeded, UnboundedTerm
from src.utils.linalg import is_consistent

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def random_poly(rng: random.Random, ring: PolyRing, degree: int, terms: int):
    n = ring.nvars
    exps = [m for m in product(range(degree + 1), repeat=n) if sum(m) <= degree]
    out = {}
    for _ in range(terms):
        out[rng.choice(exps)] = rng.randint(-3, 3)
    return ring.from_terms({m: c for m, c in out.items() if c})


def oracle_member(f, basis: GroebnerBasis) -> bool:
    """f ∈ span{m·g : deg(m·g) ≤ deg f}, solved exactly."""
    if f.is_zero():
        return True
    ring = f.ring
    top = f.total_degree()
    columns = []
    for g in basis.nonzero():
        room = top - g.total_degree()
        if room < 0:
            continue
        for m in product(range(room + 1), repeat=ring.nvars):
            if sum(m) <= room:
                columns.append(g.mul_term(m, ring.field.one))
    monomials = sorted({m for c in columns for m in c.terms} | set(f.terms))
    rows = [[c.terms.get(m, ring.field.zero) for c in columns] for m in monomials]
    rhs = [f.terms.get(m, ring.field.zero) for m in monomials]
    if not columns:
        return False
    return is_consistent(rows, rhs, len(columns), ring.field)


def hilbert_dimension(leads, n: int) -> int:
    """Degree of the affine Hilbert polynomial of a monomial ideal (-1 for the unit ideal)."""
    if any(not any(m) for m in leads):
        return -1

    def standard(t):
        return sum(
            1
            for m in product(range(t + 1), repeat=n)
            if sum(m) <= t and not any(all(a >= b for a, b in zip(m, g)) for g in leads)
        )

    values = [standard(t) for t in range(12, 12 + n + 2)]
    degree = -1
    while any(values):
        values = [b - a for a, b in zip(values, values[1:])]
        degree += 1
    return degree


class TestDivision(unittest.TestCase):
    """Tests for multivariate division."""

    def test_remainder_and_quotients(self):
        """Test that f = Σ qᵢgᵢ + r."""
        ring = PolyRing(Q, ("x", "y"))
        f = ring.parse("x^2*y + x*y^2 + y^2")
        divisors = [ring.parse("x*y - 1"), ring.parse("y^2 - 1")]
        result = divide(f, divisors)
        total = result.remainder
        for q, g in zip(result.quotients, divisors):
            total = total + q * g
        self.assertEqual(total, f)
        for m in result.remainder.terms:
            for g in divisors:
                lead = g.leading_monomial()
                self.assertFalse(all(a >= b for a, b in zip(m, lead)))


class TestBuchberger(unittest.TestCase):
    """Tests for Gröbner basis computation."""

    def test_reduced_basis(self):
        """Test the reduced GradedLex basis of (x²+y², xy)."""
        ring = PolyRing(Q, ("x", "y"))
        basis = buchberger([ring.parse("x^2 + y^2"), ring.parse("x*y")], GRADED_LEX, ring=ring)
        self.assertEqual(set(basis.to_strings()), {"x^2 + y^2", "x*y", "y^3"})
        self.assertTrue(basis.reduced)
        self.assertTrue(is_groebner(basis.generators, GRADED_LEX))

    def test_input_order_does_not_matter(self):
        """Test that the reduced basis is independent of generator order."""
        ring = PolyRing(Q, ("x", "y", "z"))
        gens = [ring.parse("x*z - y^2"), ring.parse("x^3 - y*z"), ring.parse("x + y + z - 1")]
        first = buchberger(gens, GRADED_LEX, ring=ring)
        second = buchberger(list(reversed(gens)), GRADED_LEX, ring=ring)
        self.assertEqual(first.to_strings(), second.to_strings())

    def test_random_generator_orders(self):
        """Test identical reduced bases under shuffled and duplicated generators on 100 random ideals."""
        rng = random.Random(1729)
        for trial in range(100):
            field = F5 if trial % 2 else Q
            n = 1 + trial % 3
            ring = PolyRing(field, ("x", "y", "z")[:n])
            gens = [random_poly(rng, ring, rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
            expected = buchberger(gens, GRADED_LEX, ring=ring).to_strings()
            shuffled = list(gens)
            rng.shuffle(shuffled)
            with self.subTest(trial=trial, gens=[str(g) for g in gens]):
                self.assertEqual(buchberger(shuffled, GRADED_LEX, ring=ring).to_strings(), expected)
                self.assertEqual(buchberger(list(reversed(gens)) + gens[:1], GRADED_LEX, ring=ring).to_strings(), expected)

    def test_unit_ideal(self):
        """Test that inconsistent equations give the basis {1}."""
        ring = PolyRing(Q, ("x",))
        basis = buchberger([ring.parse("x"), ring.parse("x - 1")], GRADED_LEX, ring=ring)
        self.assertEqual(basis.to_strings(), ["1"])
        self.assertTrue(basis.is_unit_ideal())
        self.assertEqual(dimension(basis), -1)

    def test_zero_ideal_needs_ring(self):
        """Test that an empty generator list needs an explicit ring."""
        with self.assertRaises(InvalidParameter):
            buchberger([])
        ring = PolyRing(Q, ("x",))
        self.assertTrue(buchberger([], ring=ring).is_zero_ideal())

    def test_lex_triangular(self):
        """Test that Lex exposes a univariate eliminant."""
        ring = PolyRing(Q, ("x", "y"), lex())
        basis = buchberger([ring.parse("x^2 + y^2 - 1"), ring.parse("x - y")], lex(), ring=ring)
        self.assertIn("2*y^2 - 1", [str(g.scale(2)) for g in basis])

    def test_resource_limit(self):
        """Test that a tiny pair budget stops the computation."""
        ring = PolyRing(Q, ("x", "y", "z"))
        gens = [ring.parse("x*z - y^2"), ring.parse("x^3 - y*z")]
        with self.assertRaises(ResourceLimitExceeded):
            buchberger(gens, GRADED_LEX, ring=ring, limits=ResourceLimits(max_pairs=0))

    def test_unverified_basis_refused(self):
        """Test that membership needs a verified basis."""
        ring = PolyRing(Q, ("x", "y"))
        raw = GroebnerBasis(ring, [ring.parse("x^2 + y^2"), ring.parse("x*y")], GRADED_LEX)
        with self.assertRaises(BasisNotVerified):
            member(ring.parse("y^3"), raw)
        with self.assertRaises(BasisNotVerified):
            GroebnerBasis.verify(ring, [ring.parse("x^2 + y^2"), ring.parse("x*y")])


class TestMembership(unittest.TestCase):
    """Tests for ideal membership against the linear-algebra oracle."""

    def test_basic(self):
        """Test members and non-members of (x²+y², xy)."""
        ring = PolyRing(Q, ("x", "y"))
        basis = buchberger([ring.parse("x^2 + y^2"), ring.parse("x*y")], GRADED_LEX, ring=ring)
        self.assertTrue(member(ring.parse("y^3"), basis))
        self.assertTrue(member(ring.zero(), basis))
        self.assertFalse(member(ring.parse("y^2"), basis))

    def test_random_agreement_with_oracle(self):
        """Test member against the oracle on random ideals over F5 and Q."""
        rng = random.Random(20240611)
        disagreements = 0
        for trial in range(100):
            field = F5 if trial % 2 else Q
            n = 1 + trial % 3
            ring = PolyRing(field, ("x", "y", "z")[:n])
            gens = [random_poly(rng, ring, rng.randint(1, 3), rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
            basis = buchberger(gens, GRADED_LEX, ring=ring)
            for g in gens:
                self.assertTrue(member(g, basis))
            f = random_poly(rng, ring, 3, 3)
            if rng.random() < 0.5 and not gens[0].is_zero():
                f = f * gens[0]
            if member(f, basis) != oracle_member(f, basis):
                disagreements += 1
        self.assertEqual(disagreements, 0)


class TestElimination(unittest.TestCase):
    """Tests for elimination ideals."""

    def test_twisted_cubic(self):
        """Test implicitisation of the twisted cubic."""
        ring = PolyRing(Q, ("t", "x", "y", "z"))
        gens = [ring.parse("x - t"), ring.parse("y - t^2"), ring.parse("z - t^3")]
        basis = eliminate(gens, ["x", "y", "z"], ring=ring)
        self.assertEqual(basis.ring.variables, ("x", "y", "z"))
        sub = basis.ring
        for text in ("x^2 - y", "x*y - z", "y^2 - x*z"):
            self.assertTrue(member(sub.parse(text), basis))

    def test_lex_and_block_agree(self):
        """Test that Lex and block elimination give the same ideal."""
        ring = PolyRing(Q, ("u", "x"))
        gens = [ring.parse("x*u - 1")]
        block_basis = eliminate(gens, ["x"], ring=ring)
        lex_basis = eliminate(gens, ["x"], ring=ring, use_lex=True)
        self.assertTrue(block_basis.is_zero_ideal())
        self.assertTrue(lex_basis.is_zero_ideal())


class TestDimension(unittest.TestCase):
    """Tests for Krull dimension."""

    def test_examples(self):
        """Test dimensions of standard ideals."""
        ring = PolyRing(Q, ("x", "y", "z"))
        self.assertEqual(dimension(buchberger([ring.parse("x*z - y^2"), ring.parse("x^3 - y*z")], ring=ring)), 1)
        self.assertEqual(dimension(buchberger([], ring=ring)), 3)
        self.assertEqual(dimension(buchberger([ring.parse("x"), ring.parse("y"), ring.parse("z")], ring=ring)), 0)

    def test_max_independent_set(self):
        """Test the first maximal independent set."""
        ring = PolyRing(Q, ("x", "y"))
        basis = buchberger([ring.parse("x^2"), ring.parse("x*y")], ring=ring)
        self.assertEqual(max_independent_set(basis), ("y",))

    def test_monomial_ideals_against_hilbert_growth(self):
        """Test monomial_dimension against the Hilbert function on random monomial ideals."""
        rng = random.Random(7)
        for _ in range(150):
            n = rng.randint(1, 3)
            pool = [m for m in product(range(4), repeat=n) if 0 < sum(m) <= 3]
            leads = rng.sample(pool, rng.randint(1, min(4, len(pool))))
            self.assertEqual(monomial_dimension(leads, n), hilbert_dimension(leads, n), msg=str(leads))
        self.assertEqual(monomial_dimension([(0, 0)], 2), -1)


class TestBounds(unittest.TestCase):
    """Tests for Dubé's bound and d-bounded bases."""

    def test_dube_values(self):
        """Test literal values of the bound."""
        self.assertEqual(dube_bound(2, 2).refined, 32)
        self.assertEqual(dube_bound(2, 2).coarse, 32)
        self.assertEqual(dube_bound(1, 1).refined, 3)
        with self.assertRaises(InvalidParameter):
            dube_bound(0, 2)

    def test_within_bound(self):
        """Test the comparison helper."""
        self.assertTrue(within_dube_bound(32, 2, 2))
        self.assertFalse(within_dube_bound(33, 2, 2))

    def test_computed_bases_respect_bound(self):
        """Test that computed bases stay under the coarse bound."""
        ring = PolyRing(Q, ("x", "y", "z"))
        gens = [ring.parse("x*z - y^2"), ring.parse("x^3 - y*z")]
        basis = buchberger(gens, ring=ring)
        self.assertTrue(within_dube_bound(basis.max_degree(), 3, 3))

    def test_reduce_to_d_bounded(self):
        """Test that a bounded basis shrinks to at most d elements."""
        ring = PolyRing(Q, ("x",))
        basis = buchberger([ring.parse("x^2 - 1")], ring=ring)
        d = bound_of_all(basis.nonzero())
        shrunk = reduce_to_d_bounded(basis, d, pad=True)
        self.assertEqual(len(shrunk), d)
        self.assertEqual(shrunk.nonzero(), basis.nonzero())
        with self.assertRaises(UnboundedTerm):
            reduce_to_d_bounded(basis, 2)


if __name__ == '__main__':
    unittest.main()
