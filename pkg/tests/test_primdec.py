"""
Unit tests for factorization and primary decomposition.
"""

import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from src.idealops import Ideal
from src.polyalg import FieldSpec, PolyRing
from src.primdec import (
    associated_prime,
    factor_polynomial,
    factor_univariate,
    is_primary,
    primdec,
    primdec_zero_dim,
    quotient_dimension,
    univariate_eliminant,
    verify_decomposition,
)
from src.utils.errors import InvalidParameter, NotProper, NotZeroDimensional

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
F7 = FieldSpec.prime(7)


def primes_of(components):
    return {tuple(c.associated_prime.to_strings()) for c in components}


class TestFactorization(unittest.TestCase):
    """Tests for factorization over Q and Fp."""

    def test_rational(self):
        """Test x² - 1 over Q."""
        ring = PolyRing(Q, ("x",))
        factors = factor_polynomial(ring.parse("x^2 - 1"))
        self.assertEqual({(str(f), k) for f, k in factors}, {("x - 1", 1), ("x + 1", 1)})

    def test_prime_field_univariate(self):
        """Test x³ - 1 = (x - 1)³ over F3."""
        ring = PolyRing(F3, ("x",))
        factors = factor_polynomial(ring.parse("x^3 - 1"))
        self.assertEqual([(str(f), k) for f, k in factors], [("x + 2", 3)])

    def test_prime_field_multivariate(self):
        """Test x² + y² = (x + y)² over F2."""
        ring = PolyRing(F2, ("x", "y"))
        factors = factor_polynomial(ring.parse("x^2 + y^2"))
        self.assertEqual([(str(f), k) for f, k in factors], [("x + y", 2)])

    def test_irreducible_stays(self):
        """Test that x² + 2 is irreducible over F5."""
        ring = PolyRing(F5, ("x",))
        factors = factor_polynomial(ring.parse("x^2 + 2"))
        self.assertEqual(len(factors), 1)

    def test_constant_and_zero(self):
        """Test the degenerate inputs."""
        ring = PolyRing(Q, ("x",))
        self.assertEqual(factor_polynomial(ring.constant(3)), [])
        with self.assertRaises(InvalidParameter):
            factor_polynomial(ring.zero())

    def test_over_parameter_field(self):
        """Test x² - y² factored in x over Q(y)."""
        ring = PolyRing(Q, ("x", "y"))
        factors = factor_univariate(ring.parse("x^2 - y^2"), "x")
        self.assertEqual(len(factors), 2)
        self.assertTrue(all(f.degree_in(0) == 1 and k == 1 for f, k in factors))


class TestZeroDimensional(unittest.TestCase):
    """Tests for the zero-dimensional machinery."""

    def test_quotient_dimension(self):
        """Test dim_k k[x,y]/(x²+y², xy) = 4."""
        ring = PolyRing(Q, ("x", "y"))
        I = Ideal.from_strings(ring, ["x^2 + y^2", "x*y"])
        self.assertEqual(quotient_dimension(I, []), 4)

    def test_univariate_eliminant(self):
        """Test the eliminant of a finite point set."""
        ring = PolyRing(Q, ("x", "y"))
        gens = [ring.parse("x^2 - 1"), ring.parse("y - x")]
        g = univariate_eliminant(gens, ring, "y", [])
        self.assertEqual(g.degree_in(1), 2)

    def test_not_zero_dimensional(self):
        """Test that a curve has no eliminant in x alone."""
        ring = PolyRing(Q, ("x", "y"))
        with self.assertRaises(NotZeroDimensional):
            univariate_eliminant([ring.parse("x*y - 1")], ring, "x", [])

    def test_two_points(self):
        """Test that two points give two maximal components."""
        ring = PolyRing(Q, ("x", "y"))
        parts = primdec_zero_dim(Ideal.from_strings(ring, ["x^2 - 1", "y - x"]))
        self.assertEqual(len(parts), 2)
        for part in parts:
            self.assertTrue(part.ideal.equals(part.witness))


class TestPrimdec(unittest.TestCase):
    """Tests for primary decomposition in any dimension."""

    def test_embedded_component(self):
        """Test (x², xy) = (x) ∩ (x², y) with an embedded prime."""
        ring = PolyRing(Q, ("x", "y"))
        I = Ideal.from_strings(ring, ["x^2", "x*y"])
        components = primdec(I)
        self.assertEqual(len(components), 2)
        self.assertEqual(primes_of(components), {("x",), ("x", "y")})
        flags = {tuple(c.associated_prime.to_strings()): c.isolated for c in components}
        self.assertTrue(flags[("x",)])
        self.assertFalse(flags[("x", "y")])
        self.assertTrue(verify_decomposition(I, components))

    def test_cyclotomic_over_q(self):
        """Test that x⁶ - 1 splits into four primes over Q."""
        ring = PolyRing(Q, ("x",))
        components = primdec(Ideal.from_strings(ring, ["x^6 - 1"]))
        self.assertEqual(
            primes_of(components),
            {("x - 1",), ("x + 1",), ("x^2 + x + 1",), ("x^2 - x + 1",)},
        )
        self.assertTrue(all(c.isolated for c in components))

    def test_cyclotomic_over_fp(self):
        """Test x⁶ - 1 over F7 (six points) and F3 (two non-reduced points)."""
        ring7 = PolyRing(F7, ("x",))
        self.assertEqual(len(primdec(Ideal.from_strings(ring7, ["x^6 - 1"]))), 6)
        ring3 = PolyRing(F3, ("x",))
        components = primdec(Ideal.from_strings(ring3, ["x^6 - 1"]))
        self.assertEqual(primes_of(components), {("x + 1",), ("x + 2",)})
        self.assertEqual({tuple(c.ideal.to_strings()) for c in components}, {("x^3 + 1",), ("x^3 + 2",)})

    def test_two_curves(self):
        """Test a line plus a quartic curve in three-space."""
        ring = PolyRing(Q, ("x", "y", "z"))
        I = Ideal.from_strings(ring, ["x*z - y^2", "x^3 - y*z"])
        components = primdec(I)
        self.assertEqual(len(components), 2)
        self.assertIn(("x", "y"), primes_of(components))
        self.assertTrue(all(c.ideal.dimension() == 1 for c in components))
        self.assertTrue(verify_decomposition(I, components))

    def test_prime_ideal(self):
        """Test that a prime ideal is its own decomposition."""
        ring = PolyRing(Q, ("x", "y"))
        I = Ideal.from_strings(ring, ["x*y - 1"])
        components = primdec(I)
        self.assertEqual(len(components), 1)
        self.assertTrue(components[0].ideal.equals(I))
        self.assertEqual(components[0].to_dict()["ideal"], ["x*y - 1"])

    def test_unit_ideal(self):
        """Test that the unit ideal has no decomposition."""
        ring = PolyRing(Q, ("x",))
        with self.assertRaises(NotProper):
            primdec(Ideal.unit(ring))

    def test_zero_ideal(self):
        """Test that (0) is primary with prime (0)."""
        ring = PolyRing(Q, ("x", "y"))
        components = primdec(Ideal(ring, []))
        self.assertEqual(len(components), 1)
        self.assertTrue(components[0].associated_prime.is_zero())


class TestDecompositionCorpus(unittest.TestCase):
    """Exactness of primary decomposition on a fixed corpus."""

    CORPUS = [
        (("x", "y"), ["x^2", "x*y"]),
        (("x", "y"), ["x*y", "y^2"]),
        (("x",), ["x^2 - 1"]),
        (("x",), ["x^6 - 1"]),
        (("x",), ["x^2 + 1"]),
        (("x", "t"), ["x^2 - t"]),
        (("x", "t"), ["x^2 - t^2"]),
        (("x", "y"), ["x*y"]),
        (("x", "y"), ["x^2 - y^3"]),
        (("x", "y"), ["x^3 - x", "y^2 - y"]),
        (("x", "y", "z"), ["x*y", "x*z"]),
        (("x", "y", "z"), ["x*z - y^2", "x^3 - y*z"]),
    ]

    def test_components_are_primary_and_exact(self):
        """Test that components are primary, distinct and intersect back to the input."""
        for variables, generators in self.CORPUS:
            with self.subTest(generators=generators):
                ring = PolyRing(Q, variables)
                I = Ideal.from_strings(ring, generators)
                components = primdec(I)
                self.assertTrue(verify_decomposition(I, components))
                for c in components:
                    self.assertTrue(is_primary(c.ideal))
                self.assertEqual(len(primes_of(components)), len(components))

    def test_component_counts(self):
        """Test the number of components for a few corpus entries."""
        expected = {("x^2 - t^2",): 2, ("x^3 - x", "y^2 - y"): 6, ("x*y", "x*z"): 2, ("x^2 + 1",): 1}
        for variables, generators in self.CORPUS:
            key = tuple(generators)
            if key in expected:
                with self.subTest(generators=generators):
                    components = primdec(Ideal.from_strings(PolyRing(Q, variables), generators))
                    self.assertEqual(len(components), expected[key])


class TestPrimaryTest(unittest.TestCase):
    """Tests for is_primary and associated_prime."""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolyRing(Q, ("x", "y"))

    def test_primary(self):
        """Test a primary ideal and its radical."""
        Q1 = Ideal.from_strings(self.ring, ["x^2", "y"])
        self.assertTrue(is_primary(Q1))
        self.assertEqual(associated_prime(Q1).to_strings(), ["x", "y"])

    def test_not_primary(self):
        """Test ideals with several associated primes."""
        self.assertFalse(is_primary(Ideal.from_strings(self.ring, ["x^2", "x*y"])))
        self.assertFalse(is_primary(Ideal.from_strings(self.ring, ["x*y"])))
        with self.assertRaises(InvalidParameter):
            associated_prime(Ideal.from_strings(self.ring, ["x*y"]))

    def test_unit(self):
        """Test that the unit ideal is refused."""
        with self.assertRaises(NotProper):
            is_primary(Ideal.unit(self.ring))


if __name__ == '__main__':
    unittest.main()
