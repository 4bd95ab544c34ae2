"""
Unit tests for ideals and the elimination-based ideal operations.
"""

import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from src.groebner import buchberger
from src.idealops import (
    Ideal,
    contract,
    contraction_data,
    head_coefficient,
    intersect,
    intersect_all,
    quotient,
    radical_member,
    saturate,
)
from src.polyalg import FieldSpec, PolyRing, block
from src.utils.errors import BasisNotVerified, InvalidParameter, NotProper, RingMismatch

Q = FieldSpec.rationals()
F3 = FieldSpec.prime(3)


class TestIdeal(unittest.TestCase):
    """Tests for the Ideal container."""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolyRing(Q, ("x", "y"))

    def test_equality_of_generating_sets(self):
        """Test that different generators of the same ideal compare equal."""
        I = Ideal.from_strings(self.ring, ["x", "y"])
        J = Ideal.from_strings(self.ring, ["x + y", "x - y"])
        self.assertTrue(I.equals(J))
        self.assertEqual(I.fingerprint(), J.fingerprint())

    def test_zero_generators_dropped(self):
        """Test that zero generators do not count."""
        I = Ideal(self.ring, [self.ring.zero()])
        self.assertTrue(I.is_zero())
        self.assertEqual(I.dimension(), 2)

    def test_unit(self):
        """Test unit detection."""
        self.assertTrue(Ideal.unit(self.ring).is_unit())
        self.assertTrue(Ideal.from_strings(self.ring, ["x", "x + 1"]).is_unit())
        self.assertFalse(Ideal.from_strings(self.ring, ["x*y"]).is_unit())

    def test_sum_and_containment(self):
        """Test ideal sums and containment."""
        I = Ideal.from_strings(self.ring, ["x^2"])
        J = Ideal.from_strings(self.ring, ["y"])
        K = I + J
        self.assertTrue(K.contains_ideal(I))
        self.assertTrue(K.contains(self.ring.parse("x^2*y + y^3")))
        self.assertFalse(I.contains_ideal(K))

    def test_attach_basis_checks_ideal(self):
        """Test that only a basis of the same ideal can be attached."""
        I = Ideal.from_strings(self.ring, ["x^2 + y^2", "x*y"])
        good = buchberger(I.generators, ring=self.ring)
        I.attach_basis(good)
        bigger = buchberger([self.ring.parse("x"), self.ring.parse("y")], ring=self.ring)
        with self.assertRaises(BasisNotVerified):
            Ideal.from_strings(self.ring, ["x^2 + y^2", "x*y"]).attach_basis(bigger)

    def test_ring_mismatch(self):
        """Test that generators from another ring are rejected."""
        other = PolyRing(Q, ("x", "z"))
        with self.assertRaises(RingMismatch):
            Ideal(self.ring, [other.gen("z")])
        with self.assertRaises(RingMismatch):
            _ = Ideal(self.ring, []) + Ideal(other, [])


class TestSaturationAndQuotient(unittest.TestCase):
    """Tests for saturation and ideal quotients."""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolyRing(Q, ("x", "y"))

    def test_saturate(self):
        """Test (x²y : x^∞) = (y) with exponent 2."""
        I = Ideal.from_strings(self.ring, ["x^2*y"])
        result = saturate(I, self.ring.parse("x"))
        self.assertEqual(result.ideal.to_strings(), ["y"])
        self.assertEqual(result.exponent, 2)

    def test_saturate_by_nonzerodivisor(self):
        """Test that saturating by a non-zero-divisor changes nothing."""
        I = Ideal.from_strings(self.ring, ["x*y - 1"])
        result = saturate(I, self.ring.parse("x"))
        self.assertTrue(result.ideal.equals(I))
        self.assertEqual(result.exponent, 0)

    def test_saturate_by_zero(self):
        """Test that the zero polynomial is refused."""
        with self.assertRaises(InvalidParameter):
            saturate(Ideal.from_strings(self.ring, ["x"]), self.ring.zero())

    def test_quotient(self):
        """Test single and repeated quotients."""
        I = Ideal.from_strings(self.ring, ["x^2*y"])
        x = self.ring.parse("x")
        self.assertEqual(quotient(I, x, 1).to_strings(), ["x*y"])
        self.assertEqual(quotient(I, x, 2).to_strings(), ["y"])
        self.assertTrue(quotient(I, x, 0).equals(I))
        with self.assertRaises(InvalidParameter):
            quotient(I, x, -1)


class TestIntersection(unittest.TestCase):
    """Tests for intersections of ideals."""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolyRing(Q, ("x", "y"))

    def test_coordinate_axes(self):
        """Test (x) ∩ (y) = (xy)."""
        I = Ideal.from_strings(self.ring, ["x"])
        J = Ideal.from_strings(self.ring, ["y"])
        self.assertEqual(intersect(I, J).to_strings(), ["x*y"])

    def test_intersect_all(self):
        """Test an intersection of three ideals."""
        ideals = [Ideal.from_strings(self.ring, [text]) for text in ("x", "x - 1", "x + 1")]
        self.assertEqual(intersect_all(ideals).to_strings(), ["x^3 - x"])
        with self.assertRaises(InvalidParameter):
            intersect_all([])


class TestRadicalMembership(unittest.TestCase):
    """Tests for the radical membership test."""

    def test_nilpotent(self):
        """Test that x ∈ √(x³) with exponent 3."""
        ring = PolyRing(Q, ("x", "y"))
        I = Ideal.from_strings(ring, ["x^3"])
        result = radical_member(ring.parse("x"), I)
        self.assertTrue(result.member)
        self.assertEqual(result.exponent, 3)

    def test_not_in_radical(self):
        """Test that y ∉ √(x³)."""
        ring = PolyRing(Q, ("x", "y"))
        result = radical_member(ring.parse("y"), Ideal.from_strings(ring, ["x^3"]))
        self.assertFalse(result.member)
        self.assertIsNone(result.exponent)

    def test_characteristic_p(self):
        """Test that x - 1 ∈ √(x³ - 1) over F3."""
        ring = PolyRing(F3, ("x",))
        result = radical_member(ring.parse("x - 1"), Ideal.from_strings(ring, ["x^3 - 1"]))
        self.assertTrue(result.member)
        self.assertEqual(result.exponent, 3)


class TestContraction(unittest.TestCase):
    """Tests for contraction over a parameter field."""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolyRing(Q, ("x", "y"))

    def test_head_coefficient(self):
        """Test the leading coefficient in the heavy variables."""
        order = block([0], [1])
        g = self.ring.parse("x*y + x + y")
        self.assertEqual(head_coefficient(g, [0], order), self.ring.parse("y + 1"))

    def test_contraction_removes_parameter_torsion(self):
        """Test that (xy) contracted over k(y) is (x)."""
        data = contraction_data(Ideal.from_strings(self.ring, ["x*y"]), ["y"])
        self.assertEqual(data.ideal.to_strings(), ["x"])
        self.assertEqual(str(data.multiplier), "y")
        self.assertEqual(data.exponent, 1)

    def test_contract_without_parameters(self):
        """Test that contracting over k itself is the identity."""
        I = Ideal.from_strings(self.ring, ["x^2", "x*y"])
        self.assertIs(contract(I, []), I)

    def test_unit_ideal(self):
        """Test that the unit ideal cannot be contracted."""
        with self.assertRaises(NotProper):
            contract(Ideal.unit(self.ring), ["y"])


if __name__ == '__main__':
    unittest.main()
