"""
Unit tests for the centraliser pipeline: per-point ideals, closures, identity
components and the smoothness of the resulting subgroup schemes.
"""

import sys
import unittest
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from src.centraliser import (
    PointList,
    action_from_strings,
    base_change_action,
    centraliser_ideal,
    centraliser_quadruple,
    closure_ideal,
    contains_group,
    example_action,
    frobenius_twist,
    identity_component,
    load_action,
    natural_action,
    standard_points,
    trivial_action,
)
from src.groebner import member
from src.hopf import catalog_quadruple, is_smooth
from src.idealops import Ideal
from src.polyalg import FieldSpec, PolyRing
from src.utils.errors import (
    ActionOffChart,
    AmbiguousComponent,
    CentraliserNotSubgroup,
    IdentityNotOnScheme,
    InvalidParameter,
    LocalizerVanishesAtIdentity,
    PointOffChart,
)

ACTIONS_DIR = Path(__file__).parent.parent / 'data' / 'actions'

Q = FieldSpec.rationals()


def rational_points(result, p):
    """F_p-points of the centraliser scheme, by enumeration."""
    H = result.quadruple
    return {
        point
        for point in product(range(p), repeat=H.nvars)
        if all(g.evaluate(list(point)) == 0 for g in result.basis.nonzero())
    }


def fixing_matrices(p, vectors):
    """(a, b, c, d, det⁻¹) for every g ∈ GL₂(F_p) with g·v = v for all given v."""
    out = set()
    for a, b, c, d in product(range(p), repeat=4):
        det = (a * d - b * c) % p
        if det == 0:
            continue
        if all(((a * x + b * y) % p, (c * x + d * y) % p) == (x, y) for x, y in vectors):
            out.add((a, b, c, d, pow(det, p - 2, p)))
    return out


class TestNaturalAction(unittest.TestCase):
    """Tests for GL2 acting on the plane."""

    def test_stabiliser_of_e1_over_q(self):
        """Test that the stabiliser of e1 is smooth of dimension 2."""
        result = centraliser_quadruple(natural_action(Q), standard_points())
        self.assertEqual(result.smoothness.group_dim, 2)
        self.assertEqual(result.smoothness.lie_dim, 2)
        self.assertTrue(result.smoothness.smooth)
        self.assertEqual(set(str(g) for g in result.basis.nonzero()), {"a - 1", "c", "d*u - 1"})

    def test_fixed_point_polynomials(self):
        """Test the per-point equations a - 1 and c."""
        stage = centraliser_quadruple(natural_action(Q), standard_points()).stages[0]
        generators = {str(g) for g in stage.centraliser.generators}
        self.assertIn("a - 1", generators)
        self.assertIn("c", generators)
        self.assertEqual(stage.label, "e1")

    def test_smooth_in_every_characteristic(self):
        """Test that the natural stabiliser stays smooth mod small primes."""
        for p in (2, 3, 5):
            with self.subTest(p=p):
                result = centraliser_quadruple(natural_action(FieldSpec.prime(p)), standard_points())
                self.assertEqual((result.smoothness.group_dim, result.smoothness.lie_dim), (2, 2))

    def test_point_count_matches_enumeration(self):
        """Test F_p-points of the centraliser against brute force in GL2(F_p)."""
        cases = (
            (2, [(1, 0)], standard_points()),
            (3, [(1, 0)], standard_points()),
            (3, [(1, 0), (0, 1)], PointList([("1", "0"), ("0", "1")])),
        )
        for p, vectors, points in cases:
            with self.subTest(p=p, points=len(vectors)):
                result = centraliser_quadruple(natural_action(FieldSpec.prime(p)), points)
                self.assertEqual(rational_points(result, p), fixing_matrices(p, vectors))

    def test_more_points_give_smaller_centraliser(self):
        """Test that adding a point shrinks the centraliser ideal-theoretically."""
        A = natural_action(Q)
        one = centraliser_quadruple(A, standard_points())
        two = centraliser_quadruple(A, standard_points().with_point(("0", "1"), "e2"))
        self.assertTrue(all(member(g, two.basis) for g in one.basis.nonzero()))
        self.assertEqual(two.smoothness.group_dim, 0)
        self.assertEqual(set(str(g) for g in two.basis.nonzero()), {"a - 1", "b", "c", "d - 1", "u - 1"})

    def test_report(self):
        """Test the JSON-ready report."""
        payload = centraliser_quadruple(natural_action(Q), standard_points()).to_dict()
        self.assertEqual(payload["field"], "Q")
        self.assertTrue(payload["smooth"])
        self.assertTrue(payload["identity_components"])
        self.assertEqual(payload["points"][0]["point"], ["1", "0"])
        self.assertEqual(payload["bound"], max(payload["bound"], 1))

    def test_d_bound(self):
        """Test the action bound: the largest group monomial is a."""
        self.assertEqual(natural_action(Q).d_bound(), 6)


class TestFrobeniusTwist(unittest.TestCase):
    """Tests for the Frobenius-twisted action."""

    def test_nonsmooth_stabilisers(self):
        """Test group dimension 2 and Lie dimension 4 for p = 2, 3, 5."""
        for p in (2, 3, 5):
            with self.subTest(p=p):
                result = centraliser_quadruple(frobenius_twist(p), standard_points())
                self.assertEqual(result.smoothness.group_dim, 2)
                self.assertEqual(result.smoothness.lie_dim, 4)
                self.assertFalse(result.smoothness.smooth)
                self.assertEqual(result.smoothness.characteristic, p)

    def test_example_lookup(self):
        """Test the example registry."""
        self.assertEqual(example_action("frobenius-twist", FieldSpec.prime(3)).name, "gl2-frobenius3")
        with self.assertRaises(InvalidParameter):
            example_action("frobenius-twist", Q)
        with self.assertRaises(InvalidParameter):
            example_action("adjoint", Q)


class TestTrivialAction(unittest.TestCase):
    """Tests for the trivial action."""

    def test_centraliser_is_whole_group(self):
        """Test that every point is fixed by all of G."""
        G = catalog_quadruple("gl2", Q)
        result = centraliser_quadruple(trivial_action("gl2", Q), standard_points())
        self.assertTrue(contains_group(result, G))
        self.assertEqual([str(g) for g in result.basis.nonzero()], ["a*d*u - b*c*u - 1"])
        self.assertEqual(result.smoothness.group_dim, 4)
        self.assertEqual(result.smoothness.to_dict(), is_smooth(G).to_dict())

    def test_chart_with_relations(self):
        """Test Gm acting trivially on two points of the chart t1² = 1."""
        A, N = load_action(ACTIONS_DIR / 'gm_trivial.json')
        A = base_change_action(A, Q)
        self.assertTrue(A.respects_chart())
        result = centraliser_quadruple(A, N)
        self.assertEqual(result.smoothness.group_dim, 1)
        self.assertTrue(result.smoothness.smooth)
        self.assertEqual([stage.label for stage in result.stages], ["v1", "v2"])


class TestPipelineStages(unittest.TestCase):
    """Tests for the individual pipeline stages."""

    def test_closure_of_punctured_line(self):
        """Test that the closure of xu = 1 in the x-line is everything."""
        ring = PolyRing(Q, ("x", "u"))
        closure = closure_ideal(Ideal.from_strings(ring, ["x*u - 1"]), PolyRing(Q, ("x",)))
        self.assertTrue(closure.is_zero())

    def test_closure_unchanged_without_localizer(self):
        """Test that an ideal in the group ring passes through."""
        ring = PolyRing(Q, ("x",))
        I = Ideal.from_strings(ring, ["x - 1"])
        self.assertIs(closure_ideal(I, ring), I)

    def test_localized_action(self):
        """Test that a localizer adds a fresh variable that elimination removes."""
        A, N = load_action(ACTIONS_DIR / 'gl2_punctured.json')
        A = base_change_action(A, Q)
        v = N.validated(A)[0]
        I = centraliser_ideal(A, v)
        self.assertEqual(I.ring.variables[-1], "u1")
        closure = closure_ideal(I, A.group.ring)
        natural = centraliser_ideal(natural_action(Q), v)
        self.assertTrue(closure.equals(natural))

    def test_localizer_vanishing_at_identity(self):
        """Test that the origin is outside D(a t1 + b t2)."""
        A, _ = load_action(ACTIONS_DIR / 'gl2_punctured.json')
        A = base_change_action(A, Q)
        with self.assertRaises(LocalizerVanishesAtIdentity):
            centraliser_quadruple(A, PointList([("0", "0")]))

    def test_point_off_chart(self):
        """Test points violating the chart relations or its dimension."""
        A, _ = load_action(ACTIONS_DIR / 'gm_trivial.json')
        A = base_change_action(A, Q)
        with self.assertRaises(PointOffChart):
            centraliser_quadruple(A, PointList([("2",)]))
        with self.assertRaises(PointOffChart):
            centraliser_quadruple(A, PointList([("1", "0")]))

    def test_action_must_preserve_chart(self):
        """Test that t1 ↦ x t1 breaks t1² = 1 under Gm but not under mu2."""
        A, N = load_action(ACTIONS_DIR / 'gm_off_chart.json')
        A = base_change_action(A, Q)
        self.assertFalse(A.respects_chart())
        with self.assertRaises(ActionOffChart):
            centraliser_quadruple(A, N)

        mu2 = action_from_strings(catalog_quadruple("mu2", Q), ("t1",), ["t1^2 - 1"], {"t1": "x*t1"})
        self.assertTrue(mu2.respects_chart())
        result = centraliser_quadruple(mu2, PointList([("1",)]))
        self.assertEqual([str(g) for g in result.basis.nonzero()], ["x - 1"])
        self.assertTrue(result.smoothness.smooth)

    def test_identity_component(self):
        """Test picking the component through the identity."""
        ring = PolyRing(Q, ("x",))
        J = Ideal.from_strings(ring, ["x^2 - x"])
        self.assertEqual(identity_component(J, [1]).to_strings(), ["x - 1"])
        self.assertEqual(identity_component(J, [0]).to_strings(), ["x"])
        with self.assertRaises(IdentityNotOnScheme):
            identity_component(J, [2])
        zero = Ideal(ring, [])
        self.assertIs(identity_component(zero, [1]), zero)

    def test_ambiguous_component(self):
        """Test that two isolated components through the identity are an error."""
        ring = PolyRing(Q, ("x", "y"))
        with self.assertRaises(AmbiguousComponent):
            identity_component(Ideal.from_strings(ring, ["x*y"]), [0, 0])

    def test_full_locus_may_not_be_a_subgroup(self):
        """Test that skipping the component step can break the subgroup property."""
        G = catalog_quadruple("ga", Q)
        A = action_from_strings(G, ("t1",), [], {"t1": "t1 + x^2 - x"})
        points = PointList([("0",)])
        result = centraliser_quadruple(A, points)
        self.assertEqual([str(g) for g in result.basis.nonzero()], ["x"])
        with self.assertRaises(CentraliserNotSubgroup):
            centraliser_quadruple(A, points, identity_components=False)

    def test_bad_inputs(self):
        """Test empty point lists and actions over Z."""
        with self.assertRaises(InvalidParameter):
            centraliser_quadruple(natural_action(Q), PointList([]))
        with self.assertRaises(InvalidParameter):
            centraliser_quadruple(natural_action(), standard_points())


if __name__ == '__main__':
    unittest.main()
