"""
Unit tests for the bounded first-order formulas: free-variable ledgers, agreement
of evaluated formulas with the engine, printing and parsing.
"""

import random
import sys
import unittest
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from src.fol import (
    Assignment,
    Formula,
    basis_values,
    beta,
    build,
    delta,
    eta,
    evaluate,
    evaluate_values,
    groebner_relations,
    iota,
    parse_formula,
    phi,
    polynomial_values,
    print_formula,
    psi,
    quadruple_bound,
    quadruple_values,
    smoothness_sentence,
    smoothness_values,
    tau,
    theta,
    zeta,
)
from src.fol.encoding import tensor_values
from src.fol.formula import FALSE, Eq, Exists, Or, Var, conj
from src.groebner import buchberger, dimension, is_groebner, member
from src.hopf import alpha, base_change_quadruple, catalog_quadruple, is_smooth, lie_dimension, roots_of_unity
from src.polyalg import FieldSpec, PolyRing, monomial_rank
from src.polyalg.bounded import bound_of_all, first_monomials
from src.utils.config import ResourceLimits
from src.utils.errors import (
    FormulaTooLarge,
    InvalidParameter,
    MissingAssignment,
    PolynomialParseError,
    UnsupportedQuantifierShape,
)
from src.utils.linalg import nullity

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)


class TestLedger(unittest.TestCase):
    """Tests for free-variable counts and slot metadata."""

    def test_arities(self):
        """Test the number of free variables of each family."""
        self.assertEqual(phi(2, 3).arity, 3)
        self.assertEqual(beta(3, 1).arity, 9)
        self.assertEqual(delta(0, 2, 2).arity, 4)
        self.assertEqual(iota(2, 1).arity, 6)
        self.assertEqual(zeta(2, 2, 1).arity, 8)
        self.assertEqual(zeta(2, 0, 1).arity, 5)
        self.assertEqual(eta(2, 1).arity, 11)
        self.assertEqual(tau(0, 2, 1).arity, 5)
        self.assertEqual(theta(2, 1).arity, 5)
        self.assertTrue(psi(3).is_sentence)
        self.assertTrue(smoothness_sentence(1, 1).is_sentence)

    def test_slot_names_and_roles(self):
        """Test that free variables are l1, l2, … with their roles."""
        F = iota(2, 1)
        self.assertEqual(F.free[:3], ("l1", "l2", "l3"))
        self.assertEqual(F.slots[0].role, "B")
        self.assertEqual(F.slots[0].position, (1, 1))
        self.assertEqual(F.slots[-1].role, "f")
        self.assertEqual(F.slots[-1].position, (2,))

    def test_tensor_slot_positions(self):
        """Test that the first tensor index varies slowest."""
        F = zeta(2, 2, 1)
        positions = [s.position for s in F.slots if s.role == "Lambda"]
        self.assertEqual(positions, [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)])

    def test_bad_parameters(self):
        """Test that out-of-range parameters are rejected."""
        with self.assertRaises(InvalidParameter):
            phi(4, 3)
        with self.assertRaises(InvalidParameter):
            beta(0, 1)
        with self.assertRaises(InvalidParameter):
            build("omega", d=1)
        with self.assertRaises(InvalidParameter):
            build("psi", d=2)

    def test_well_formed(self):
        """Test that built formulas bind every variable they use."""
        for F in (beta(2, 1), iota(2, 1), zeta(2, 1, 1), theta(2, 1), smoothness_sentence(1, 1)):
            with self.subTest(label=F.label):
                F.check_well_formed()


class TestPsi(unittest.TestCase):
    """Tests for the characteristic sentence."""

    def test_printing(self):
        """Test the rendering of 1 + 1 = 0."""
        self.assertEqual(print_formula(psi(2)), "(1+1=0)")
        self.assertEqual(print_formula(psi(1)), "(1=0)")

    def test_truth(self):
        """Test that psi(p) holds exactly in characteristic dividing p."""
        self.assertTrue(evaluate_values(psi(2), [], F2))
        self.assertFalse(evaluate_values(psi(2), [], F3))
        self.assertFalse(evaluate_values(psi(2), [], Q))
        self.assertTrue(evaluate_values(psi(6), [], F3))


class TestAgreement(unittest.TestCase):
    """Tests that evaluated formulas agree with the algebra engine."""

    def test_phi(self):
        """Test the leading-monomial formula on x² + 1."""
        ring = PolyRing(Q, ("x",))
        values = polynomial_values(ring.parse("x^2 + 1"), 3)
        self.assertTrue(evaluate_values(phi(3, 3), values, Q))
        self.assertFalse(evaluate_values(phi(2, 3), values, Q))
        self.assertFalse(evaluate_values(phi(1, 3), [0, 0, 0], Q))

    def test_beta_examples(self):
        """Test beta on a basis and a non-basis."""
        ring = PolyRing(Q, ("x",))
        good = [ring.parse("x^2"), ring.parse("x")]
        bad = [ring.parse("x^2"), ring.parse("x^2 + x")]
        self.assertTrue(evaluate_values(beta(3, 1), basis_values(good, 3, ring), Q))
        self.assertFalse(evaluate_values(beta(3, 1), basis_values(bad, 3, ring), Q))

    def test_beta_two_variables(self):
        """Test beta on (x, y) and on a list that is not a basis in two variables."""
        ring = PolyRing(Q, ("x", "y"))
        F = beta(3, 2)
        self.assertTrue(evaluate_values(F, basis_values([ring.parse("y"), ring.parse("x")], 3, ring), Q))
        bad = [ring.parse("x + y"), ring.parse("x")]
        self.assertFalse(is_groebner(bad))
        self.assertFalse(evaluate_values(F, basis_values(bad, 3, ring), Q))

    def test_beta_random_univariate(self):
        """Test beta against Buchberger's criterion on random lists over F3."""
        ring = PolyRing(F3, ("x",))
        rng = random.Random(11)
        F = beta(3, 1)
        for _ in range(30):
            polys = [
                ring.from_terms({(k,): rng.randint(0, 2) for k in range(3)})
                for _ in range(rng.randint(1, 3))
            ]
            expected = is_groebner(polys)
            self.assertEqual(evaluate_values(F, basis_values(polys, 3, ring), F3), expected, msg=str(polys))

    def test_iota(self):
        """Test membership in (x² - 1) over Q."""
        ring = PolyRing(Q, ("x",))
        basis = buchberger([ring.parse("x^2 - 1")], ring=ring)
        F = iota(3, 1)
        for text in ("x^2 - 1", "x - 1", "0", "2*x^2 - 2", "x^2"):
            f = ring.parse(text)
            values = basis_values(basis.nonzero(), 3, ring) + polynomial_values(f, 3)
            with self.subTest(f=text):
                self.assertEqual(evaluate_values(F, values, Q), member(f, basis))

    def test_delta(self):
        """Test the dimension formula on a finite and an empty scheme description."""
        ring = PolyRing(Q, ("x",))
        finite = basis_values([ring.parse("x^2 - 1")], 3, ring)
        self.assertTrue(evaluate_values(delta(0, 3, 1), finite, Q))
        self.assertFalse(evaluate_values(delta(1, 3, 1), finite, Q))
        self.assertTrue(evaluate_values(delta(1, 3, 1), [0] * 9, Q))

    def test_zeta_counit(self):
        """Test the point version of zeta: x = 1 lies on x² - 1, x = 2 does not."""
        ring = PolyRing(Q, ("x",))
        values = basis_values([ring.parse("x^2 - 1")], 3, ring)
        self.assertTrue(evaluate_values(zeta(3, 0, 1), values + [1], Q))
        self.assertFalse(evaluate_values(zeta(3, 0, 1), values + [2], Q))

    def test_zeta_comultiplication(self):
        """Test that x ↦ x'x'' respects x² - 1 and x ↦ x' + x'' does not."""
        ring = PolyRing(Q, ("x",))
        double = PolyRing(Q, ("x'", "x''"))
        values = basis_values([ring.parse("x^2 - 1")], 3, ring)
        good = tensor_values(double.parse("x'*x''"), 1, 2, 3)
        bad = tensor_values(double.parse("x' + x''"), 1, 2, 3)
        self.assertTrue(evaluate_values(zeta(3, 2, 1), values + good, Q))
        self.assertFalse(evaluate_values(zeta(3, 2, 1), values + bad, Q))

    def test_eta_mu2(self):
        """Test the Hopf formula on mu2 over F3 and on a broken antipode."""
        H = base_change_quadruple(roots_of_unity(2), 3)
        basis = groebner_relations(H)
        d = quadruple_bound(H, basis)
        self.assertEqual(d, 3)
        values = quadruple_values(H, d, basis)
        self.assertTrue(evaluate_values(eta(d, 1), values, F3))
        broken = list(values)
        sigma_start = d * d + d * d
        broken[sigma_start:sigma_start + d] = [0, 0, 1]
        self.assertFalse(evaluate_values(eta(d, 1), broken, F3))

    def test_tau_and_theta_mu2(self):
        """Test Lie dimension and smoothness formulas for mu2 in characteristic 2 and 3."""
        for p in (2, 3):
            H = base_change_quadruple(roots_of_unity(2), p)
            basis = groebner_relations(H)
            d = quadruple_bound(H, basis)
            values = smoothness_values(H, d, basis)
            report = is_smooth(H)
            with self.subTest(p=p):
                self.assertTrue(evaluate_values(tau(report.lie_dim, d, 1), values, H.field))
                self.assertFalse(evaluate_values(tau(1 - report.lie_dim, d, 1), values, H.field))
                self.assertEqual(evaluate_values(theta(d, 1), values, H.field), report.smooth)


def random_sparse(ring, rng, d):
    """A nonzero polynomial with one to three terms among the first d monomials."""
    field = ring.field
    bound = field.p - 1 if field.is_prime_field else 3
    terms = {}
    for m in rng.sample(first_monomials(d, ring.nvars), rng.randint(1, 3)):
        c = rng.randint(1, bound)
        terms[m] = c if field.is_prime_field or rng.random() < 0.5 else -c
    return ring.from_terms(terms)


class TestRandomAgreement(unittest.TestCase):
    """Seeded agreement of every bounded builder with the engine, for n ≤ 2 and d = 6."""

    D = 6
    PER_CASE = 30
    CASES = ((1, FieldSpec.prime(5), 1), (1, Q, 2), (2, FieldSpec.prime(5), 3), (2, Q, 4))

    @classmethod
    def setUpClass(cls):
        D = cls.D
        cls.phis = {e: phi(e, D) for e in range(1, D + 1)}
        cls.formulas = {
            n: {
                "beta": beta(D, n),
                "iota": iota(D, n),
                "theta": theta(D, n),
                "delta": {e: delta(e, D, n) for e in range(n + 1)},
                "tau": {e: tau(e, D, n) for e in range(n + 1)},
            }
            for n in (1, 2)
        }

    def instances(self, n, field, seed):
        """Random ideals whose reduced basis is D-bounded, PER_CASE of them."""
        ring = PolyRing(field, ("x", "y")[:n])
        rng = random.Random(seed)
        found = []
        for _ in range(20 * self.PER_CASE):
            gens = [random_sparse(ring, rng, self.D) for _ in range(rng.randint(1, 3))]
            basis = buchberger(gens, ring=ring)
            polys = basis.nonzero()
            if dimension(basis) < 0:
                continue
            if len(polys) <= self.D and bound_of_all(polys) <= self.D:
                found.append((ring, rng, gens, basis))
            if len(found) == self.PER_CASE:
                break
        self.assertEqual(len(found), self.PER_CASE, msg=f"n={n} over {field}")
        return found

    def test_builders_agree_with_engine(self):
        """Test beta, iota, delta, phi, tau and theta on at least 100 random instances."""
        D = self.D
        checked = 0
        for n, field, seed in self.CASES:
            forms = self.formulas[n]
            for ring, rng, gens, basis in self.instances(n, field, seed):
                polys = basis.nonzero()
                values = basis_values(polys, D, ring)
                label = f"n={n} {field} {[str(g) for g in gens]}"

                self.assertTrue(evaluate_values(forms["beta"], values, field), msg=label)
                self.assertEqual(
                    evaluate_values(forms["beta"], basis_values(gens, D, ring), field), is_groebner(gens), msg=label
                )

                f = random_sparse(ring, rng, D)
                for h in (f, polys[0] + polys[-1]):
                    self.assertEqual(
                        evaluate_values(forms["iota"], values + polynomial_values(h, D), field),
                        member(h, basis),
                        msg=f"{label} f={h}",
                    )

                lead = monomial_rank(f.leading_monomial())
                for e in range(1, D + 1):
                    self.assertEqual(evaluate_values(self.phis[e], polynomial_values(f, D), field), lead == e)

                dim = dimension(basis)
                for e in range(n + 1):
                    self.assertEqual(evaluate_values(forms["delta"][e], values, field), dim == e, msg=label)

                eps = [field.convert(rng.randint(0, 4)) for _ in range(n)]
                rows = [[g.partial(i).evaluate(eps) for i in range(n)] for g in polys]
                null = nullity(rows, n, field)
                for e in range(n + 1):
                    self.assertEqual(evaluate_values(forms["tau"][e], values + eps, field), null == e, msg=label)
                self.assertEqual(evaluate_values(forms["theta"], values + eps, field), dim == null, msg=label)
                checked += 1
        self.assertGreaterEqual(checked, 100)

    def test_catalog_lie_dimension_and_smoothness(self):
        """Test tau and theta against lie_dimension and is_smooth on small group schemes."""
        names = ("ga", "gm", "mu2", "mu3", "mu4", "mu5")
        groups = [catalog_quadruple(name, Q) for name in names]
        groups += [base_change_quadruple(catalog_quadruple(name), 5) for name in names]
        groups.append(alpha(5))
        for H in groups:
            basis = groebner_relations(H)
            d = quadruple_bound(H, basis)
            values = smoothness_values(H, d, basis)
            with self.subTest(group=H.name, field=str(H.field)):
                self.assertLessEqual(d, self.D)
                self.assertTrue(evaluate_values(tau(lie_dimension(H), d, H.nvars), values, H.field))
                self.assertEqual(evaluate_values(theta(d, H.nvars), values, H.field), is_smooth(H).smooth)


class TestEvaluatorErrors(unittest.TestCase):
    """Tests for evaluator failure modes."""

    def test_false_existential_body(self):
        """Test that an existential block whose body folded to false is false."""
        a, l1 = Var("a"), Var("l1")
        folded = Formula(Exists(("a",), conj(Eq(a, l1), FALSE)), ("l1",))
        self.assertFalse(evaluate_values(folded, [1], Q))
        single = Formula(Exists(("a",), Or((Eq(a, l1),))), ("l1",))
        self.assertTrue(evaluate_values(single, [1], Q))
        both = Formula(Exists(("a",), Or((Eq(a, l1), Eq(a, Var("l2"))))), ("l1", "l2"))
        with self.assertRaises(UnsupportedQuantifierShape):
            evaluate_values(both, [1, 2], Q)

    def test_universal_rejected(self):
        """Test that the universal sentence cannot be evaluated."""
        with self.assertRaises(UnsupportedQuantifierShape):
            evaluate_values(smoothness_sentence(1, 1), [], Q)

    def test_nonlinear_existential(self):
        """Test that a product of bound variables is rejected."""
        F = parse_formula("(exists a)(exists b)((a*b)=1)")
        with self.assertRaises(UnsupportedQuantifierShape):
            evaluate_values(F, [], Q)

    def test_missing_value(self):
        """Test that unassigned free variables are reported."""
        F = phi(1, 2)
        with self.assertRaises(MissingAssignment):
            evaluate(F, Assignment({"l1": 1}, Q))
        with self.assertRaises(InvalidParameter):
            evaluate_values(F, [1], Q)

    def test_integers_rejected(self):
        """Test that assignments need a field."""
        with self.assertRaises(InvalidParameter):
            Assignment({}, FieldSpec.integers())


class TestPrinting(unittest.TestCase):
    """Tests for printing and parsing formulas."""

    def test_reparse_identity(self):
        """Test that printing a parsed printout gives the same text."""
        for F in (psi(3), phi(2, 3), iota(2, 1), beta(2, 1), smoothness_sentence(1, 1)):
            with self.subTest(label=F.label):
                text = print_formula(F)
                self.assertEqual(print_formula(parse_formula(text)), text)

    def test_parsed_formula_evaluates_the_same(self):
        """Test that a reparsed formula gives the same verdicts."""
        ring = PolyRing(Q, ("x",))
        F = iota(2, 1)
        G = parse_formula(print_formula(F), free=F.free)
        for f_coeffs in product((0, 1), repeat=2):
            values = basis_values([ring.parse("x")], 2, ring) + list(f_coeffs)
            self.assertEqual(evaluate_values(F, values, Q), evaluate_values(G, values, Q))

    def test_empty_junctions(self):
        """Test the rendering of true and false."""
        self.assertEqual(print_formula(parse_formula("(0=0)")), "(0=0)")
        self.assertTrue(evaluate_values(parse_formula("(0=0)"), [], Q))

    def test_parse_error(self):
        """Test that malformed text reports an error."""
        with self.assertRaises(PolynomialParseError):
            parse_formula("(l1=")
        with self.assertRaises(PolynomialParseError):
            parse_formula("(l1 = 0) #")

    def test_size_ceiling(self):
        """Test that materialising a large formula respects the ceiling."""
        with self.assertRaises(FormulaTooLarge):
            print_formula(beta(3, 2), limits=ResourceLimits(formula_size_ceiling=100))


if __name__ == '__main__':
    unittest.main()
