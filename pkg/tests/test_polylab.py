import cmath
import itertools
import math
import unittest

import numpy as np

from bhlab.bhindex import IndexSet, gen_full, gen_triangle, tuple_to_exponent
from bhlab.bhpoly import (SparsePolynomial, evaluate, random_polynomial, coeff_norm, polynomial_from_coefficients,
                          MultilinearForm, polarize_eval, symmetric_tensor, full_symmetric_tensor, evaluate_form,
                          OptimizerSettings, sup_norm_poly, sup_norm_form, parse_poly, serialize_poly)
from bhlab.bhutils.utils.exceptions import (ArityMismatch, DomainViolation, InvalidIndexTuple, MissingMonomial,
                                            MissingVariable, PolyParseError)
from bhlab.bhutils.utils.parameterargs import Distribution
from bhlab.bhutils.utils.utils import make_rng


def poly(m, coefficients):
    return polynomial_from_coefficients(m, coefficients)


def basis(var):
    return {var: 1.0}


def random_vector(rng, variables):
    return {var: complex(rng.standard_normal(), rng.standard_normal()) for var in variables}


def random_sparse(rng, m, variables=5, terms=4):
    coefficients = {}
    for _ in range(terms):
        entries = tuple(int(v) for v in rng.integers(1, variables + 1, size=m))
        coefficients[entries] = complex(rng.standard_normal(), rng.standard_normal())
    return poly(m, coefficients)


def close(a, b, rel=1e-10):
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


class TestSparsePolynomial(unittest.TestCase):

    def test_evaluate(self):
        self.assertAlmostEqual(evaluate(poly(3, {(1, 1, 2): 2}), {1: 1, 2: 1j}), 2j)
        self.assertEqual(evaluate(poly(2, {(1, 2): 1}), {1: 0, 2: 5}), 0)
        self.assertAlmostEqual(abs(evaluate(poly(2, {(1, 1): 1, (2, 2): 1}), {1: 1, 2: 1j})), 0.0)

    def test_missing_variable(self):
        with self.assertRaises(MissingVariable) as context:
            evaluate(poly(2, {(1, 2): 1}), {1: 1})
        self.assertEqual(context.exception.variable, 2)

    def test_zero_coefficients_dropped(self):
        P = poly(2, {(1, 2): 0, (1, 1): 3})
        self.assertEqual(len(P), 1)
        self.assertEqual(P.variable_support, [1])

    def test_degree_checked(self):
        with self.assertRaises(InvalidIndexTuple):
            SparsePolynomial(3, {tuple_to_exponent((1, 2)): 1})

    def test_random_polynomial(self):
        index_set = gen_triangle(2)
        first = random_polynomial(index_set, Distribution.STEINHAUS, seed=5)
        second = random_polynomial(index_set, Distribution.STEINHAUS, seed=5)
        self.assertEqual(first, second)
        self.assertTrue(np.array_equal(first.coefficients, second.coefficients))
        self.assertEqual(set(first.terms), set(index_set.exponent_vectors()))

    def test_steinhaus_unimodular(self):
        P = random_polynomial(gen_full(2, 4), "steinhaus", seed=3)
        self.assertEqual(len(P), 10)
        for value in P.coefficients:
            self.assertAlmostEqual(abs(value), 1.0, delta=1e-12)

    def test_gaussian_support(self):
        P = random_polynomial(IndexSet(2, [(1, 2)]), "gaussian", seed=7)
        self.assertEqual(list(P.terms), [tuple_to_exponent((1, 2))])

    def test_coeff_norm(self):
        self.assertAlmostEqual(coeff_norm(poly(2, {(1, 1): 1, (1, 2): 1}), 4.0 / 3.0), 2 ** 0.75, places=12)
        self.assertAlmostEqual(coeff_norm(poly(2, {(1, 2): 3 - 4j}), 1.7), 5.0, places=12)
        self.assertAlmostEqual(coeff_norm(poly(2, {(1, 1): 3, (2, 2): 4}), 2), 5.0, places=12)
        with self.assertRaises(DomainViolation):
            coeff_norm(poly(2, {(1, 1): 1}), 0)


class TestPolarization(unittest.TestCase):

    def test_examples(self):
        self.assertAlmostEqual(polarize_eval(poly(2, {(1, 2): 1}), [basis(1), basis(2)]), 0.5)
        self.assertAlmostEqual(polarize_eval(poly(2, {(1, 1): 1}), [basis(1), basis(1)]), 1.0)
        self.assertAlmostEqual(polarize_eval(poly(3, {(1, 1, 2): 1}), [basis(1), basis(1), basis(2)]), 1.0 / 3.0)

    def test_arity(self):
        with self.assertRaises(ArityMismatch):
            polarize_eval(poly(2, {(1, 2): 1}), [basis(1)])

    def test_symmetric_tensor_examples(self):
        T = symmetric_tensor(poly(2, {(1, 2): 1}), IndexSet(2, [(1, 2)]))
        self.assertAlmostEqual(T.entry((1, 2)), 0.5)
        T = symmetric_tensor(poly(3, {(1, 1, 1): 6}), IndexSet(3, [(1, 1, 1)]))
        self.assertAlmostEqual(T.entry((1, 1, 1)), 6.0)
        T = symmetric_tensor(poly(3, {(1, 1, 2): 1}), IndexSet(3, [(1, 1, 2)]))
        self.assertAlmostEqual(T.entry((1, 1, 2)), 1.0 / 3.0)

    def test_raw_tuples_hold_entries(self):
        T = symmetric_tensor(poly(2, {(1, 2): 4}), IndexSet(2, [(2, 1)]))
        self.assertEqual(T.entries, {(2, 1): 2.0})

    def test_missing_monomial(self):
        with self.assertRaises(MissingMonomial):
            symmetric_tensor(poly(2, {(1, 2): 1, (1, 1): 1}), IndexSet(2, [(1, 2)]))

    def test_full_symmetric_tensor(self):
        T = full_symmetric_tensor(poly(3, {(1, 1, 2): 3}))
        self.assertEqual(set(T.entries), {(1, 1, 2), (1, 2, 1), (2, 1, 1)})
        self.assertAlmostEqual(T.entry((2, 1, 1)), 1.0)
        x = {1: 0.3 - 0.2j, 2: 1.1 + 0.4j}
        self.assertAlmostEqual(evaluate_form(T, [x, x, x]), evaluate(poly(3, {(1, 1, 2): 3}), x))

    def test_properties_on_random_polynomials(self):
        rng = make_rng(99)
        for trial in range(1000):
            m = 2 + trial % 5
            P = random_sparse(rng, m)
            variables = P.variable_support + [max(P.variable_support) + 1]
            args = [random_vector(rng, variables) for _ in range(m)]
            value = polarize_eval(P, args)
            for _ in range(3):
                permutation = rng.permutation(m)
                self.assertTrue(close(polarize_eval(P, [args[k] for k in permutation]), value))
            x = args[0]
            self.assertTrue(close(polarize_eval(P, [x] * m), evaluate(P, x)))
            y = random_vector(rng, variables)
            a, b = complex(rng.standard_normal(), 1.0), complex(-0.5, rng.standard_normal())
            mixed = {var: a * args[0][var] + b * y[var] for var in variables}
            expected = a * value + b * polarize_eval(P, [y] + args[1:])
            self.assertTrue(close(polarize_eval(P, [mixed] + args[1:]), expected))

    def test_coefficient_identity_at_raw_tuples(self):
        rng = make_rng(21)
        for trial in range(1000):
            m = 1 + trial % 6
            P = random_sparse(rng, m)
            representatives = {}
            for alpha in P.terms:
                entries = [var for var, exp in alpha.items for _ in range(exp)]
                representatives[alpha] = tuple(int(entries[k]) for k in rng.permutation(m))
            T = symmetric_tensor(P, IndexSet(m, representatives.values()))
            self.assertEqual(len(T), len(P))
            for alpha, coefficient in P.terms.items():
                raw = representatives[alpha]
                ratio = math.factorial(m) / math.prod(math.factorial(exp) for _, exp in alpha.items)
                self.assertTrue(close(T.entry(raw) * ratio, coefficient, rel=1e-10))
                if trial % 5 == 0:
                    self.assertTrue(close(T.entry(raw), polarize_eval(P, [basis(var) for var in raw]), rel=1e-10))

    def test_coefficient_identity(self):
        rng = make_rng(4)
        for trial in range(60):
            m = 2 + trial % 4
            P = random_sparse(rng, m)
            T = full_symmetric_tensor(P)
            for alpha, coefficient in P.terms.items():
                entries = tuple(var for var, exp in alpha.items for _ in range(exp))
                entry = T.entry(entries)
                ratio = math.factorial(m) / math.prod(math.factorial(exp) for _, exp in alpha.items)
                self.assertTrue(close(entry * ratio, coefficient, rel=1e-12))
                self.assertTrue(close(entry, polarize_eval(P, [basis(var) for var in entries]), rel=1e-10))


class TestSupNorm(unittest.TestCase):

    def setUp(self):
        self.settings = OptimizerSettings(restarts=16, seed=0)

    def assertValidWitness(self, P, estimate):
        point = {var: cmath.exp(1j * phase) for var, phase in estimate.witness.items()}
        for phase in estimate.witness.values():
            self.assertTrue(0.0 <= phase < 2 * math.pi)
        self.assertAlmostEqual(estimate.value, abs(evaluate(P, point)), delta=1e-12)

    def test_known_polynomial_norms(self):
        cases = [(poly(2, {(1, 1): 3}), 3.0, 1e-9), (poly(2, {(1, 1): 1, (2, 2): 1}), 2.0, 1e-6),
                 (poly(2, {(1, 1): 1, (2, 2): -1}), 2.0, 1e-6)]
        for P, expected, delta in cases:
            estimate = sup_norm_poly(P, self.settings)
            self.assertAlmostEqual(estimate.value, expected, delta=delta)
            self.assertValidWitness(P, estimate)

    def test_without_grid(self):
        P = poly(2, {(1, 1): 1, (2, 2): -1})
        settings = OptimizerSettings(restarts=16, grid_resolution=0, seed=3)
        self.assertAlmostEqual(sup_norm_poly(P, settings).value, 2.0, delta=1e-6)

    def test_scaling_equivariance(self):
        P = random_polynomial(gen_full(2, 3), "gaussian", seed=1)
        settings = OptimizerSettings(restarts=4, seed=8)
        base = sup_norm_poly(P, settings).value
        self.assertEqual(sup_norm_poly(P.scaled(2.0), settings).value, 2.0 * base)
        factor = 0.6 - 1.7j
        self.assertAlmostEqual(sup_norm_poly(P.scaled(factor), settings).value, abs(factor) * base,
                               delta=1e-6 * abs(factor) * base)

    def test_more_restarts_never_hurt(self):
        P = random_polynomial(gen_full(3, 4), "steinhaus", seed=2)
        values = [sup_norm_poly(P, OptimizerSettings(restarts=r, grid_resolution=0, seed=5)).value
                  for r in (1, 4, 8)]
        self.assertLessEqual(values[0], values[1])
        self.assertLessEqual(values[1], values[2])

    def test_max_modulus_step(self):
        for P in (poly(2, {(1, 1): 3}), poly(2, {(1, 1): 1, (2, 2): 1})):
            self.assertLessEqual(coeff_norm(P, 2), sup_norm_poly(P, self.settings).value + 1e-12)
        for seed in range(10):
            P = random_polynomial(gen_full(2, 4), "steinhaus", seed=seed)
            self.assertLessEqual(coeff_norm(P, 2), 1.05 * sup_norm_poly(P, self.settings).value)

    def test_known_form_norms(self):
        cases = [(MultilinearForm(2, {(1, 1): 1, (2, 2): 1}), 2.0, 1e-9),
                 (MultilinearForm(2, {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): -1}), 2 * math.sqrt(2), 1e-6),
                 (MultilinearForm(3, {(1, 2, 3): 5}), 5.0, 1e-9)]
        for T, expected, delta in cases:
            estimate = sup_norm_form(T, self.settings)
            self.assertAlmostEqual(estimate.value, expected, delta=delta)
            vectors = [{var: cmath.exp(1j * estimate.witness[(slot, var)]) for var in labels}
                       for slot, labels in enumerate(T.slot_labels)]
            self.assertAlmostEqual(estimate.value, abs(evaluate_form(T, vectors)), delta=1e-12)

    def test_polarization_bound(self):
        rng = make_rng(12)
        for trial in range(20):
            m = 2 + trial % 3
            P = random_sparse(rng, m, variables=4, terms=3)
            sup_form = sup_norm_form(full_symmetric_tensor(P), self.settings).value
            self.assertLessEqual(sup_form, math.e ** m * sup_norm_poly(P, self.settings).value * 1.05)

    def test_polarization_bound_on_index_sets(self):
        rng = make_rng(13)
        for trial in range(200):
            m = 1 + trial % 4
            P = random_sparse(rng, m, variables=5, terms=3 + trial % 4)
            representatives = []
            for alpha in P.terms:
                entries = [var for var, exp in alpha.items for _ in range(exp)]
                representatives.append(tuple(int(entries[k]) for k in rng.permutation(m)))
            settings = OptimizerSettings(restarts=4, grid_resolution=16, seed=trial)
            sup_form = sup_norm_form(symmetric_tensor(P, IndexSet(m, representatives)), settings).value
            self.assertLessEqual(sup_form, math.e ** m * sup_norm_poly(P, settings).value * 1.05)

    def test_zero_polynomial(self):
        self.assertEqual(sup_norm_poly(SparsePolynomial(2, {}), self.settings).value, 0.0)

    def test_settings_checked(self):
        with self.assertRaises(DomainViolation):
            OptimizerSettings(tolerance=0)
        for restarts in (0, -1, 2.5):
            with self.assertRaises(DomainViolation):
                OptimizerSettings(restarts=restarts)
        with self.assertRaises(DomainViolation):
            OptimizerSettings.from_config(restarts=0)


class TestPolyFormat(unittest.TestCase):

    def test_parse(self):
        P = parse_poly("m 2\n# comment\n1.5 -2 1 2\n3 0 2 2\n")
        self.assertEqual(P.coefficient(tuple_to_exponent((1, 2))), 1.5 - 2j)
        self.assertEqual(P.coefficient(tuple_to_exponent((2, 2))), 3)

    def test_round_trip_is_exact(self):
        P = random_polynomial(gen_triangle(2), "gaussian", seed=21)
        restored = parse_poly(serialize_poly(P))
        self.assertEqual(restored, P)
        self.assertEqual(serialize_poly(restored), serialize_poly(P))

    def test_errors(self):
        for text in ("1 0 1 2\n", "m 2\n1 0 1\n", "m 2\n1 x 1 2\n", "m 2\n1 0 1 2\n1 0 2 1\n", "m 2\nnan 0 1 2\n"):
            with self.assertRaises(PolyParseError):
                parse_poly(text)


if __name__ == "__main__":
    unittest.main()
