"""
test_braket.py - Unit tests for the truncated stack model and the completeness checks
"""

import random
import unittest
from typing import Dict, Any
import logging

from src.braket.completeness import (
    hat_map, check_map, restrict_matrix, relative_completeness_check, braket_encode_check, model_laws
)
from src.braket.omega_model import OmegaModel, omega_model_eval, overflow_free_domain
from src.braket.relations import IndexRelation, RelationAlgebra
from src.kleene.expressions import completeness_sum
from src.kleene.matrix import SquareMatrix
from src.kleene.parser import regex_parse
from src.tensor.equality import EQUAL_UP_TO_BOUND
from src.utils.config import default_config
from src.utils.errors import ModelError, ShapeViolationError

# Configure logging
logger = logging.getLogger(__name__)


class TestBraketModel(unittest.TestCase):
    """
    Brackets as push and pop relations on stack codes below a truncation
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.rng = random.Random(default_config.seed)

    def tearDown(self):
        """Clean up test fixtures after each test method."""
        self.rng = None

    def random_relation(self, trunc: int, support: int, size: int) -> IndexRelation:
        pairs = {(self.rng.randrange(support), self.rng.randrange(support)) for _ in range(size)}
        return IndexRelation.from_pairs(trunc, pairs)

    def test_open_bracket_relation(self):
        """p0 at m=2, T=7 is {(k, 2k) : 2k < 7}"""
        relation = omega_model_eval(regex_parse("p0"), 2, 7)
        self.assertEqual(relation.sorted_pairs(), [(0, 0), (1, 2), (2, 4), (3, 6)])
        self.assertEqual(omega_model_eval(regex_parse("q0"), 2, 7), relation.converse())
        self.assertEqual(str(omega_model_eval(regex_parse("0"), 2, 7)), "0")

    def test_match_and_completeness_in_the_model(self):
        model = OmegaModel(2, 12)
        domain = model.domain()
        for i in range(2):
            for j in range(2):
                product = model.open(i) @ model.close(j)
                if i == j:
                    self.assertEqual(product.restricted(domain), IndexRelation.identity(12).restricted(domain))
                else:
                    self.assertTrue(product.is_empty())
        self.assertEqual(omega_model_eval(completeness_sum(2), 2, 4), IndexRelation.identity(4))

    def test_model_laws(self):
        for m, trunc in ((2, 4), (2, 9), (3, 13)):
            laws = model_laws(m, trunc)
            self.assertEqual(laws['match_failures'], [])
            self.assertTrue(laws['completeness'])
            self.assertEqual(laws['domain_size'], len(overflow_free_domain(m, trunc)))

    def test_overflow_free_domain(self):
        self.assertEqual(overflow_free_domain(2, 7), frozenset({0, 1, 2}))
        self.assertEqual(overflow_free_domain(3, 3), frozenset({0}))

    def test_star_is_reflexive_transitive_closure(self):
        relation = omega_model_eval(regex_parse("(p0)*"), 2, 8)
        self.assertIn((1, 4), relation.pairs)
        self.assertIn((5, 5), relation.pairs)
        self.assertNotIn((4, 1), relation.pairs)
        algebra = RelationAlgebra(8)
        self.assertEqual(algebra.star(algebra.zero), algebra.one)

    def test_model_errors(self):
        with self.assertRaises(ModelError):
            omega_model_eval(regex_parse("a"), 2, 8)
        with self.assertRaises(ModelError):
            omega_model_eval(regex_parse("p2", m=3), 2, 8)
        with self.assertRaises(ModelError):
            OmegaModel(2, 1)
        with self.assertRaises(ModelError):
            IndexRelation.from_pairs(3, [(0, 5)])
        with self.assertRaises(ModelError):
            IndexRelation.identity(3).union(IndexRelation.identity(4))

    def test_hat_of_units(self):
        trunc = 12
        identity, empty = IndexRelation.identity(trunc), IndexRelation.empty(trunc)
        domain = overflow_free_domain(2, trunc)
        restricted = restrict_matrix(hat_map(identity, 2), domain)
        for i in range(2):
            for j in range(2):
                expected = identity.restricted(domain) if i == j else empty
                self.assertEqual(restricted[i, j], expected)
                self.assertTrue(hat_map(empty, 2)[i, j].is_empty())

    def test_hat_is_multiplicative(self):
        trunc = 12
        for _ in range(20):
            a = self.random_relation(trunc, trunc, 10)
            b = self.random_relation(trunc, trunc, 10)
            product = hat_map(a, 2) * hat_map(b, 2)
            direct = hat_map(a @ b, 2)
            for i in range(2):
                for j in range(2):
                    self.assertEqual(product[i, j], direct[i, j])

    def test_check_inverts_hat(self):
        trunc = 12
        for m in (2, 3):
            for _ in range(20):
                a = self.random_relation(trunc, trunc // m, 6)
                self.assertEqual(check_map(hat_map(a, m), m, trunc), a)
        algebra = RelationAlgebra(trunc)
        zero = SquareMatrix(algebra, [[algebra.zero] * 2 for _ in range(2)])
        self.assertTrue(check_map(zero, 2, trunc).is_empty())
        unit = SquareMatrix.identity(algebra, 2)
        self.assertEqual(check_map(unit, 2, trunc), IndexRelation.identity(trunc))

    def test_relative_completeness_examples(self):
        for text in ("x", "p1 x q1", "a x b", "x q0 p0 x", "(p1 x q1)*"):
            result = relative_completeness_check(regex_parse(text), bound=10)
            self.assertEqual(result['verdict'], EQUAL_UP_TO_BOUND, f"Completeness refuted for {text}")
            self.assertTrue(result['centralizer'])
            self.assertEqual(result['m'], 2)
        with self.assertRaises(ShapeViolationError):
            relative_completeness_check(regex_parse("p0 x"), bound=6)

    def test_relative_completeness_other_slot(self):
        result = relative_completeness_check(regex_parse("p1 y q1 x"), bound=8, slot='y')
        self.assertEqual(result['slot'], 'y')
        self.assertEqual(result['verdict'], EQUAL_UP_TO_BOUND)
        self.assertTrue(result['centralizer'])

    def test_braket_recoding_check(self):
        for m in (2, 3, 4):
            result = braket_encode_check(m, 24)
            self.assertTrue(result['holds'], f"Bra-ket recoding fails at m={m}")
            self.assertEqual(len(result['match']), m * m)


def run_tests() -> Dict[str, Any]:
    """
    Run all bra-ket model tests

    Returns:
        dict: Test results
    """
    try:
        loader = unittest.TestLoader()
        suite = loader.loadTestsFromTestCase(TestBraketModel)

        runner = unittest.TextTestRunner(verbosity=2)
        result = runner.run(suite)

        return {
            'success': True,
            'tests_run': result.testsRun,
            'failures': len(result.failures),
            'errors': len(result.errors),
            'successful': not (result.failures or result.errors)
        }

    except Exception as e:
        logger.error(f"Failed to run bra-ket tests: {str(e)}")
        return {
            'success': False,
            'error': str(e)
        }


# Run tests if script is executed directly
if __name__ == "__main__":
    print("Running bra-ket model tests...")

    results = run_tests()
    print(f"Test Results: {results}")
