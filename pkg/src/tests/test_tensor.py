"""
test_tensor.py - Unit tests for bounded images, bounded equality, the centralizer test and recognition
"""

import itertools
import unittest
from typing import Dict, Any, Set
import logging

from src.kleene.expressions import ZERO, ONE, plus, times, star
from src.kleene.positions import PositionAutomaton, position_count
from src.kleene.parser import regex_parse
from src.rewriting.normal_form import nf_reduce
from src.rewriting.tokens import letters_of, parse_word
from src.tensor.centralizer import centralizer_check_bounded
from src.tensor.enumeration import enumerate_nf_image, node_tables, position_walk
from src.tensor.equality import (
    TensorEqualityChecker, nf_member, equal_bounded, is_equal_bounded,
    EQUAL_UP_TO_BOUND, DISTINCT
)
from src.tensor.recognizer import stack_recognize, open_run_width
from src.tensor.shape import outer_body, splice_violation, check_splice_condition
from src.utils.config import ToolkitConfig
from src.utils.errors import EnumerationOverflowError, SearchBudgetExceeded, ShapeViolationError

# Configure logging
logger = logging.getLogger(__name__)

ANBN = "p0 (a p1)* (q1 b)* q0"


def image_strings(text: str, bound: int) -> Set[str]:
    return {str(w) for w in enumerate_nf_image(regex_parse(text), bound).words}


class TestTensorSemantics(unittest.TestCase):
    """
    Normal-form images and the procedures built on them
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.anbn = regex_parse(ANBN)
        self.config = ToolkitConfig()

    def tearDown(self):
        """Clean up test fixtures after each test method."""
        self.anbn = None

    def test_enumerate_anbn(self):
        """Sources of a^n b^n have length 4n+2"""
        self.assertEqual(image_strings(ANBN, 14), {"1", "a b", "a a b b", "a a a b b b"})
        self.assertEqual(image_strings(ANBN, 13), {"1", "a b", "a a b b"})

    def test_enumerate_trivial_images(self):
        self.assertEqual(len(enumerate_nf_image(ZERO, 10)), 0)
        self.assertEqual(image_strings("(p1 q1)*", 6), {"1"})
        self.assertEqual(image_strings("1", 0), {"1"})
        self.assertEqual(image_strings("a", 0), set())

    def test_image_records_shortest_sources(self):
        image = enumerate_nf_image(self.anbn, 14)
        lengths = {str(w): n for w, n in image.lengths.items()}
        self.assertEqual(lengths["a b"], 6)
        self.assertEqual(lengths["a a a b b b"], 14)

    def test_image_is_monotone_in_the_bound(self):
        for text in (ANBN, "(a p1)* (q1 b)*", "(b + a + d)*", "(p0 + a q0)*"):
            previous: Set[str] = set()
            for bound in range(0, 11):
                current = image_strings(text, bound)
                self.assertTrue(previous <= current, f"{text} shrinks at bound {bound}")
                previous = current

    def test_negative_bound_and_overflow(self):
        with self.assertRaises(ValueError):
            enumerate_nf_image(self.anbn, -1)
        with self.assertRaises(EnumerationOverflowError):
            enumerate_nf_image(regex_parse("(a + b + c)*"), 8, word_cap=50)

    def test_position_walk_agrees_with_node_tables(self):
        """Both enumeration strategies give the same shortest-source table"""
        corpus = [ANBN, "(a p1)* (q1 b)*", "(b + a + d)*", "(p0 + a q0)*",
                  "p1 (a + q1 p1)* q1", "0 + 1", "(1 + p1)* q1 q1"]
        for text in corpus:
            expr = regex_parse(text)
            for bound in (0, 3, 9):
                walked = position_walk(expr, bound, 10000)
                tabled = node_tables(expr, bound, 10000)[id(expr)]
                self.assertEqual(walked, tabled, f"{text} at bound {bound}")

    def test_position_count_unfolds_shared_nodes(self):
        word = regex_parse("p1 a q1")
        shared = plus(times(word, star(word)), star(word))
        self.assertEqual(position_count(shared), 9)
        self.assertEqual(position_count(ONE), 0)
        self.assertEqual(PositionAutomaton.from_expression(shared).state_count, 10)

    def test_equal_bounded_examples(self):
        """p1 q1 = 1 and p1 differs from q1"""
        self.assertTrue(is_equal_bounded(regex_parse("p1 q1"), ONE, 10))
        result = equal_bounded(regex_parse("p1"), regex_parse("q1"), 2)
        self.assertEqual(result['verdict'], DISTINCT)
        self.assertEqual(result['witness'], "p1")
        self.assertEqual(result['side'], 'left')

    def test_dyck_closure_decomposition(self):
        """(b + a + d)* equals (N d)* N (b N)* with N = b (b p + a + q d)* d"""
        n = "b (b p + a + q d)* d"
        left = regex_parse("(b + a + d)*", aliases=True)
        right = regex_parse(f"({n} d)* {n} (b {n})*", aliases=True)
        self.assertTrue(is_equal_bounded(left, right, 8))

    def test_witness_is_confirmed_exactly(self):
        """A reported witness lies in one image and has no source on the other side"""
        left, right = regex_parse("(a p1)*"), regex_parse("(a p1)* (q1 b)*")
        result = equal_bounded(left, right, 6)
        self.assertEqual(result['verdict'], DISTINCT)
        witness = nf_reduce(parse_word(result['witness']))
        self.assertEqual(result['side'], 'right')
        self.assertTrue(nf_member(right, witness, self.config.confirmation_depth(len(witness))))
        self.assertFalse(nf_member(left, witness, self.config.confirmation_depth(len(witness))))

    def test_long_differences_are_not_reported(self):
        """Only normal forms within half the bound are candidate witnesses"""
        shifted = regex_parse("p0 (a p1)* (q1 b)* q0 + a a a b b b")
        self.assertEqual(equal_bounded(self.anbn, shifted, 8)['verdict'], EQUAL_UP_TO_BOUND)

    def test_nf_member(self):
        self.assertTrue(nf_member(self.anbn, nf_reduce(letters_of("aabb")), 10))
        self.assertFalse(nf_member(self.anbn, nf_reduce(letters_of("abab")), 10))
        self.assertFalse(nf_member(self.anbn, nf_reduce(parse_word("_0_")), 10))

    def test_checker_keeps_history(self):
        checker = TensorEqualityChecker(self.config)
        checker.check(ONE, regex_parse("(p1 q1)*"), 6)
        checker.check(ONE, regex_parse("a"), 6)
        verdicts = [entry['verdict'] for entry in checker.get_checking_history()]
        self.assertEqual(verdicts, [EQUAL_UP_TO_BOUND, DISTINCT])

    def test_centralizer_check(self):
        self.assertTrue(centralizer_check_bounded(self.anbn, 14))
        self.assertFalse(centralizer_check_bounded(regex_parse("p1"), 10))
        self.assertFalse(centralizer_check_bounded(regex_parse("(a p1)* (q1 b)*"), 10))
        self.assertTrue(centralizer_check_bounded(ZERO, 10))

    def test_stack_recognize_examples(self):
        self.assertTrue(stack_recognize(self.anbn, "aabb"))
        self.assertFalse(stack_recognize(self.anbn, "aab"))
        self.assertTrue(stack_recognize(regex_parse("p0 q0"), ""))

    def test_recognizer_agrees_with_enumeration(self):
        """Every word over {a, b} of length at most 4 is accepted iff it is in the image"""
        corpus = [ANBN, "p0 (a p1)* (q1 b)* q0 p0 (a p1)* (q1 b)* q0", "p0 (a + p1 b q1)* q0"]
        for text in corpus:
            expr = regex_parse(text)
            image = enumerate_nf_image(expr, 12)
            for k in range(5):
                for letters in itertools.product("ab", repeat=k):
                    word = "".join(letters)
                    accepted = stack_recognize(expr, word)
                    if nf_reduce(letters_of(word)) in image:
                        self.assertTrue(accepted, f"{text} rejects {word}")
                    elif accepted:
                        self.assertTrue(nf_member(expr, nf_reduce(letters_of(word)), 12),
                                        f"{text} accepts {word} without a source")

    def test_recognizer_errors(self):
        with self.assertRaises(ShapeViolationError):
            stack_recognize(regex_parse("a p1"), "a")
        with self.assertRaises(ShapeViolationError):
            stack_recognize(self.anbn, parse_word("a p1"))
        with self.assertRaises(ShapeViolationError):
            stack_recognize(regex_parse("p0 (p0 a q0)* q0"), "a")
        spliced = regex_parse("p0 a q0 p0 b q0")
        self.assertTrue(stack_recognize(spliced, "ab"))
        self.assertFalse(stack_recognize(spliced, "a"))
        tight = ToolkitConfig(node_cap=3)
        with self.assertRaises(SearchBudgetExceeded):
            stack_recognize(self.anbn, "aaabbb", tight)

    def test_shape_helpers(self):
        self.assertEqual(outer_body(regex_parse("p0 q0")), ONE)
        self.assertEqual(outer_body(self.anbn), regex_parse("(a p1)* (q1 b)*"))
        self.assertIsNone(splice_violation(regex_parse("a q0 p0 b")))
        self.assertIsNotNone(splice_violation(regex_parse("a p0")))
        self.assertIsNotNone(splice_violation(regex_parse("q0")))
        with self.assertRaises(ShapeViolationError):
            check_splice_condition(regex_parse("(a q0)*"))
        self.assertEqual(open_run_width(regex_parse("p0 p1 a q1 q0")), 2)
        self.assertEqual(open_run_width(regex_parse("a")), 1)


def run_tests() -> Dict[str, Any]:
    """
    Run all tensor semantics tests

    Returns:
        dict: Test results
    """
    try:
        loader = unittest.TestLoader()
        suite = loader.loadTestsFromTestCase(TestTensorSemantics)

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
        logger.error(f"Failed to run tensor tests: {str(e)}")
        return {
            'success': False,
            'error': str(e)
        }


# Run tests if script is executed directly
if __name__ == "__main__":
    print("Running tensor tests...")

    results = run_tests()
    print(f"Test Results: {results}")
