"""
test_rewriting.py - Unit tests for polycyclic normal forms and bracket recodings
"""

import itertools
import random
import unittest
from typing import Dict, Any
import logging

from src.rewriting.normal_form import nf_reduce, nf_mul, all_normal_forms
from src.rewriting.recoding import RecodingMode, encode_brackets, encode_token
from src.rewriting.tokens import (
    EMPTY_WORD, ZERO_WORD, NormalFormWord, letter, open_bracket, close_bracket, parse_word
)
from src.utils.config import default_config
from src.utils.errors import BracketIndexError, RewriteError

# Configure logging
logger = logging.getLogger(__name__)


def _alphabet(m: int, letters: str = "a"):
    return ([letter(x) for x in letters] + [open_bracket(i) for i in range(m)]
            + [close_bracket(i) for i in range(m)])


class TestPolycyclicRewriting(unittest.TestCase):
    """
    Normal forms of words, their product and the recodings into two pairs
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.rng = random.Random(default_config.seed)
        self.alphabet = _alphabet(2)

    def tearDown(self):
        """Clean up test fixtures after each test method."""
        self.rng = None

    def reduce(self, text: str) -> NormalFormWord:
        return nf_reduce(parse_word(text))

    def test_match_and_mismatch(self):
        """p_i q_i cancels, p_i q_j annihilates"""
        self.assertEqual(self.reduce("p1 q1"), EMPTY_WORD)
        self.assertEqual(str(self.reduce("p1 q1")), "1")
        self.assertEqual(self.reduce("p1 q0"), ZERO_WORD)
        self.assertEqual(str(self.reduce("p1 q0")), "_0_")

    def test_letters_commute_with_brackets(self):
        """Letters move left past openings and right past closings"""
        self.assertEqual(str(self.reduce("p1 a q1")), "a")
        self.assertEqual(str(self.reduce("q1 a p0")), "q1 a p0")
        self.assertEqual(str(self.reduce("p0 a p1 q1 b q0")), "a b")
        self.assertEqual(str(self.reduce("p0 a b")), "a b p0")

    def test_zero_token_absorbs(self):
        """Any word containing the zero marker reduces to zero"""
        self.assertEqual(self.reduce("a _0_ b"), ZERO_WORD)
        self.assertEqual(self.reduce("_0_"), ZERO_WORD)

    def test_product_of_normal_forms(self):
        """nf_mul matches and annihilates across the seam"""
        self.assertEqual(str(nf_mul(self.reduce("q1 a"), self.reduce("p1 b"))), "q1 a b p1")
        self.assertEqual(nf_mul(self.reduce("p1"), self.reduce("q1")), EMPTY_WORD)
        self.assertEqual(nf_mul(self.reduce("a"), ZERO_WORD), ZERO_WORD)
        self.assertEqual(nf_mul(self.reduce("p0 p1"), self.reduce("q1 q1")), ZERO_WORD)

    def test_confluence_against_all_redex_orders(self):
        """Exploring every rewrite order yields exactly the scanner's result"""
        for _ in range(300):
            length = self.rng.randint(0, 8)
            word = [self.rng.choice(self.alphabet) for _ in range(length)]
            forms = all_normal_forms(word)
            self.assertEqual(forms, frozenset([nf_reduce(word)]),
                             f"Rewrite orders disagree on {' '.join(str(t) for t in word)}")

    def test_idempotent_and_homomorphic(self):
        """Reducing a normal form is a fixpoint and nf respects concatenation"""
        for _ in range(300):
            u = [self.rng.choice(self.alphabet) for _ in range(self.rng.randint(0, 6))]
            v = [self.rng.choice(self.alphabet) for _ in range(self.rng.randint(0, 6))]
            reduced = nf_reduce(u)
            self.assertEqual(nf_reduce(reduced.tokens()), reduced)
            self.assertEqual(nf_reduce(u + v), nf_mul(reduced, nf_reduce(v)))

    def test_monoid_laws_on_short_normal_forms(self):
        """Associativity, unit and zero on all normal forms of short words"""
        words = {nf_reduce(w) for k in range(3) for w in itertools.product(self.alphabet, repeat=k)}
        words = sorted(words, key=lambda w: w.sort_key())
        for x in words:
            self.assertEqual(nf_mul(EMPTY_WORD, x), x)
            self.assertEqual(nf_mul(x, EMPTY_WORD), x)
            self.assertEqual(nf_mul(ZERO_WORD, x), ZERO_WORD)
            for y in words:
                for z in words:
                    self.assertEqual(nf_mul(nf_mul(x, y), z), nf_mul(x, nf_mul(y, z)))

    def test_polycyclic_recoding(self):
        """p_i -> b p^(i+1), q_i -> q^(i+1) d with exact match identities"""
        m = 3
        self.assertEqual([str(t) for t in encode_token(open_bracket(0), m)], ["p0", "p1"])
        self.assertEqual([str(t) for t in encode_token(close_bracket(2), m)], ["q1", "q1", "q1", "q0"])
        for i in range(m):
            for j in range(m):
                product = encode_brackets([open_bracket(i), close_bracket(j)], m)
                self.assertEqual(nf_reduce(product), EMPTY_WORD if i == j else ZERO_WORD)
            self.assertEqual(nf_reduce([open_bracket(0)] + list(encode_token(close_bracket(i), m))),
                             ZERO_WORD)
            self.assertEqual(nf_reduce(list(encode_token(open_bracket(i), m)) + [close_bracket(0)]),
                             ZERO_WORD)

    def test_braket_recoding(self):
        """The last pair loses its outer bracket; m = 2 is the identity"""
        m = 3
        self.assertEqual([str(t) for t in encode_token(open_bracket(2), m, RecodingMode.BRAKET)], ["p1", "p1"])
        self.assertEqual([str(t) for t in encode_token(close_bracket(0), m, RecodingMode.BRAKET)], ["q0"])
        self.assertEqual(encode_token(open_bracket(1), 2, RecodingMode.BRAKET), (open_bracket(1),))

    def test_polycyclic_recoding_is_injective(self):
        """Distinct bracket normal forms keep distinct images"""
        m = 3
        brackets = _alphabet(m, letters="")
        forms = {nf_reduce(w) for k in range(4) for w in itertools.product(brackets, repeat=k)}
        forms.discard(ZERO_WORD)
        images = {nf_reduce(encode_brackets(w.tokens(), m)) for w in forms}
        self.assertEqual(len(images), len(forms))

    def test_letters_pass_through_recoding(self):
        word = parse_word("a p1 b q1")
        encoded = encode_brackets(word, 2)
        self.assertEqual([t.letter for t in encoded if not t.is_bracket()], ['a', 'b'])

    def test_aliases_and_index_checks(self):
        """b p d q alias the two-pair brackets; indices are checked against m"""
        self.assertEqual(parse_word("b p d q", aliases=True),
                         [open_bracket(0), open_bracket(1), close_bracket(0), close_bracket(1)])
        with self.assertRaises(BracketIndexError):
            parse_word("p3", m=2)
        with self.assertRaises(RewriteError):
            parse_word("ab")
        with self.assertRaises(RewriteError):
            encode_token(open_bracket(0), 1)


def run_tests() -> Dict[str, Any]:
    """
    Run all rewriting tests

    Returns:
        dict: Test results
    """
    try:
        loader = unittest.TestLoader()
        suite = loader.loadTestsFromTestCase(TestPolycyclicRewriting)

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
        logger.error(f"Failed to run rewriting tests: {str(e)}")
        return {
            'success': False,
            'error': str(e)
        }


# Run tests if script is executed directly
if __name__ == "__main__":
    print("Running rewriting tests...")

    results = run_tests()
    print(f"Test Results: {results}")
