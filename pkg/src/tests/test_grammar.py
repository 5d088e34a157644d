"""
test_grammar.py - Unit tests for grammars, the CYK and enumeration oracles and the grammar bridge
"""

import itertools
import unittest
from typing import Dict, Any, List
import logging

from src.grammar.bridge import cfg_to_expr, expr_to_cfg
from src.grammar.cfg import Grammar, Production, parse_grammar, format_grammar
from src.grammar.cyk import to_cnf, cyk_member
from src.grammar.generation import cfg_enumerate, word_strings, derives
from src.grammar.normalize import nullable_symbols, remove_useless, normalize
from src.kleene.expressions import ZERO, ONE
from src.kleene.parser import regex_parse
from src.tensor.centralizer import centralizer_check_bounded
from src.tensor.equality import is_equal_bounded
from src.tensor.recognizer import stack_recognize
from src.utils.errors import GenerationCapExceeded, GrammarError, ShapeViolationError

# Configure logging
logger = logging.getLogger(__name__)

ANBN_GRAMMAR = "S -> a S b | ;"

CORPUS = [
    ANBN_GRAMMAR,
    "S -> S S | a",
    "S -> a S | b",
    "S -> A B\nA -> a A b | ;\nB -> b | ;"
]


def words_over(alphabet: str, max_length: int) -> List[str]:
    return ["".join(w) for k in range(max_length + 1) for w in itertools.product(alphabet, repeat=k)]


def balanced(word: str) -> bool:
    depth = 0
    for ch in word:
        depth += 1 if ch == '(' else -1
        if depth < 0:
            return False
    return depth == 0


class TestGrammarBridge(unittest.TestCase):
    """
    Grammar text, normalization, the oracles and both conversions
    """

    def setUp(self):
        """Set up test fixtures before each test method."""
        self.anbn = parse_grammar(ANBN_GRAMMAR)
        self.corpus = [parse_grammar(text) for text in CORPUS]

    def tearDown(self):
        """Clean up test fixtures after each test method."""
        self.corpus = []

    def test_parse_and_format(self):
        self.assertEqual(self.anbn.start, "S")
        self.assertEqual(self.anbn.productions, (Production("S", ("a", "S", "b")), Production("S", ())))
        self.assertEqual(format_grammar(self.anbn), ANBN_GRAMMAR)
        self.assertEqual(parse_grammar(format_grammar(self.corpus[3])), self.corpus[3])
        self.assertEqual(self.anbn.terminals, frozenset({"a", "b"}))
        commented = parse_grammar("# balanced\nS -> a S b |   # two alternatives\n")
        self.assertEqual(cfg_enumerate(commented, 4), cfg_enumerate(self.anbn, 4))

    def test_parse_errors(self):
        for text in ("S a", "", "S T -> a", "; -> a"):
            with self.assertRaises(GrammarError):
                parse_grammar(text)

    def test_normalization_helpers(self):
        grammar = parse_grammar("S -> A B\nA -> ;\nB -> b | ;")
        self.assertEqual(nullable_symbols(grammar), {"S", "A", "B"})
        useless = parse_grammar("S -> a | A\nA -> A b\nC -> c")
        self.assertEqual(remove_useless(useless).productions, (Production("S", ("a",)),))
        cnf = to_cnf(self.corpus[3])
        self.assertTrue(cnf.accepts_empty)
        for p in cnf.grammar.productions:
            self.assertTrue(len(p.body) in (1, 2))
            if len(p.body) == 2:
                self.assertTrue(all(cnf.grammar.is_nonterminal(s) for s in p.body))
        self.assertFalse(any(p.is_epsilon() for p in normalize(self.anbn).productions
                             if p.head != normalize(self.anbn).start))

    def test_cyk_member(self):
        self.assertTrue(cyk_member(self.anbn, "ab"))
        self.assertFalse(cyk_member(self.anbn, "ba"))
        self.assertTrue(cyk_member(self.anbn, ""))
        self.assertTrue(cyk_member(to_cnf(self.anbn), ["a", "a", "b", "b"]))

    def test_cfg_enumerate_examples(self):
        self.assertEqual(word_strings(cfg_enumerate(self.anbn, 6)), ["", "ab", "aabb", "aaabbb"])
        self.assertEqual(word_strings(cfg_enumerate(self.corpus[1], 3)), ["a", "aa", "aaa"])
        self.assertEqual(cfg_enumerate(parse_grammar("S -> S a"), 5), frozenset())
        with self.assertRaises(GenerationCapExceeded):
            cfg_enumerate(parse_grammar("S -> S S | a | b"), 8, cap=20)

    def test_nonterminals_without_productions(self):
        """A nonterminal with only empty or no productions never surfaces as a terminal"""
        self.assertEqual(word_strings(cfg_enumerate(parse_grammar("S -> ;"), 4)), [""])
        hollow = parse_grammar("S -> a E b\nE -> ;")
        self.assertEqual(word_strings(cfg_enumerate(hollow, 4)), ["ab"])
        self.assertTrue(cyk_member(hollow, "ab"))
        self.assertFalse(cyk_member(hollow, ["a", "E", "b"]))
        self.assertEqual(hollow.terminals, frozenset({"a", "b"}))
        self.assertEqual(cfg_enumerate(parse_grammar("S -> S a"), 5), frozenset())
        self.assertFalse(cyk_member(parse_grammar("S -> S a"), "a"))

    def test_extracted_grammar_words_are_letters(self):
        for text in ("p0 (a p1)* (q1 b)* q0", "p0 (a p1)* (q1 b)* q0 p0 (a p1)* (q1 b)* q0", "p0 (a + p1 b q1)* q0"):
            grammar = expr_to_cfg(regex_parse(text))
            for word in cfg_enumerate(grammar, 6):
                self.assertTrue(set(word) <= {"a", "b"}, f"{text} yields {word}")

    def test_round_trip_preserves_language(self):
        """expr_to_cfg(cfg_to_expr(G)) generates the words of G"""
        for text in (ANBN_GRAMMAR, "S -> a S b S | ;", "S -> ;", "S -> a S | ;"):
            grammar = parse_grammar(text)
            self.assertEqual(cfg_enumerate(expr_to_cfg(cfg_to_expr(grammar)), 4), cfg_enumerate(grammar, 4),
                             f"Round trip changes {text}")

    def test_oracles_agree(self):
        """CYK, bounded enumeration and derivation search agree on short words"""
        for grammar in self.corpus:
            enumerated = set(word_strings(cfg_enumerate(grammar, 5)))
            for word in words_over("ab", 5):
                member = cyk_member(grammar, word)
                self.assertEqual(member, word in enumerated, f"{grammar} disagrees on {word!r}")
                if len(word) <= 3:
                    self.assertEqual(derives(grammar, word, 12), member)

    def test_cfg_to_expr_anbn(self):
        expr = cfg_to_expr(self.anbn)
        self.assertTrue(stack_recognize(expr, "aabb"))
        self.assertFalse(stack_recognize(expr, "aab"))
        self.assertTrue(stack_recognize(expr, ""))
        self.assertTrue(centralizer_check_bounded(expr, 14))
        self.assertTrue(stack_recognize(cfg_to_expr(self.anbn, recode=False), "ab"))

    def test_cfg_to_expr_edge_cases(self):
        self.assertTrue(is_equal_bounded(cfg_to_expr(parse_grammar("S -> ;")), ONE, 6))
        self.assertEqual(cfg_to_expr(parse_grammar("S -> S a")), ZERO)
        with self.assertRaises(GrammarError):
            cfg_to_expr(parse_grammar("S -> ab"))

    def test_recognizer_agrees_with_cyk(self):
        for grammar in (self.corpus[0], self.corpus[2], self.corpus[3]):
            expr = cfg_to_expr(grammar)
            for word in words_over("ab", 4):
                self.assertEqual(stack_recognize(expr, word), cyk_member(grammar, word),
                                 f"{grammar} disagrees on {word!r}")

    def test_dyck_grammar_against_balance(self):
        """Parentheses as plain letters: the recognizer is a balance counter"""
        expr = cfg_to_expr(parse_grammar("S -> ( S ) S | ;"))
        for word in words_over("()", 6):
            self.assertEqual(stack_recognize(expr, word), balanced(word), f"Disagreement on {word!r}")

    def test_expr_to_cfg(self):
        grammar = expr_to_cfg(regex_parse("p0 (a p1)* (q1 b)* q0"))
        self.assertEqual(word_strings(cfg_enumerate(grammar, 6)), ["", "ab", "aabb", "aaabbb"])
        self.assertEqual(word_strings(cfg_enumerate(expr_to_cfg(regex_parse("p0 q0")), 4)), [""])

    def test_expr_to_cfg_of_spliced_product(self):
        """The q0 p0 splice concatenates two a^n b^n languages"""
        doubled = regex_parse("p0 (a p1)* (q1 b)* q0 p0 (a p1)* (q1 b)* q0")
        expected = parse_grammar("S -> A B\nA -> a A b | ;\nB -> a B b | ;")
        for style in ('dyck', 'closure'):
            self.assertEqual(cfg_enumerate(expr_to_cfg(doubled, style=style), 8), cfg_enumerate(expected, 8))

    def test_expr_to_cfg_shape_errors(self):
        with self.assertRaises(ShapeViolationError):
            expr_to_cfg(regex_parse("a p1"))
        with self.assertRaises(ShapeViolationError):
            expr_to_cfg(regex_parse("p0 p0 q0"))
        with self.assertRaises(ShapeViolationError):
            expr_to_cfg(regex_parse("p0 a q0 b q0"))

    def test_grammar_renaming(self):
        renamed = self.anbn.renamed("l.")
        self.assertEqual(renamed.start, "l.S")
        self.assertEqual(cfg_enumerate(renamed, 4), cfg_enumerate(self.anbn, 4))
        self.assertIsInstance(renamed, Grammar)


def run_tests() -> Dict[str, Any]:
    """
    Run all grammar tests

    Returns:
        dict: Test results
    """
    try:
        loader = unittest.TestLoader()
        suite = loader.loadTestsFromTestCase(TestGrammarBridge)

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
        logger.error(f"Failed to run grammar tests: {str(e)}")
        return {
            'success': False,
            'error': str(e)
        }


# Run tests if script is executed directly
if __name__ == "__main__":
    print("Running grammar tests...")

    results = run_tests()
    print(f"Test Results: {results}")
