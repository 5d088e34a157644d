"""
recognizer.py - Pushdown recognition of the context-free language of p0.r.q0

Runs the position automaton of the expression against the input with a stack
of bracket indices: an opening bracket pushes its index, a closing bracket pops
and must match, and letters advance the cursor.

r may hold p0 and q0 only as splices q0 p0, so index 0 only ever sits at the
bottom of the stack and each frame of the outer pair is checked alike.
"""

from collections import deque
from typing import Sequence, Tuple, Union
import logging

from src.kleene.expressions import TensorExpr, ExprKind, postorder
from src.kleene.positions import PositionAutomaton
from src.rewriting.tokens import Token, TokenKind, letters_of
from src.tensor.shape import outer_body, check_splice_condition
from src.utils.config import ToolkitConfig, default_config
from src.utils.decorators import performance_monitor
from src.utils.errors import SearchBudgetExceeded, ShapeViolationError

# Configure logging
logger = logging.getLogger(__name__)

Configuration = Tuple[int, Tuple[int, ...], int]


def open_run_width(expr: TensorExpr) -> int:
    """Longest run of consecutive opening brackets among the factors of a product (at least 1)"""
    width = 1
    for node in postorder(expr):
        if node.kind is not ExprKind.PRODUCT:
            continue
        run = 0
        for child in node.children:
            if child.kind is ExprKind.ATOM and child.token.kind is TokenKind.OPEN:
                run += 1
                width = max(width, run)
            else:
                run = 0
    return width


@performance_monitor
def stack_recognize(expr: TensorExpr, word: Union[str, Sequence[Token]],
                    config: ToolkitConfig = default_config) -> bool:
    """
    Decide whether a bracket-free word belongs to the language of p0.r.q0

    Args:
        expr (TensorExpr): expression of the form p0 r q0
        word (str | Sequence[Token]): the input, a string of letters or letter tokens
        config (ToolkitConfig): stack factor and node cap

    Returns:
        bool: True iff the word is accepted

    Raises:
        ShapeViolationError: if expr is not p0.r.q0, if r uses p0 or q0 other than as
            a splice q0 p0, or the word holds brackets
        SearchBudgetExceeded: if the node cap is reached before a decision
    """
    check_splice_condition(outer_body(expr))
    tokens = letters_of(word) if isinstance(word, str) else list(word)
    if any(t.kind is not TokenKind.LETTER for t in tokens):
        raise ShapeViolationError("Recognizer input must be a word over the letters")
    letters = [t.letter for t in tokens]

    automaton = PositionAutomaton.from_expression(expr)
    stack_bound = config.stack_factor * (len(letters) + 1) * open_run_width(expr)
    logger.info(f"Recognizing {len(letters)} letters with {automaton.state_count} positions, "
                f"stack bound {stack_bound}")

    start: Configuration = (0, (), 0)
    visited = {start}
    queue = deque([start])

    while queue:
        state, stack, cursor = queue.popleft()
        if state in automaton.accepting and not stack and cursor == len(letters):
            return True

        for target in automaton.follow[state]:
            token = automaton.labels[target]
            if token.kind is TokenKind.LETTER:
                if cursor == len(letters) or letters[cursor] != token.letter:
                    continue
                successor = (target, stack, cursor + 1)
            elif token.kind is TokenKind.OPEN:
                if len(stack) >= stack_bound:
                    continue
                successor = (target, stack + (token.index,), cursor)
            else:
                if not stack or stack[-1] != token.index:
                    continue
                successor = (target, stack[:-1], cursor)

            if successor in visited:
                continue
            visited.add(successor)
            if len(visited) > config.node_cap:
                logger.error(f"Recognizer node cap {config.node_cap} reached")
                raise SearchBudgetExceeded(
                    f"Recognizer explored more than {config.node_cap} configurations",
                    {'node_cap': config.node_cap, 'word_length': len(letters)})
            queue.append(successor)

    return False
