"""
completeness.py - Matrix isomorphism of the bra-ket model and completeness checks

hat(a)_ij = p_i a q_j and check(A) = sum q_i A_ij p_j are inverse semiring
morphisms between relations and m x m matrices of relations. The relative
completeness check compares p0 phi(e) q0 with p0 phi(1) q0, where e is the
sum of q_i p_i, using bounded equality of polycyclic normal forms.
"""

import time
from datetime import datetime
from typing import Any, Dict, List, Optional
import logging

from src.braket.omega_model import OmegaModel
from src.braket.relations import IndexRelation
from src.kleene.expressions import (
    TensorExpr, ONE, atom, times, substitute, completeness_sum, max_bracket_index, word_expr
)
from src.kleene.matrix import SquareMatrix
from src.rewriting.recoding import RecodingMode, encode_token
from src.rewriting.tokens import Token, letter, open_bracket, close_bracket
from src.tensor.centralizer import centralizer_check_bounded
from src.tensor.equality import equal_bounded, DISTINCT
from src.tensor.shape import check_splice_condition
from src.utils.config import ToolkitConfig, default_config
from src.utils.decorators import performance_monitor

# Configure logging
logger = logging.getLogger(__name__)


def hat_map(relation: IndexRelation, m: int, trunc: Optional[int] = None) -> SquareMatrix:
    """
    The m x m matrix (p_i a q_j) of a relation

    Args:
        relation (IndexRelation): the relation a
        m (int): bracket count
        trunc (int): truncation, the relation's own by default

    Returns:
        SquareMatrix: matrix over the relation algebra
    """
    model = OmegaModel(m, relation.trunc if trunc is None else trunc)
    opens = [model.open(i) for i in range(m)]
    closes = [model.close(j) for j in range(m)]
    rows = [[opens[i].compose(relation).compose(closes[j]) for j in range(m)] for i in range(m)]
    return SquareMatrix(model.algebra, rows)


def check_map(matrix: SquareMatrix, m: int, trunc: int) -> IndexRelation:
    """The relation sum over i, j of q_i A_ij p_j"""
    model = OmegaModel(m, trunc)
    total = model.algebra.zero
    for i in range(m):
        for j in range(m):
            entry = matrix[i, j]
            if entry.is_empty():
                continue
            total = total.union(model.close(i).compose(entry).compose(model.open(j)))
    return total


def restrict_matrix(matrix: SquareMatrix, domain) -> SquareMatrix:
    return matrix.map(lambda r: r.restricted(domain))


@performance_monitor
def relative_completeness_check(phi: TensorExpr, bound: Optional[int] = None, slot: str = 'x',
                                m: Optional[int] = None,
                                config: ToolkitConfig = default_config) -> Dict[str, Any]:
    """
    Compare p0 phi(e) q0 with p0 phi(1) q0 at a source bound

    Args:
        phi (TensorExpr): expression with the free slot letter; p0 and q0 may
            only occur inside q0 p0
        bound (int): source-length bound
        slot (str): the slot letter
        m (int): bracket count of e, at least the configured m
        config (ToolkitConfig): configuration

    Returns:
        dict: the bounded equality verdict plus the centralizer test of p0 phi(1) q0

    Raises:
        ShapeViolationError: if the side condition fails
    """
    bound = config.bound if bound is None else bound
    m = max(config.m if m is None else m, max_bracket_index(phi) + 1)
    try:
        check_splice_condition(phi)
        slot_token = letter(slot)
        e = completeness_sum(m)

        def plug(value: TensorExpr) -> TensorExpr:
            return substitute(phi, lambda t: value if t == slot_token else atom(t))

        outer_open, outer_close = atom(open_bracket(0)), atom(close_bracket(0))
        with_e = times(outer_open, plug(e), outer_close)
        with_one = times(outer_open, plug(ONE), outer_close)

        comparison = equal_bounded(with_e, with_one, bound, config)
        in_centralizer = centralizer_check_bounded(with_one, bound, config.word_cap)
        if comparison['verdict'] == DISTINCT:
            logger.warning(f"Relative completeness refuted at L_src={bound}: {comparison['witness']}")

        result = dict(comparison)
        result.update({
            'm': m,
            'slot': slot,
            'centralizer': in_centralizer,
            'checked_at': datetime.now().isoformat(),
            'timestamp': time.time()
        })
        logger.info(f"Relative completeness check: {result['verdict']}, centralizer={in_centralizer}")
        return result

    except Exception as e:
        logger.error(f"Error in relative completeness check: {str(e)}")
        raise


def _encoded(token: Token, m: int) -> TensorExpr:
    return word_expr(encode_token(token, m, RecodingMode.BRAKET))


def braket_encode_check(m: int, trunc: Optional[int] = None) -> Dict[str, Any]:
    """
    Match and completeness identities of the bra-ket recoding into two pairs

    Evaluates enc(p_i) enc(q_j) and the sum of enc(q_i) enc(p_i) in the two-pair
    model; match identities are compared on the indices where every encoded
    push stays below the truncation.

    Args:
        m (int): bracket count of the source alphabet
        trunc (int): truncation T

    Returns:
        dict: per-pair match results, the completeness result and the overall verdict
    """
    trunc = default_config.trunc if trunc is None else trunc
    model = OmegaModel(2, trunc)
    opens = [model.evaluate(_encoded(open_bracket(i), m)) for i in range(m)]
    closes = [model.evaluate(_encoded(close_bracket(i), m)) for i in range(m)]

    domain = set(range(trunc))
    for relation in opens:
        domain &= relation.rows()
    identity = IndexRelation.identity(trunc).restricted(domain)

    match: Dict[str, bool] = {}
    for i in range(m):
        for j in range(m):
            product = opens[i].compose(closes[j])
            rows_in_domain = IndexRelation(trunc, frozenset(p for p in product.pairs if p[0] in domain))
            expected = identity if i == j else IndexRelation.empty(trunc)
            match[f"{i},{j}"] = rows_in_domain == expected

    completeness = model.algebra.sum(closes[i].compose(opens[i]) for i in range(m))
    complete = completeness == IndexRelation.identity(trunc)
    result = {
        'm': m,
        'trunc': trunc,
        'domain_size': len(domain),
        'match': match,
        'completeness': complete,
        'holds': complete and all(match.values())
    }
    logger.info(f"Bra-ket recoding check at m={m}, T={trunc}: holds={result['holds']}")
    return result


def model_laws(m: int, trunc: int) -> Dict[str, Any]:
    """
    Match and completeness equations of the model itself

    Returns:
        dict: failing (i, j) match pairs, the completeness verdict and the domain size
    """
    model = OmegaModel(m, trunc)
    domain = model.domain()
    identity = IndexRelation.identity(trunc).restricted(domain)
    failures: List[List[int]] = []
    for i in range(m):
        for j in range(m):
            product = model.open(i).compose(model.close(j)).restricted(domain)
            expected = identity if i == j else IndexRelation.empty(trunc)
            if product != expected:
                failures.append([i, j])
    total = model.evaluate(completeness_sum(m)).restricted(domain)
    return {
        'm': m,
        'trunc': trunc,
        'domain_size': len(domain),
        'match_failures': failures,
        'completeness': total == identity
    }
