"""Truth-table semantics: models, entailment, prime implicates, mifap-assignments.

Ballots are encoded as integers with issue 0 as the most significant bit, so
ascending codes are lexicographic ballot order. All results are exact and
computed by exhaustive enumeration, capped by ``Settings.max_issues``.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Set

import numpy as np

from aggparadox.config import HARD_ISSUE_LIMIT, get_settings
from aggparadox.errors import IssueCountTooLargeError
from aggparadox.logic.formula import (
    And,
    Bottom,
    Formula,
    Iff,
    Implies,
    Node,
    Not,
    Or,
    Top,
    Var,
    disjoin,
    literal,
)
from aggparadox.models.schemas import Ballot, Clause, PartialAssignment

logger = logging.getLogger(__name__)


def check_enumerable(count: int) -> None:
    limit = min(get_settings().max_issues, HARD_ISSUE_LIMIT)
    if count > limit:
        raise IssueCountTooLargeError(count, limit)


@lru_cache(maxsize=32)
def assignment_matrix(count: int) -> np.ndarray:
    """All 2^m ballots as a (2^m, m) boolean matrix in lexicographic order"""
    codes = np.arange(1 << count, dtype=np.int64)
    shifts = np.arange(count - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts) & 1).astype(bool)


def code_weights(count: int) -> np.ndarray:
    return np.array([1 << (count - 1 - j) for j in range(count)], dtype=np.int64)


def _evaluate_columns(node: Node, columns: np.ndarray) -> np.ndarray:
    rows = columns.shape[0]
    if isinstance(node, Var):
        return columns[:, node.index]
    if isinstance(node, Top):
        return np.ones(rows, dtype=bool)
    if isinstance(node, Bottom):
        return np.zeros(rows, dtype=bool)
    if isinstance(node, Not):
        return ~_evaluate_columns(node.operand, columns)
    left = _evaluate_columns(node.left, columns)
    right = _evaluate_columns(node.right, columns)
    if isinstance(node, And):
        return left & right
    if isinstance(node, Or):
        return left | right
    if isinstance(node, Implies):
        return ~left | right
    if isinstance(node, Iff):
        return left == right
    raise TypeError(f"Unsupported node type: {type(node)}")


@lru_cache(maxsize=512)
def truth_table(f: Formula) -> np.ndarray:
    """Boolean vector indexed by ballot code; read-only"""
    check_enumerable(f.count)
    table = _evaluate_columns(f.root, assignment_matrix(f.count))
    table = np.array(table, dtype=bool)
    table.setflags(write=False)
    logger.debug("truth table over %d issues: %d models", f.count, int(table.sum()))
    return table


def model_codes(f: Formula) -> np.ndarray:
    return np.flatnonzero(truth_table(f)).astype(np.int64)


def models(f: Formula) -> List[Ballot]:
    """Mod(f) in lexicographic order"""
    return [Ballot.from_code(int(code), f.count) for code in model_codes(f)]


def is_satisfiable(f: Formula) -> bool:
    return bool(truth_table(f).any())


def is_tautology(f: Formula) -> bool:
    return bool(truth_table(f).all())


def entails(f: Formula, g: Formula) -> bool:
    f.same_issues(g)
    return not bool(np.any(truth_table(f) & ~truth_table(g)))


def equivalent(f: Formula, g: Formula) -> bool:
    f.same_issues(g)
    return bool(np.array_equal(truth_table(f), truth_table(g)))


def extensions(f: Formula, rho: PartialAssignment) -> List[Ballot]:
    """Models of f that agree with rho, lexicographic"""
    codes = model_codes(f)
    mask, value = rho.masks(f.count)
    return [Ballot.from_code(int(c), f.count) for c in codes[(codes & mask) == value]]


def first_extension(f: Formula, rho: PartialAssignment) -> Optional[Ballot]:
    codes = model_codes(f)
    mask, value = rho.masks(f.count)
    matching = codes[(codes & mask) == value]
    if matching.size == 0:
        return None
    return Ballot.from_code(int(matching[0]), f.count)


def is_extendable(f: Formula, rho: PartialAssignment) -> bool:
    codes = model_codes(f)
    mask, value = rho.masks(f.count)
    return bool(np.any((codes & mask) == value))


def is_mifap(f: Formula, rho: PartialAssignment) -> bool:
    """Unextendable, while every restriction by one binding is extendable"""
    if is_extendable(f, rho):
        return False
    return all(is_extendable(f, rho.without(i)) for i in rho.domain)


@lru_cache(maxsize=256)
def _mifap_tuple(f: Formula) -> tuple:
    count = f.count
    check_enumerable(count)
    codes = model_codes(f)
    if codes.size == 0:
        # the empty assignment already has no extension
        return (PartialAssignment(),)

    found: List[PartialAssignment] = []
    previous: Dict[int, Set[int]] = {0: {0}}
    for size in range(1, count + 1):
        current: Dict[int, Set[int]] = {}
        for chosen in combinations(range(count), size):
            bits = [1 << (count - 1 - i) for i in chosen]
            mask = sum(bits)
            extendable = set(np.unique(codes & mask).tolist())
            current[mask] = extendable
            if len(extendable) == 1 << size:
                continue
            # candidates grow from extendable values on the other issues
            head, rest = bits[0], bits[1:]
            for base in previous[mask & ~head]:
                for value in (base, base | head):
                    if value in extendable:
                        continue
                    if all((value & ~bit) in previous[mask & ~bit] for bit in rest):
                        bindings = tuple((i, 1 if value & bit else 0) for i, bit in zip(chosen, bits))
                        found.append(PartialAssignment(bindings=bindings))
        previous = current
    found.sort(key=lambda rho: rho.sort_key)
    logger.debug("%d mifap-assignments over %d issues", len(found), count)
    return tuple(found)


def mifap_assignments(f: Formula) -> List[PartialAssignment]:
    """Minimally falsifying partial assignments, ordered by (size, bindings).

    Candidates are enumerated by increasing domain size; a candidate is kept
    when no model extends it but every one-binding restriction has one.
    """
    return list(_mifap_tuple(f))


def prime_implicates(f: Formula) -> List[Clause]:
    """Minimal entailed clauses, ordered by (size, literals).

    Tautologies have none; unsatisfiable formulas have only the empty clause.
    """
    clauses = [rho.negation() for rho in _mifap_tuple(f)]
    clauses.sort(key=lambda c: c.sort_key)
    return clauses


def max_prime_implicate_size(f: Formula) -> int:
    return max((c.size for c in prime_implicates(f)), default=0)


def first_violated_clause(f: Formula, ballot: Ballot) -> Optional[Clause]:
    """Smallest prime implicate falsified by the ballot"""
    for clause in prime_implicates(f):
        if clause.falsified_by(ballot):
            return clause
    return None


def clause_formula(clause: Clause, f: Formula) -> Formula:
    return Formula(disjoin(literal(i, pos) for i, pos in clause.literals), f.issues)
