"""Preference aggregation as binary aggregation over pairwise issues."""
from enum import Enum
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from aggparadox.errors import TooManyAlternativesError
from aggparadox.logic.formula import And, Formula, Implies, Node, Not, Or, Var
from aggparadox.models.schemas import AlternativeSet, Ballot, IssueSet

MAX_ALTERNATIVES = 5


class OrderKind(str, Enum):
    LINEAR = "linear"
    WEAK = "weak"
    PARTIAL = "partial"


def _check_size(x: AlternativeSet) -> None:
    if not 2 <= x.count <= MAX_ALTERNATIVES:
        raise TooManyAlternativesError(x.count, MAX_ALTERNATIVES)


def pair_name(x: AlternativeSet, a: str, b: str) -> str:
    """p_ab for single-character labels, p_a_b otherwise"""
    if all(len(n) == 1 for n in x.names):
        return f"p_{a}{b}"
    return f"p_{a}_{b}"


def pairs(x: AlternativeSet) -> List[Tuple[str, str]]:
    """Every ordered pair, diagonal included, in row-major order"""
    return [(a, b) for a in x.names for b in x.names]


def preference_issues(x: AlternativeSet) -> IssueSet:
    _check_size(x)
    return IssueSet(names=tuple(pair_name(x, a, b) for a, b in pairs(x)))


def _var(x: AlternativeSet, a: str, b: str) -> Var:
    return Var(x.names.index(a) * x.count + x.names.index(b))


def _irreflexivity(x: AlternativeSet) -> List[Node]:
    return [Not(_var(x, a, a)) for a in x.names]


def _reflexivity(x: AlternativeSet) -> List[Node]:
    return [_var(x, a, a) for a in x.names]


def _completeness(x: AlternativeSet) -> List[Node]:
    names = x.names
    return [
        Or(_var(x, a, b), _var(x, b, a))
        for i, a in enumerate(names)
        for b in names[i + 1:]
    ]


def _antisymmetry(x: AlternativeSet) -> List[Node]:
    names = x.names
    return [
        Or(Not(_var(x, a, b)), Not(_var(x, b, a)))
        for i, a in enumerate(names)
        for b in names[i + 1:]
    ]


def _transitivity(x: AlternativeSet) -> List[Node]:
    return [
        Implies(And(_var(x, a, b), _var(x, b, c)), _var(x, a, c))
        for a, b, c in permutations(x.names, 3)
    ]


def preference_conjuncts(x: AlternativeSet, kind: OrderKind = OrderKind.LINEAR) -> List[Node]:
    kind = OrderKind(kind)
    if kind is OrderKind.LINEAR:
        return _irreflexivity(x) + _completeness(x) + _antisymmetry(x) + _transitivity(x)
    if kind is OrderKind.WEAK:
        return _reflexivity(x) + _completeness(x) + _transitivity(x)
    return _irreflexivity(x) + _antisymmetry(x) + _transitivity(x)


def encode_preferences(
    x: AlternativeSet, kind: OrderKind = OrderKind.LINEAR
) -> Tuple[IssueSet, Formula]:
    """IC_< (linear), its weak-order or partial-order variant"""
    issues = preference_issues(x)
    return issues, Formula.from_conjuncts(issues, preference_conjuncts(x, kind))


def encode_negative_transitivity(x: AlternativeSet) -> Formula:
    issues = preference_issues(x)
    parts = [
        Implies(And(Not(_var(x, a, b)), Not(_var(x, b, c))), Not(_var(x, a, c)))
        for a, b, c in permutations(x.names, 3)
    ]
    return Formula.from_conjuncts(issues, parts)


def ranking_to_ballot(x: AlternativeSet, ranking: Sequence[str]) -> Ballot:
    """Ballot of the linear order listing alternatives best first"""
    if sorted(ranking) != sorted(x.names):
        raise ValueError(f"ranking {list(ranking)} is not a permutation of {list(x.names)}")
    position = {a: k for k, a in enumerate(ranking)}
    return Ballot(bits=tuple(int(position[a] < position[b]) for a, b in pairs(x)))


def ballot_to_relation(x: AlternativeSet, ballot: Ballot) -> Set[Tuple[str, str]]:
    return {pair for pair, bit in zip(pairs(x), ballot.bits) if bit}


def ballot_to_ranking(x: AlternativeSet, ballot: Ballot) -> Optional[List[str]]:
    """Best-first ranking, or None when the relation is not a linear order"""
    relation = ballot_to_relation(x, ballot)
    wins: Dict[str, int] = {a: sum(1 for b in x.names if (a, b) in relation) for a in x.names}
    ranking = sorted(x.names, key=lambda a: -wins[a])
    if ranking_to_ballot(x, ranking) != ballot:
        return None
    return ranking
