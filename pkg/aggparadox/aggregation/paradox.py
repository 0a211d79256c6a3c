import logging
from itertools import combinations_with_replacement, islice
from math import comb
from typing import Callable, List, Optional, Union

import numpy as np

from aggparadox.aggregation.rules import MAJORITY, AggregationRule
from aggparadox.config import get_settings
from aggparadox.errors import BudgetExceededError, IrrationalIndividualError, LengthMismatchError
from aggparadox.logic.formula import Formula
from aggparadox.logic.semantics import code_weights, first_violated_clause, model_codes, truth_table
from aggparadox.models.domain import CertifiedSafe, ParadoxWitness
from aggparadox.models.schemas import Ballot, Profile

logger = logging.getLogger(__name__)

Rule = Union[AggregationRule, Callable[[Profile], Ballot]]


def rule_name(rule: Rule) -> str:
    return getattr(rule, "name", None) or getattr(rule, "__name__", "custom")


def is_rational(ic: Formula, ballot: Ballot) -> bool:
    return ic.evaluate(ballot) == 1


def irrational_voters(ic: Formula, profile: Profile) -> List[int]:
    """1-based indices of voters whose ballot violates ic"""
    return [v for v, b in enumerate(profile.ballots, start=1) if not ic.evaluate(b)]


def check_paradox(rule: Rule, profile: Profile, ic: Formula) -> Optional[ParadoxWitness]:
    """Witness iff every ballot satisfies ic and rule(profile) does not"""
    if profile.issues.count != ic.count:
        raise LengthMismatchError(ic.count, profile.issues.count)
    irrational = irrational_voters(ic, profile)
    if irrational:
        raise IrrationalIndividualError(irrational)
    outcome = rule(profile)
    if ic.evaluate(outcome):
        return None
    violated = first_violated_clause(ic, outcome)
    logger.info("paradox: outcome %s violates %s", outcome, violated.render(ic.issues))
    return ParadoxWitness(
        rule=rule_name(rule),
        profile=profile,
        constraint=ic,
        outcome=outcome,
        violated=violated,
    )


def required_profiles(model_count: int, voters: int, any_witness: bool = False) -> int:
    if any_witness:
        return comb(model_count + voters - 1, voters) if model_count else 0
    return model_count ** voters


def brute_force_cr(
    rule: Rule,
    ic: Formula,
    voters: int,
    budget: Optional[int] = None,
    any_witness: bool = False,
) -> Union[ParadoxWitness, CertifiedSafe]:
    """Check every profile of rational ballots for a paradox.

    Ordered profiles are scanned in lexicographic order of model indices, so
    the witness returned is the first one. With ``any_witness`` only sorted
    profiles (multisets) are scanned, which suffices for anonymous rules.
    """
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    if isinstance(rule, AggregationRule):
        rule.validate_voters(voters)
    elif voters < 1:
        raise ValueError("a profile needs at least one voter")

    codes = model_codes(ic)
    required = required_profiles(codes.size, voters, any_witness)
    if required > budget:
        raise BudgetExceededError(required, budget)
    logger.debug("brute force: %d rational ballots, %d profiles", codes.size, required)

    if codes.size == 0:
        return CertifiedSafe(rule=rule_name(rule), constraint=ic, voters=voters, profiles_checked=0)

    if any_witness:
        batches = _multiset_batches(codes.size, voters, settings.chunk_size)
    else:
        batches = _ordered_batches(codes.size, voters, settings.chunk_size)

    table = truth_table(ic)
    matrix = ((codes[:, None] >> np.arange(ic.count - 1, -1, -1)) & 1).astype(np.int64)
    weights = code_weights(ic.count)
    checked = 0
    for indices in batches:
        if isinstance(rule, AggregationRule):
            outcomes = rule.aggregate_matrix(matrix[indices]).astype(np.int64) @ weights
            bad = ~table[outcomes]
            hit = int(np.argmax(bad)) if bad.any() else None
        else:
            hit = None
            for row, chosen in enumerate(indices):
                profile = _profile(ic, codes, chosen)
                if not ic.evaluate(rule(profile)):
                    hit = row
                    break
        if hit is not None:
            witness = check_paradox(rule, _profile(ic, codes, indices[hit]), ic)
            logger.info("brute force found a witness after %d profiles", checked + hit + 1)
            return witness
        checked += len(indices)
        logger.debug("%d profiles checked", checked)
    return CertifiedSafe(rule=rule_name(rule), constraint=ic, voters=voters, profiles_checked=checked)


def is_collectively_rational(rule: Rule, ic: Formula, voters: int, budget: Optional[int] = None) -> bool:
    return isinstance(brute_force_cr(rule, ic, voters, budget=budget), CertifiedSafe)


def _profile(ic: Formula, codes: np.ndarray, chosen) -> Profile:
    ballots = tuple(Ballot.from_code(int(codes[k]), ic.count) for k in chosen)
    return Profile(issues=ic.issues, ballots=ballots)


def _ordered_batches(model_count: int, voters: int, chunk: int):
    total = model_count ** voters
    powers = np.array([model_count ** (voters - 1 - v) for v in range(voters)], dtype=np.int64)
    for start in range(0, total, chunk):
        numbers = np.arange(start, min(total, start + chunk), dtype=np.int64)
        yield (numbers[:, None] // powers) % model_count


def _multiset_batches(model_count: int, voters: int, chunk: int):
    combos = combinations_with_replacement(range(model_count), voters)
    while True:
        block = list(islice(combos, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)
