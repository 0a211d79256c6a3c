"""Majority safety of integrity constraints.

Majority is collectively rational for a constraint exactly when the
constraint is equivalent to a conjunction of clauses with at most two
literals. Unsafe constraints get an explicit paradox built from a
minimally falsifying partial assignment with at least three bindings.
"""
import logging

from aggparadox.aggregation.paradox import check_paradox
from aggparadox.aggregation.rules import MAJORITY
from aggparadox.errors import (
    EvenVoterCountError,
    SafeConstraintError,
    TooFewVotersError,
    WitnessConstructionError,
)
from aggparadox.logic.formula import Formula
from aggparadox.logic.semantics import first_extension, mifap_assignments, prime_implicates
from aggparadox.models.domain import ParadoxWitness, SafetyVerdict
from aggparadox.models.schemas import Profile

logger = logging.getLogger(__name__)


def classify(ic: Formula) -> SafetyVerdict:
    clauses = prime_implicates(ic)
    max_size = max((c.size for c in clauses), default=0)
    critical = None
    if max_size > 2:
        critical = next(rho for rho in mifap_assignments(ic) if rho.size >= 3)
    verdict = SafetyVerdict(
        formula=ic,
        safe=max_size <= 2,
        max_clause_size=max_size,
        prime_implicates=tuple(clauses),
        critical_assignment=critical,
    )
    logger.info("%s: %s (max clause size %d)", ic, "safe" if verdict.safe else "unsafe", max_size)
    return verdict


def construct_paradox(ic: Formula, voters: int = 3) -> ParadoxWitness:
    """Build a majority paradox for an unsafe constraint.

    Three base ballots each flip rho* on one of its first three bound issues
    and extend to the lexicographically first model; voter k copies base
    ballot k mod 3.
    """
    if voters % 2 == 0:
        raise EvenVoterCountError(voters)
    if voters < 3:
        raise TooFewVotersError(voters)
    verdict = classify(ic)
    if verdict.safe:
        raise SafeConstraintError()

    rho = verdict.critical_assignment
    values = rho.mapping
    base = []
    for issue in rho.domain[:3]:
        flipped = rho.with_binding(issue, 1 - values[issue])
        ballot = first_extension(ic, flipped)
        if ballot is None:
            raise WitnessConstructionError(
                f"no model extends {flipped.render(ic.issues)}; {rho.render(ic.issues)} is not minimal"
            )
        base.append(ballot)

    profile = Profile(issues=ic.issues, ballots=tuple(base[v % 3] for v in range(voters)))
    witness = check_paradox(MAJORITY, profile, ic)
    if witness is None or not rho.agrees_with(witness.outcome):
        raise WitnessConstructionError("majority outcome does not reproduce the critical assignment")
    return witness
