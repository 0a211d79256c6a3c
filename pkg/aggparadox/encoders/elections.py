from itertools import combinations
from typing import Iterable, Optional

from aggparadox.errors import EmptyProfileError
from aggparadox.logic.formula import And, Formula, Not, Var, conjoin, from_models
from aggparadox.models.schemas import Ballot, IssueSet, Profile

DIVIDED_GOVERNMENT_ISSUES = IssueSet.of("H", "S", "G")


def models_constraint(issues: IssueSet, ballots: Iterable[Ballot]) -> Formula:
    """Constraint whose models are exactly the given ballots"""
    ballots = list(ballots)
    if not ballots:
        raise EmptyProfileError("cannot build a constraint from an empty profile")
    return from_models(issues, ballots)


def ballot_disjunction_constraint(profile: Profile) -> Formula:
    """Disjunction of the ballots submitted; forces the outcome to be one of them"""
    return models_constraint(profile.issues, profile.ballots)


def divided_government_constraint(issues: IssueSet = DIVIDED_GOVERNMENT_ISSUES) -> Formula:
    """~(H & ~S & ~G): the house alone in the hands of the R party is ruled out"""
    house, senate, governor = Var(0), Var(1), Var(2)
    return Formula(Not(And(And(house, Not(senate)), Not(governor))), issues)


def budget_constraint(issues: IssueSet, limit: Optional[int] = None) -> Formula:
    """At most ``limit`` issues accepted (default: all but one)"""
    limit = issues.count - 1 if limit is None else limit
    if not 0 <= limit < issues.count:
        raise ValueError(f"budget must lie between 0 and {issues.count - 1}, got {limit}")
    return Formula.from_conjuncts(
        issues,
        [Not(conjoin(Var(i) for i in chosen)) for chosen in combinations(range(issues.count), limit + 1)],
    )
