"""Party contests decided issue by issue (the Ostrogorski setting).

Issues are the k policy questions plus ``A``, the vote for the first party.
A voter supports the first party exactly when agreeing with it on a
majority of the policy issues.
"""
from itertools import combinations
from typing import Optional, Sequence, Tuple

from aggparadox.errors import EvenIssueCountError, LengthMismatchError
from aggparadox.logic.formula import Formula, Iff, Var, conjoin, disjoin
from aggparadox.logic.semantics import check_enumerable
from aggparadox.models.schemas import IssueSet

PARTY_ISSUE = "A"
DEFAULT_POLICY_ISSUES = ("E", "S", "F")


def ostrogorski_issues(k: int = 3, issue_names: Optional[Sequence[str]] = None) -> IssueSet:
    if k < 3 or k % 2 == 0:
        raise EvenIssueCountError(k)
    if issue_names is None:
        issue_names = DEFAULT_POLICY_ISSUES if k == 3 else tuple(f"q{i}" for i in range(1, k + 1))
    if len(issue_names) != k:
        raise LengthMismatchError(k, len(issue_names))
    check_enumerable(k + 1)
    return IssueSet(names=tuple(issue_names) + (PARTY_ISSUE,))


def encode_ostrogorski(
    k: int = 3, issue_names: Optional[Sequence[str]] = None
) -> Tuple[IssueSet, Formula]:
    """IC_O generalised to k policy issues: A <-> some majority of them"""
    issues = ostrogorski_issues(k, issue_names)
    quorum = (k + 1) // 2
    majority_node = disjoin(
        conjoin(Var(i) for i in chosen) for chosen in combinations(range(k), quorum)
    )
    return issues, Formula(Iff(Var(k), majority_node), issues)
