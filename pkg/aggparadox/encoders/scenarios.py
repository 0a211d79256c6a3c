"""The classical paradoxes as ready-made aggregation instances.

Voter order and ballots are fixed, so each table always prints in the same row order.
"""
from typing import Callable, Dict, List

from aggparadox.encoders.elections import (
    DIVIDED_GOVERNMENT_ISSUES,
    budget_constraint,
    divided_government_constraint,
)
from aggparadox.encoders.judgment import build_agenda, encode_agenda, judgment_profile
from aggparadox.encoders.ostrogorski import encode_ostrogorski
from aggparadox.encoders.preferences import encode_preferences, pair_name, ranking_to_ballot
from aggparadox.errors import UnknownScenarioError
from aggparadox.logic.formula import And, Formula, Var
from aggparadox.models.domain import Scenario
from aggparadox.models.schemas import AlternativeSet, IssueSet, Profile


def condorcet() -> Scenario:
    x = AlternativeSet(names=("a", "b", "c"))
    issues, ic = encode_preferences(x)
    rankings = [("a", "b", "c"), ("c", "a", "b"), ("b", "c", "a")]
    profile = Profile(issues=issues, ballots=tuple(ranking_to_ballot(x, r) for r in rankings))
    return Scenario(
        name="condorcet",
        title="The Condorcet paradox in binary aggregation",
        issues=issues,
        constraint=ic,
        profile=profile,
        columns=(pair_name(x, "a", "b"), pair_name(x, "b", "c"), pair_name(x, "a", "c")),
        notes={"alternatives": "a = triangle, b = circle, c = square"},
    )


def discursive() -> Scenario:
    base = IssueSet.of("a", "b")
    agenda = build_agenda(
        base,
        [
            ("a", Formula(Var(0), base)),
            ("b", Formula(Var(1), base)),
            ("ab", Formula(And(Var(0), Var(1)), base)),
        ],
    )
    issues, ic = encode_agenda(agenda)
    profile = judgment_profile(agenda, [(1, 1, 1), (0, 1, 0), (1, 0, 0)])
    return Scenario(
        name="discursive",
        title="The discursive dilemma in binary aggregation",
        issues=issues,
        constraint=ic,
        profile=profile,
        columns=("p_a", "p_b", "p_ab"),
        voter_label="Judge",
        notes={"agenda": "a, b, a & b and their negations"},
    )


def _ostrogorski(name: str, title: str, rows: List[tuple]) -> Scenario:
    issues, ic = encode_ostrogorski(3)
    return Scenario(
        name=name,
        title=title,
        issues=issues,
        constraint=ic,
        profile=Profile.from_rows(rows, issues),
        columns=issues.names,
        notes={"A": "vote for the first party"},
    )


def ostrogorski() -> Scenario:
    return _ostrogorski(
        "ostrogorski",
        "The Ostrogorski paradox in binary aggregation",
        [(1, 0, 0, 0), (0, 0, 1, 0), (1, 0, 1, 1)],
    )


def ostrogorski_strict() -> Scenario:
    return _ostrogorski(
        "ostrogorski-strict",
        "Strict version of the Ostrogorski paradox",
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 1), (1, 1, 1, 1)],
    )


def divided_government() -> Scenario:
    grouped = [
        (3, (0, 0, 0)),
        (1, (0, 0, 1)),
        (1, (0, 1, 0)),
        (1, (0, 1, 1)),
        (3, (1, 0, 1)),
        (3, (1, 1, 0)),
        (1, (1, 1, 1)),
    ]
    rows = [row for times, row in grouped for _ in range(times)]
    issues = DIVIDED_GOVERNMENT_ISSUES
    return Scenario(
        name="divided-government",
        title="Divided government",
        issues=issues,
        constraint=divided_government_constraint(issues),
        profile=Profile.from_rows(rows, issues),
        columns=issues.names,
        symbols=("D", "R"),
        notes={"H": "House", "S": "Senate", "G": "Governor"},
    )


def mep() -> Scenario:
    issues = IssueSet.of("A", "B", "C")
    return Scenario(
        name="mep",
        title="The paradox of multiple elections",
        issues=issues,
        constraint=budget_constraint(issues),
        profile=Profile.from_rows([(1, 0, 1), (0, 1, 1), (1, 1, 0)], issues),
        columns=issues.names,
    )


SCENARIOS: Dict[str, Callable[[], Scenario]] = {
    "condorcet": condorcet,
    "discursive": discursive,
    "ostrogorski": ostrogorski,
    "ostrogorski-strict": ostrogorski_strict,
    "divided-government": divided_government,
    "mep": mep,
}


def builtin_scenario(name: str) -> Scenario:
    try:
        builder = SCENARIOS[name]
    except KeyError:
        raise UnknownScenarioError(name, list(SCENARIOS)) from None
    return builder()
