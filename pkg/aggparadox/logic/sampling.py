"""Seeded random instances for property tests and acceptance sweeps."""
import random
from typing import List, Optional

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
    conjoin,
    disjoin,
    from_models,
    literal,
)
from aggparadox.logic.semantics import models
from aggparadox.models.schemas import Ballot, IssueSet, Profile


def boolean_function(issues: IssueSet, table_code: int) -> Formula:
    """Materialise the Boolean function whose truth table is the bits of table_code.

    Bit k (least significant first) is the value on the ballot with code k.
    """
    size = 1 << issues.count
    chosen = [Ballot.from_code(k, issues.count) for k in range(size) if (table_code >> k) & 1]
    return from_models(issues, chosen)


def random_boolean_function(issues: IssueSet, rng: random.Random) -> Formula:
    return boolean_function(issues, rng.getrandbits(1 << issues.count))


def random_node(count: int, rng: random.Random, depth: int = 3) -> Node:
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.05:
            return Top()
        if roll < 0.1:
            return Bottom()
        return Var(rng.randrange(count))
    kind = rng.choice(("not", "and", "or", "implies", "iff"))
    if kind == "not":
        return Not(random_node(count, rng, depth - 1))
    op = {"and": And, "or": Or, "implies": Implies, "iff": Iff}[kind]
    return op(random_node(count, rng, depth - 1), random_node(count, rng, depth - 1))


def random_formula(issues: IssueSet, rng: random.Random, depth: int = 3) -> Formula:
    return Formula(random_node(issues.count, rng, depth), issues)


def random_two_cnf(issues: IssueSet, rng: random.Random, clauses: Optional[int] = None) -> Formula:
    """Random conjunction of clauses with one or two literals"""
    if clauses is None:
        clauses = rng.randint(1, 2 * issues.count)
    parts = []
    for _ in range(clauses):
        width = 1 if issues.count == 1 else rng.choice((1, 2, 2))
        chosen = rng.sample(range(issues.count), width)
        parts.append(disjoin(literal(i, rng.random() < 0.5) for i in chosen))
    return Formula(conjoin(parts), issues)


def random_rational_profile(ic: Formula, voters: int, rng: random.Random) -> Optional[Profile]:
    """Profile of uniformly drawn models of ic; None when ic is unsatisfiable"""
    rational = models(ic)
    if not rational:
        return None
    return Profile(issues=ic.issues, ballots=tuple(rng.choice(rational) for _ in range(voters)))


def random_agenda_formulas(
    base: IssueSet, rng: random.Random, primaries: int = 3, depth: int = 2
) -> List[tuple]:
    """(name, formula) pairs for a random agenda before complementation"""
    seen: List[Node] = []
    result = []
    attempts = 0
    while len(result) < primaries and attempts < 50:
        attempts += 1
        node = random_node(base.count, rng, depth)
        if isinstance(node, (Top, Bottom)) or node in seen or Not(node) in seen:
            continue
        if isinstance(node, Not) and node.operand in seen:
            continue
        if isinstance(node, Not) and isinstance(node.operand, Not):
            continue
        seen.append(node)
        result.append((f"e{len(result) + 1}", Formula(node, base)))
    return result
