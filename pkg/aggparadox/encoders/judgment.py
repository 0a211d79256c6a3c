"""Judgment aggregation as binary aggregation.

An agenda of named formulas becomes one issue per entry; the constraint
demands one entry of every complementary pair and forbids accepting all the
members of any minimally inconsistent subset.
"""
import logging
from itertools import combinations
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from aggparadox.errors import (
    AgendaTooLargeError,
    FormulaSyntaxError,
    InputFileError,
    InvalidAgendaError,
    LengthMismatchError,
    UnknownIdentifierError,
)
from aggparadox.logic.formula import Formula, Node, Not, Or, Var, conjoin
from aggparadox.logic.parser import FormulaParser, parse_issue_header
from aggparadox.logic.semantics import check_enumerable, truth_table
from aggparadox.models.domain import Agenda, AgendaEntry
from aggparadox.models.schemas import IDENTIFIER, Ballot, IssueSet, Profile

logger = logging.getLogger(__name__)

MAX_AGENDA_ENTRIES = 16


def complement(node: Node) -> Node:
    """Negation that never produces a double negation"""
    return node.operand if isinstance(node, Not) else Not(node)


def build_agenda(base: IssueSet, items: Sequence[Tuple[str, Formula]]) -> Agenda:
    """Close (name, formula) items under complementation.

    An item whose complement is also listed is paired with it; every other
    item gets a generated complement named ``not_<name>``.
    """
    if not items:
        raise InvalidAgendaError("agenda lists no entries")
    for name, formula in items:
        root = formula.root
        if isinstance(root, Not) and isinstance(root.operand, Not):
            raise InvalidAgendaError(f"entry '{name}' is doubly negated")
        if formula.issues != base:
            raise InvalidAgendaError(f"entry '{name}' ranges over other variables")

    used = set()
    entries: List[AgendaEntry] = []
    for k, (name, formula) in enumerate(items):
        if k in used:
            continue
        used.add(k)
        target = complement(formula.root)
        partner = next(
            (j for j in range(k + 1, len(items)) if j not in used and items[j][1].root == target),
            None,
        )
        entries.append(AgendaEntry(name=name, formula=formula, primary=True))
        if partner is not None:
            used.add(partner)
            other_name, other = items[partner]
            entries.append(AgendaEntry(name=other_name, formula=other, primary=False))
        else:
            entries.append(
                AgendaEntry(name=f"not_{name}", formula=Formula(target, base), primary=False)
            )

    try:
        return Agenda(base_variables=base, entries=tuple(entries))
    except ValueError as e:
        raise InvalidAgendaError(str(e)) from e


def parse_agenda(text: str, path: Optional[str] = None) -> Agenda:
    """Header `vars: ...`, then one `name: formula` entry per line"""
    base = None
    parser = None
    items = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if base is None:
            try:
                base = parse_issue_header(content, keyword="vars")
            except InputFileError as e:
                raise InputFileError(str(e).split(": ", 1)[-1].strip(), path=path, line=number) from e
            parser = FormulaParser(base)
            continue
        name, sep, body = content.partition(":")
        name = name.strip()
        if not sep or not IDENTIFIER.match(name):
            raise InputFileError(f"expected 'name: formula', got '{content}'", path=path, line=number)
        offset = raw.index(":") + 1
        try:
            formula = parser.parse(body)
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(str(e).split(": ", 1)[-1], number, e.column + offset) from e
        except UnknownIdentifierError as e:
            raise UnknownIdentifierError(e.name, number, e.column + offset) from e
        items.append((name, formula))
    if base is None:
        raise InputFileError("missing 'vars:' header", path=path)
    if not items:
        raise InputFileError("agenda lists no entries", path=path)
    return build_agenda(base, items)


def read_agenda(path: Union[str, Path]) -> Agenda:
    return parse_agenda(Path(path).read_text(encoding="utf-8"), path=str(path))


def _check_size(agenda: Agenda) -> None:
    if len(agenda.entries) > MAX_AGENDA_ENTRIES:
        raise AgendaTooLargeError(len(agenda.entries), MAX_AGENDA_ENTRIES)
    check_enumerable(agenda.base_variables.count)


def _entry_tables(agenda: Agenda) -> np.ndarray:
    return np.vstack([truth_table(e.formula) for e in agenda.entries])


def mi_sets(agenda: Agenda) -> List[List[str]]:
    """Minimally inconsistent subsets of the agenda, by size then entry order"""
    _check_size(agenda)
    tables = _entry_tables(agenda)
    names = agenda.names
    found: List[frozenset] = []
    for size in range(1, len(names) + 1):
        for chosen in combinations(range(len(names)), size):
            members = frozenset(chosen)
            if any(s <= members for s in found):
                continue
            if not np.logical_and.reduce(tables[list(chosen)], axis=0).any():
                found.append(members)
    logger.debug("%d mi-sets among %d agenda entries", len(found), len(names))
    return [[names[i] for i in sorted(s)] for s in found]


def agenda_issues(agenda: Agenda) -> IssueSet:
    return IssueSet(names=tuple(f"p_{name}" for name in agenda.names))


def encode_agenda(agenda: Agenda) -> Tuple[IssueSet, Formula]:
    """IC_Phi: completeness per complementary pair, then consistency per mi-set"""
    issues = agenda_issues(agenda)
    parts: List[Node] = []
    for first, second in agenda.pairs:
        parts.append(Or(Var(agenda.index(first.name)), Var(agenda.index(second.name))))
    for members in mi_sets(agenda):
        parts.append(Not(conjoin(Var(agenda.index(name)) for name in members)))
    return issues, Formula.from_conjuncts(issues, parts)


def judgment_profile(agenda: Agenda, rows: Sequence[Sequence[int]]) -> Profile:
    """Expand rows listing one bit per primary entry into full ballots"""
    issues = agenda_issues(agenda)
    ballots = []
    for row in rows:
        if len(row) != len(agenda.pairs):
            raise LengthMismatchError(len(agenda.pairs), len(row))
        bits = []
        for bit in row:
            bits.extend((bit, 1 - bit))
        ballots.append(Ballot(bits=tuple(bits)))
    return Profile(issues=issues, ballots=tuple(ballots))


def judgment_sets(agenda: Agenda) -> List[Ballot]:
    """Complete and consistent judgment sets as ballots, lexicographic"""
    _check_size(agenda)
    tables = _entry_tables(agenda)
    rows = {tuple(int(v) for v in column) for column in tables.T}
    return [Ballot(bits=bits) for bits in sorted(rows)]


def has_median_property(agenda: Agenda) -> bool:
    return all(len(s) <= 2 for s in mi_sets(agenda))
