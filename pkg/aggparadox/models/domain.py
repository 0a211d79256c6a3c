from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from aggparadox.logic.formula import Formula, Not
from aggparadox.logic.semantics import is_mifap, prime_implicates
from aggparadox.models.schemas import (
    IDENTIFIER,
    Ballot,
    Clause,
    IssueSet,
    PartialAssignment,
    Profile,
    WitnessPayload,
)


class ParadoxWitness(BaseModel):
    """(rule, profile, constraint): every voter rational, outcome not"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rule: str
    profile: Profile
    constraint: Formula
    outcome: Ballot
    violated: Clause

    @model_validator(mode="after")
    def _check_witness(self) -> "ParadoxWitness":
        ic = self.constraint
        if self.profile.issues.count != ic.count:
            raise ValueError("profile and constraint range over different issue counts")
        for voter, ballot in enumerate(self.profile.ballots, start=1):
            if not ic.evaluate(ballot):
                raise ValueError(f"voter {voter} is not rational")
        if ic.evaluate(self.outcome):
            raise ValueError("outcome satisfies the constraint")
        if not self.violated.falsified_by(self.outcome):
            raise ValueError("violated clause is not falsified by the outcome")
        if self.violated not in prime_implicates(ic):
            raise ValueError("violated clause is not a prime implicate of the constraint")
        return self

    def payload(self) -> WitnessPayload:
        return WitnessPayload(
            voters=[list(b.bits) for b in self.profile.ballots],
            outcome=list(self.outcome.bits),
            violated=self.violated.render(self.constraint.issues),
        )


class CertifiedSafe(BaseModel):
    """No paradox exists for this rule, constraint and exact voter count"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rule: str
    constraint: Formula
    voters: int
    profiles_checked: int


class SafetyVerdict(BaseModel):
    """Majority-safety of a constraint, with its certificate"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    formula: Formula
    safe: bool
    max_clause_size: int
    prime_implicates: Tuple[Clause, ...]
    critical_assignment: Optional[PartialAssignment] = None

    @model_validator(mode="after")
    def _check_verdict(self) -> "SafetyVerdict":
        if self.safe != (self.max_clause_size <= 2):
            raise ValueError("safe must hold exactly when every prime implicate has size <= 2")
        if self.safe:
            if self.critical_assignment is not None:
                raise ValueError("a safe verdict carries no critical assignment")
        else:
            rho = self.critical_assignment
            if rho is None or rho.size < 3:
                raise ValueError("an unsafe verdict needs a mifap-assignment of size >= 3")
            if not is_mifap(self.formula, rho):
                raise ValueError("critical assignment is not a mifap-assignment")
        return self

    @property
    def certificate(self):
        return self.prime_implicates if self.safe else self.critical_assignment

    @property
    def is_tautology(self) -> bool:
        return not self.prime_implicates

    @property
    def is_unsatisfiable(self) -> bool:
        return len(self.prime_implicates) == 1 and self.prime_implicates[0].size == 0


class AgendaEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    formula: Formula
    primary: bool = True

    @field_validator("name")
    @classmethod
    def _check_name(cls, name: str) -> str:
        if not IDENTIFIER.match(name):
            raise ValueError(f"invalid agenda entry name '{name}'")
        return name


class Agenda(BaseModel):
    """Complementation-closed set of named formulas over base variables.

    Entries come in pairs: each primary entry is immediately followed by its
    complement.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base_variables: IssueSet
    entries: Tuple[AgendaEntry, ...]

    @model_validator(mode="after")
    def _check_closure(self) -> "Agenda":
        if not self.entries or len(self.entries) % 2:
            raise ValueError("an agenda is a non-empty list of complementary pairs")
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            raise ValueError("agenda entry names must be unique")
        roots = [e.formula.root for e in self.entries]
        if len(set(roots)) != len(roots):
            raise ValueError("agenda entries must be pairwise distinct")
        for entry in self.entries:
            if entry.formula.issues != self.base_variables:
                raise ValueError(f"entry '{entry.name}' ranges over other variables")
            root = entry.formula.root
            if isinstance(root, Not) and isinstance(root.operand, Not):
                raise ValueError(f"entry '{entry.name}' is doubly negated")
        for k in range(0, len(self.entries), 2):
            first, second = self.entries[k], self.entries[k + 1]
            if not _complementary(first.formula, second.formula):
                raise ValueError(f"entries '{first.name}' and '{second.name}' are not complements")
        return self

    @property
    def names(self) -> List[str]:
        return [e.name for e in self.entries]

    @property
    def pairs(self) -> List[Tuple[AgendaEntry, AgendaEntry]]:
        return [(self.entries[k], self.entries[k + 1]) for k in range(0, len(self.entries), 2)]

    def index(self, name: str) -> int:
        return self.names.index(name)


def _complementary(f: Formula, g: Formula) -> bool:
    return g.root == Not(f.root) or f.root == Not(g.root)


class Scenario(BaseModel):
    """A classical paradox as a binary aggregation instance"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    title: str
    issues: IssueSet
    constraint: Formula
    profile: Profile
    columns: Tuple[str, ...]
    voter_label: str = "Voter"
    symbols: Tuple[str, str] = ("0", "1")
    notes: Dict[str, str] = {}
