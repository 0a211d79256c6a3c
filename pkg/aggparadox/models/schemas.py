import re
from enum import Enum, IntEnum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
RESERVED_NAMES = ("TRUE", "FALSE")

Literal = Tuple[int, bool]  # (issue index, positive?)
Binding = Tuple[int, int]  # (issue index, bit)


class IssueSet(BaseModel):
    """Ordered, named binary issues (the propositional variables)"""
    model_config = ConfigDict(frozen=True)

    names: Tuple[str, ...]

    @field_validator("names")
    @classmethod
    def _check_names(cls, names: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(names) < 1:
            raise ValueError("an issue set needs at least one issue")
        for name in names:
            if not IDENTIFIER.match(name):
                raise ValueError(f"invalid issue name '{name}'")
            if name in RESERVED_NAMES:
                raise ValueError(f"'{name}' is a constant and cannot name an issue")
        if len(set(names)) != len(names):
            raise ValueError("issue names must be unique")
        return names

    @classmethod
    def default(cls, count: int) -> "IssueSet":
        return cls(names=tuple(f"p{i}" for i in range(1, count + 1)))

    @classmethod
    def of(cls, *names: str) -> "IssueSet":
        return cls(names=tuple(names))

    @property
    def count(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.names)


class Ballot(BaseModel):
    """One voter's yes/no vector over the issues"""
    model_config = ConfigDict(frozen=True)

    bits: Tuple[int, ...]

    @field_validator("bits")
    @classmethod
    def _check_bits(cls, bits: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(b not in (0, 1) for b in bits):
            raise ValueError("ballot bits must be 0 or 1")
        return bits

    @classmethod
    def of(cls, *bits: int) -> "Ballot":
        return cls(bits=tuple(bits))

    @classmethod
    def from_code(cls, code: int, length: int) -> "Ballot":
        """Decode an integer whose most significant bit is issue 0"""
        return cls(bits=tuple((code >> (length - 1 - j)) & 1 for j in range(length)))

    def to_code(self) -> int:
        code = 0
        for bit in self.bits:
            code = (code << 1) | bit
        return code

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __str__(self) -> str:
        return " ".join(str(b) for b in self.bits)


class Clause(BaseModel):
    """Disjunction of literals; the empty clause is falsum"""
    model_config = ConfigDict(frozen=True)

    literals: Tuple[Literal, ...] = ()

    @field_validator("literals", mode="before")
    @classmethod
    def _canonical(cls, literals: Any) -> Tuple[Literal, ...]:
        canonical = tuple(sorted({(int(i), bool(pos)) for i, pos in literals}))
        indices = [i for i, _ in canonical]
        if len(set(indices)) != len(indices):
            raise ValueError("a clause may not contain an issue with both polarities")
        if any(i < 0 for i in indices):
            raise ValueError("literal index must be non-negative")
        return canonical

    @property
    def size(self) -> int:
        return len(self.literals)

    @property
    def sort_key(self) -> Tuple[int, Tuple[Literal, ...]]:
        return (self.size, self.literals)

    def falsified_by(self, ballot: Ballot) -> bool:
        return all(ballot.bits[i] != int(pos) for i, pos in self.literals)

    def negation(self) -> "PartialAssignment":
        """The partial assignment making every literal false"""
        return PartialAssignment(bindings=tuple((i, 0 if pos else 1) for i, pos in self.literals))

    def render(self, issues: IssueSet) -> str:
        if not self.literals:
            return "FALSE"
        return " | ".join(
            issues.names[i] if pos else f"~{issues.names[i]}" for i, pos in self.literals
        )


class PartialAssignment(BaseModel):
    """Bits fixed on a subset of the issues"""
    model_config = ConfigDict(frozen=True)

    bindings: Tuple[Binding, ...] = ()

    @field_validator("bindings", mode="before")
    @classmethod
    def _canonical(cls, bindings: Any) -> Tuple[Binding, ...]:
        if isinstance(bindings, Mapping):
            bindings = bindings.items()
        canonical = tuple(sorted((int(i), int(v)) for i, v in bindings))
        indices = [i for i, _ in canonical]
        if len(set(indices)) != len(indices):
            raise ValueError("an issue may be bound at most once")
        if any(v not in (0, 1) for _, v in canonical):
            raise ValueError("bound values must be 0 or 1")
        return canonical

    @property
    def size(self) -> int:
        return len(self.bindings)

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.bindings)

    @property
    def mapping(self) -> Dict[int, int]:
        return dict(self.bindings)

    @property
    def sort_key(self) -> Tuple[int, Tuple[Binding, ...]]:
        return (self.size, self.bindings)

    def with_binding(self, index: int, value: int) -> "PartialAssignment":
        updated = self.mapping
        updated[index] = value
        return PartialAssignment(bindings=updated)

    def without(self, index: int) -> "PartialAssignment":
        return PartialAssignment(bindings=tuple(b for b in self.bindings if b[0] != index))

    def agrees_with(self, ballot: Ballot) -> bool:
        return all(ballot.bits[i] == v for i, v in self.bindings)

    def negation(self) -> Clause:
        """The clause C such that a ballot falsifies C iff it extends this assignment"""
        return Clause(literals=tuple((i, v == 0) for i, v in self.bindings))

    def masks(self, length: int) -> Tuple[int, int]:
        """(mask, value) over ballot codes of the given length"""
        mask = value = 0
        for i, v in self.bindings:
            mask |= 1 << (length - 1 - i)
            value |= v << (length - 1 - i)
        return mask, value

    def render(self, issues: IssueSet) -> str:
        inner = ", ".join(f"{issues.names[i]}: {v}" for i, v in self.bindings)
        return "{" + inner + "}"


class Profile(BaseModel):
    """One ballot per voter over a shared issue set"""
    model_config = ConfigDict(frozen=True)

    issues: IssueSet
    ballots: Tuple[Ballot, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "Profile":
        if not self.ballots:
            raise ValueError("a profile needs at least one voter")
        for ballot in self.ballots:
            if len(ballot) != self.issues.count:
                raise ValueError(
                    f"ballot '{ballot}' has {len(ballot)} bits, expected {self.issues.count}"
                )
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], issues: Optional[IssueSet] = None) -> "Profile":
        if not rows:
            raise ValueError("a profile needs at least one voter")
        if issues is None:
            issues = IssueSet.default(len(rows[0]))
        return cls(issues=issues, ballots=tuple(Ballot(bits=tuple(r)) for r in rows))

    @property
    def voters(self) -> int:
        return len(self.ballots)

    def rows(self) -> List[Tuple[int, ...]]:
        return [b.bits for b in self.ballots]


class AlternativeSet(BaseModel):
    """Alternatives of a preference aggregation problem"""
    model_config = ConfigDict(frozen=True)

    names: Tuple[str, ...]

    @field_validator("names")
    @classmethod
    def _check_names(cls, names: Tuple[str, ...]) -> Tuple[str, ...]:
        if len(names) < 2:
            raise ValueError("at least two alternatives are needed")
        if any(not n for n in names):
            raise ValueError("alternative labels must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError("alternative labels must be distinct")
        for name in names:
            if not re.match(r"^[A-Za-z0-9_]+$", name):
                raise ValueError(f"alternative label '{name}' must be alphanumeric")
        return names

    @property
    def count(self) -> int:
        return len(self.names)


# Command line models

class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    BUDGET = 3
    PARADOX = 10
    SAFE_NO_WITNESS = 11
    IRRATIONAL = 12


class CommandConfig(BaseModel):
    """Options shared by all subcommands"""
    subcommand: str
    inputs: List[str] = []
    voters: int = Field(default=3, ge=1)
    output_format: OutputFormat = OutputFormat.TEXT
    output: Optional[str] = None
    budget: Optional[int] = Field(default=None, ge=1)
    requires_majority: bool = False

    @model_validator(mode="after")
    def _odd_voters(self) -> "CommandConfig":
        if self.requires_majority and self.voters % 2 == 0:
            raise ValueError(f"--voters must be odd, got {self.voters}")
        return self


class CommandResult(BaseModel):
    """Result of one CLI command, rendered as text or JSON"""
    exit_code: ExitCode = ExitCode.OK
    text: str = ""
    payload: Optional[Any] = None


# Report payloads (JSON schemas, field order is part of the contract)

class WitnessPayload(BaseModel):
    voters: List[List[int]]
    outcome: List[int]
    violated: str


class SafetyReport(BaseModel):
    formula: str
    safe: bool
    max_clause_size: int
    prime_implicates: List[str]
    mifap: Optional[Dict[str, int]] = None
    witness: Optional[WitnessPayload] = None


class ParadoxReport(BaseModel):
    formula: str
    voters: List[List[int]]
    outcome: Optional[List[int]] = None
    paradox: bool = False
    violated: Optional[str] = None
    irrational_voters: List[int] = []


class BruteForceReport(BaseModel):
    formula: str
    voters: int
    rule: str
    profiles_checked: Optional[int] = None
    safe: bool
    witness: Optional[WitnessPayload] = None


class DemoReport(BaseModel):
    scenario: str
    title: str
    issues: List[str]
    columns: List[str]
    constraint: str
    voters: List[List[int]]
    outcome: List[int]
    paradox: bool
    violated: Optional[str] = None
    max_clause_size: int


class EncodingReport(BaseModel):
    kind: str
    issues: List[str]
    conjuncts: List[str]
    issue_map: Dict[str, str]


class MiSetReport(BaseModel):
    entries: List[str]
    mi_sets: List[List[str]]
    median_property: bool
