"""Exception hierarchy shared by every aggparadox module."""
from typing import List, Optional


class AggregationError(ValueError):
    """Base class for all domain errors raised by aggparadox"""


class ConfigurationError(AggregationError):
    pass


class InputFileError(AggregationError):
    """Malformed formula, profile or agenda file"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path:
            location = f"{path}:"
        if line is not None:
            location += f"{line}:"
        super().__init__(f"{location} {message}" if location else message)


class FormulaSyntaxError(AggregationError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"syntax error at line {line}, column {column}: {message}")


class UnknownIdentifierError(AggregationError):
    def __init__(self, name: str, line: int = 1, column: int = 1):
        self.name = name
        self.line = line
        self.column = column
        super().__init__(f"unknown identifier '{name}' at line {line}, column {column}")


class IssueCountTooLargeError(AggregationError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} issues exceed the enumeration limit of {limit}")


class IssueSetMismatchError(AggregationError):
    pass


class LengthMismatchError(AggregationError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"ballot has {actual} bits, expected {expected}")


class EmptyAssignmentError(AggregationError):
    pass


class EvenVoterCountError(AggregationError):
    def __init__(self, voters: int):
        self.voters = voters
        super().__init__(
            f"majority rule needs an odd number of voters, got {voters}"
        )


class TooFewVotersError(AggregationError):
    def __init__(self, voters: int, minimum: int = 3):
        self.voters = voters
        self.minimum = minimum
        super().__init__(f"at least {minimum} voters are needed, got {voters}")


class IrrationalIndividualError(AggregationError):
    """Some voter's ballot violates the integrity constraint"""

    def __init__(self, voters: List[int]):
        self.voters = list(voters)
        listed = ", ".join(str(v) for v in self.voters)
        super().__init__(f"irrational individual ballots from voter(s) {listed}")


class BudgetExceededError(AggregationError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"brute force needs {required} profiles, budget is {budget}"
        )


class SafeConstraintError(AggregationError):
    def __init__(self, message: str = "constraint is majority-safe"):
        super().__init__(message)


class WitnessConstructionError(AggregationError):
    pass


class TooManyAlternativesError(AggregationError):
    def __init__(self, count: int, limit: int = 5):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} alternatives given, between 2 and {limit} are supported")


class AgendaTooLargeError(AggregationError):
    def __init__(self, count: int, limit: int = 16):
        self.count = count
        self.limit = limit
        super().__init__(f"agenda has {count} entries, limit is {limit}")


class InvalidAgendaError(AggregationError):
    pass


class EvenIssueCountError(AggregationError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"issue-majority needs an odd number of issues (at least 3), got {count}")


class EmptyProfileError(AggregationError):
    pass


class UnknownScenarioError(AggregationError):
    def __init__(self, name: str, known: List[str]):
        self.name = name
        super().__init__(f"unknown scenario '{name}', choose one of: {', '.join(known)}")
