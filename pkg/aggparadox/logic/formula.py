"""Propositional formulas over a fixed set of issue variables.

Nodes are immutable dataclasses; a ``Formula`` pairs a root node with the
``IssueSet`` its variables index into.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Union

from aggparadox.errors import EmptyAssignmentError, IssueSetMismatchError, LengthMismatchError
from aggparadox.models.schemas import Ballot, IssueSet, PartialAssignment


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    operand: "Node"


@dataclass(frozen=True)
class And:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Or:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Implies:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Iff:
    left: "Node"
    right: "Node"


Node = Union[Top, Bottom, Var, Not, And, Or, Implies, Iff]
Binary = (And, Or, Implies, Iff)

_SYMBOLS = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


def _balanced(op: type, items: Sequence[Node]) -> Node:
    """Balanced op-tree over items; the left half takes the odd item"""
    if len(items) == 1:
        return items[0]
    middle = (len(items) + 1) // 2
    return op(_balanced(op, items[:middle]), _balanced(op, items[middle:]))


def conjoin(nodes: Iterable[Node]) -> Node:
    """Balanced conjunction, so long chains stay shallow; TRUE when empty"""
    items = list(nodes)
    return _balanced(And, items) if items else Top()


def disjoin(nodes: Iterable[Node]) -> Node:
    """Balanced disjunction; FALSE when empty"""
    items = list(nodes)
    return _balanced(Or, items) if items else Bottom()


def _flatten(node: Node, op: type) -> List[Node]:
    """Operands of the maximal op-chain rooted at node, left to right"""
    items, stack = [], [node]
    while stack:
        current = stack.pop()
        if type(current) is op:
            stack.append(current.right)
            stack.append(current.left)
        else:
            items.append(current)
    return items


def conjuncts(node: Node) -> List[Node]:
    """Flatten the top-level conjunction chain"""
    return [item for item in _flatten(node, And) if not isinstance(item, Top)]


def literal(index: int, positive: bool) -> Node:
    return Var(index) if positive else Not(Var(index))


def max_var(node: Node) -> int:
    """Largest variable index in the tree, -1 if none"""
    largest, stack = -1, [node]
    while stack:
        current = stack.pop()
        if isinstance(current, Var):
            largest = max(largest, current.index)
        elif isinstance(current, Not):
            stack.append(current.operand)
        elif isinstance(current, Binary):
            stack.append(current.left)
            stack.append(current.right)
    return largest


def evaluate_node(node: Node, bits: Sequence[int]) -> bool:
    if isinstance(node, Var):
        return bits[node.index] == 1
    if isinstance(node, Top):
        return True
    if isinstance(node, Bottom):
        return False
    if isinstance(node, Not):
        return not evaluate_node(node.operand, bits)
    if isinstance(node, And):
        return evaluate_node(node.left, bits) and evaluate_node(node.right, bits)
    if isinstance(node, Or):
        return evaluate_node(node.left, bits) or evaluate_node(node.right, bits)
    if isinstance(node, Implies):
        return (not evaluate_node(node.left, bits)) or evaluate_node(node.right, bits)
    if isinstance(node, Iff):
        return evaluate_node(node.left, bits) == evaluate_node(node.right, bits)
    raise TypeError(f"Unsupported node type: {type(node)}")


def render(node: Node, names: Sequence[str]) -> str:
    if isinstance(node, Var):
        return names[node.index]
    if isinstance(node, Top):
        return "TRUE"
    if isinstance(node, Bottom):
        return "FALSE"
    if isinstance(node, Not):
        inner = render(node.operand, names)
        return f"~({inner})" if isinstance(node.operand, Binary) else f"~{inner}"

    op = type(node)
    if op in (And, Or):
        # the parser regroups a printed chain into a balanced tree
        items = _flatten(node, op)
        if _balanced(op, items) != node:
            items = [node.left, node.right]
        return f" {_SYMBOLS[op]} ".join(_operand(item, names) for item in items)

    left = render(node.left, names)
    right = render(node.right, names)
    if isinstance(node.left, Binary) and (type(node.left) is not op or op is Implies):
        left = f"({left})"
    if isinstance(node.right, Binary) and (type(node.right) is not op or op is not Implies):
        right = f"({right})"
    return f"{left} {_SYMBOLS[op]} {right}"


def _operand(node: Node, names: Sequence[str]) -> str:
    text = render(node, names)
    return f"({text})" if isinstance(node, Binary) else text


@dataclass(frozen=True)
class Formula:
    """A constraint over an issue set"""
    root: Node
    issues: IssueSet

    def __post_init__(self) -> None:
        if max_var(self.root) >= self.issues.count:
            raise ValueError("variable index out of range for the issue set")

    @classmethod
    def from_conjuncts(cls, issues: IssueSet, nodes: Iterable[Node]) -> "Formula":
        return cls(conjoin(nodes), issues)

    @property
    def count(self) -> int:
        return self.issues.count

    def evaluate(self, ballot: Ballot) -> int:
        if len(ballot) != self.issues.count:
            raise LengthMismatchError(self.issues.count, len(ballot))
        return 1 if evaluate_node(self.root, ballot.bits) else 0

    def conjuncts(self) -> List["Formula"]:
        return [Formula(node, self.issues) for node in conjuncts(self.root)]

    def negated(self) -> "Formula":
        return Formula(Not(self.root), self.issues)

    def pretty(self) -> str:
        return render(self.root, self.issues.names)

    def same_issues(self, other: "Formula") -> None:
        if self.issues != other.issues:
            raise IssueSetMismatchError(
                f"formulas range over different issues: {self.issues.names} vs {other.issues.names}"
            )

    def __str__(self) -> str:
        return self.pretty()


def evaluate(f: Formula, b: Ballot) -> int:
    """1 iff the ballot satisfies the formula"""
    return f.evaluate(b)


def partial_to_conjunction(rho: PartialAssignment, issues: IssueSet) -> Formula:
    """C_rho: the conjunction of the literals fixed by rho"""
    if rho.size == 0:
        raise EmptyAssignmentError("cannot build the conjunction of an empty assignment")
    return Formula(conjoin(literal(i, v == 1) for i, v in rho.bindings), issues)


def ballot_conjunction(bits: Sequence[int]) -> Node:
    return conjoin(literal(i, b == 1) for i, b in enumerate(bits))


def from_models(issues: IssueSet, ballots: Iterable[Ballot]) -> Formula:
    """Disjunction of the full conjunctions of the given ballots (FALSE if none)"""
    distinct = sorted({b.bits for b in ballots})
    for bits in distinct:
        if len(bits) != issues.count:
            raise LengthMismatchError(issues.count, len(bits))
    return Formula(disjoin(ballot_conjunction(bits) for bits in distinct), issues)
