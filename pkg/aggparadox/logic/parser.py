import re
from pathlib import Path
from typing import Iterable, List, NamedTuple, Optional, Union

from aggparadox.errors import (
    AggregationError,
    FormulaSyntaxError,
    InputFileError,
    UnknownIdentifierError,
)
from aggparadox.logic.formula import (
    Bottom,
    Formula,
    Iff,
    Implies,
    Node,
    Not,
    Top,
    Var,
    conjoin,
    disjoin,
)
from aggparadox.models.schemas import IDENTIFIER, IssueSet

_TOKEN_SPEC = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SPACE", r"[ \t\r\f]+"),
    ("IFF", r"<->"),
    ("IMPLIES", r"->"),
    ("AND", r"&|/\\"),
    ("OR", r"\||\\/"),
    ("NOT", r"~|!"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("MISMATCH", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


class FormulaParser:
    """Recursive-descent parser for the constraint language.

    Precedence from tightest: NOT, AND, OR, IMPLIES, IFF. IMPLIES is
    right-associative and IFF left-associative; an AND or OR chain becomes a
    balanced tree (three operands group to the left).
    """

    def __init__(self, issues: IssueSet):
        self.issues = issues
        self._tokens: List[Token] = []
        self._pos = 0

    def parse(self, text: str) -> Formula:
        self._tokens = self._tokenize(text)
        self._pos = 0
        node = self._iff()
        token = self._peek()
        if token.kind != "EOF":
            raise FormulaSyntaxError(f"unexpected '{token.text}'", token.line, token.column)
        return Formula(node, self.issues)

    def validate(self, text: str) -> bool:
        """Check whether text parses over this issue set"""
        try:
            self.parse(text)
            return True
        except AggregationError:
            return False

    def _tokenize(self, text: str) -> List[Token]:
        tokens = []
        line, line_start = 1, 0
        for match in _TOKEN_RE.finditer(text):
            kind = match.lastgroup
            column = match.start() - line_start + 1
            if kind == "NEWLINE":
                line += 1
                line_start = match.end()
                continue
            if kind in ("SPACE", "COMMENT"):
                continue
            if kind == "MISMATCH":
                raise FormulaSyntaxError(f"unexpected character '{match.group()}'", line, column)
            tokens.append(Token(kind, match.group(), line, column))
        tokens.append(Token("EOF", "end of input", line, len(text) - line_start + 1))
        return tokens

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _iff(self) -> Node:
        node = self._implies()
        while self._peek().kind == "IFF":
            self._advance()
            node = Iff(node, self._implies())
        return node

    def _implies(self) -> Node:
        node = self._or()
        if self._peek().kind == "IMPLIES":
            self._advance()
            return Implies(node, self._implies())
        return node

    def _or(self) -> Node:
        items = [self._and()]
        while self._peek().kind == "OR":
            self._advance()
            items.append(self._and())
        return disjoin(items)

    def _and(self) -> Node:
        items = [self._unary()]
        while self._peek().kind == "AND":
            self._advance()
            items.append(self._unary())
        return conjoin(items)

    def _unary(self) -> Node:
        token = self._advance()
        if token.kind == "NOT":
            return Not(self._unary())
        if token.kind == "LPAREN":
            node = self._iff()
            closing = self._advance()
            if closing.kind != "RPAREN":
                raise FormulaSyntaxError(
                    f"expected ')' but found '{closing.text}'", closing.line, closing.column
                )
            return node
        if token.kind == "IDENT":
            if token.text == "TRUE":
                return Top()
            if token.text == "FALSE":
                return Bottom()
            if token.text not in self.issues:
                raise UnknownIdentifierError(token.text, token.line, token.column)
            return Var(self.issues.index(token.text))
        raise FormulaSyntaxError(f"unexpected '{token.text}'", token.line, token.column)


def parse(text: str, issues: IssueSet) -> Formula:
    return FormulaParser(issues).parse(text)


def parse_issue_header(line: str, keyword: str = "issues") -> IssueSet:
    prefix, sep, rest = line.partition(":")
    if not sep or prefix.strip() != keyword:
        raise InputFileError(f"expected header '{keyword}: name ...'", line=1)
    names = rest.split()
    if not names:
        raise InputFileError(f"header '{keyword}:' lists no names", line=1)
    for name in names:
        if not IDENTIFIER.match(name):
            raise InputFileError(f"invalid name '{name}' in header", line=1)
    try:
        return IssueSet(names=tuple(names))
    except ValueError as e:
        raise InputFileError(str(e), line=1) from e


def _content_lines(text: str) -> List[tuple]:
    """(line number, text before any comment) for non-blank lines"""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            lines.append((number, content))
    return lines


def parse_formula_file(text: str, path: Optional[str] = None) -> Formula:
    """Header line `issues: ...`, then one formula per line (implicit conjunction)"""
    lines = _content_lines(text)
    if not lines:
        raise InputFileError("missing 'issues:' header", path=path)
    header_line, header = lines[0]
    try:
        issues = parse_issue_header(header)
    except InputFileError as e:
        raise InputFileError(str(e).split(": ", 1)[-1].strip(), path=path, line=header_line) from e
    parser = FormulaParser(issues)
    nodes = []
    for number, content in lines[1:]:
        try:
            nodes.append(parser.parse(content).root)
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(str(e).split(": ", 1)[-1], number, e.column) from e
        except UnknownIdentifierError as e:
            raise UnknownIdentifierError(e.name, number, e.column) from e
    return Formula(conjoin(nodes), issues)


def read_formula_file(path: Union[str, Path]) -> Formula:
    text = Path(path).read_text(encoding="utf-8")
    return parse_formula_file(text, path=str(path))


def format_formula_file(formula: Formula, comments: Iterable[str] = ()) -> str:
    lines = [f"issues: {' '.join(formula.issues.names)}"]
    lines.extend(f"# {comment}" for comment in comments)
    lines.extend(part.pretty() for part in formula.conjuncts())
    return "\n".join(lines) + "\n"
