from pathlib import Path
from typing import Optional, Union

from aggparadox.errors import InputFileError
from aggparadox.logic.parser import parse_issue_header
from aggparadox.models.schemas import Ballot, Profile


def parse_profile(text: str, path: Optional[str] = None) -> Profile:
    """Header `issues: ...`, then one voter per line as space-separated bits"""
    rows = []
    issues = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if issues is None:
            try:
                issues = parse_issue_header(content)
            except InputFileError as e:
                raise InputFileError(str(e).split(": ", 1)[-1].strip(), path=path, line=number) from e
            continue
        tokens = content.split()
        if any(t not in ("0", "1") for t in tokens):
            raise InputFileError(f"ballot '{content}' must contain only 0 and 1", path=path, line=number)
        if len(tokens) != issues.count:
            raise InputFileError(
                f"ballot has {len(tokens)} bits, header lists {issues.count} issues",
                path=path,
                line=number,
            )
        rows.append(Ballot(bits=tuple(int(t) for t in tokens)))
    if issues is None:
        raise InputFileError("missing 'issues:' header", path=path)
    if not rows:
        raise InputFileError("profile lists no voters", path=path)
    return Profile(issues=issues, ballots=tuple(rows))


def read_profile(path: Union[str, Path]) -> Profile:
    return parse_profile(Path(path).read_text(encoding="utf-8"), path=str(path))


def format_profile(profile: Profile) -> str:
    lines = [f"issues: {' '.join(profile.issues.names)}"]
    lines.extend(str(ballot) for ballot in profile.ballots)
    return "\n".join(lines) + "\n"
