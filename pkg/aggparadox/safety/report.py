from typing import List, Optional, Sequence

from aggparadox.logic.formula import partial_to_conjunction
from aggparadox.models.domain import ParadoxWitness, SafetyVerdict
from aggparadox.models.schemas import Ballot, IssueSet, SafetyReport
from aggparadox.safety.classifier import construct_paradox


def format_table(
    issues: IssueSet,
    rows: Sequence[tuple],
    outcome: Optional[Ballot] = None,
    columns: Optional[Sequence[str]] = None,
    symbols: Sequence[str] = ("0", "1"),
    outcome_label: str = "Maj",
) -> List[str]:
    """Aligned ballot table, one row per voter; rows are (label, ballot) pairs"""
    columns = list(columns) if columns else list(issues.names)
    positions = [issues.index(c) for c in columns]
    labels = [label for label, _ in rows] + ([outcome_label] if outcome is not None else [])
    label_width = max(len(label) for label in labels)
    widths = [max(len(c), max(len(s) for s in symbols)) for c in columns]

    def line(label: str, cells: Sequence[str]) -> str:
        body = "  ".join(cell.rjust(w) for cell, w in zip(cells, widths))
        return f"{label.ljust(label_width)}  {body}".rstrip()

    lines = [line("", columns)]
    for label, ballot in rows:
        lines.append(line(label, [symbols[ballot.bits[p]] for p in positions]))
    if outcome is not None:
        lines.append(line(outcome_label, [symbols[outcome.bits[p]] for p in positions]))
    return lines


def witness_table(witness: ParadoxWitness) -> List[str]:
    rows = [(f"Voter {v}", b) for v, b in enumerate(witness.profile.ballots, start=1)]
    return format_table(witness.constraint.issues, rows, witness.outcome)


def explain(verdict: SafetyVerdict, witness: Optional[ParadoxWitness] = None) -> str:
    """Human-readable justification of a verdict"""
    ic = verdict.formula
    issues = ic.issues
    lines = [f"constraint: {ic}"]

    if verdict.is_tautology:
        lines.append("verdict: safe")
        lines.append("no constraint: all outcomes rational")
        return "\n".join(lines) + "\n"
    if verdict.is_unsatisfiable:
        lines.append("verdict: safe")
        lines.append("constraint is unsatisfiable: there are no rational profiles, so no paradox exists")
        return "\n".join(lines) + "\n"

    lines.append(f"prime implicates ({len(verdict.prime_implicates)}):")
    lines.extend(f"  {c.render(issues)}" for c in verdict.prime_implicates)
    lines.append(f"largest prime implicate: {verdict.max_clause_size} literal(s)")

    if verdict.safe:
        lines.append("verdict: safe")
        lines.append(
            "Every prime implicate has at most two literals. If every voter satisfies "
            "l1 | l2 but the majority rejects both literals, then more than half of the "
            "voters reject l1 and more than half reject l2; by the pigeonhole principle "
            "some voter rejects both, which contradicts that voter's rationality."
        )
        return "\n".join(lines) + "\n"

    rho = verdict.critical_assignment
    if witness is None:
        witness = construct_paradox(ic)
    lines.append("verdict: unsafe")
    lines.append(f"mifap-assignment rho*: {rho.render(issues)}")
    lines.append(f"forbidden combination: {partial_to_conjunction(rho, issues)}")
    flipped = ", ".join(issues.names[i] for i in rho.domain[:3])
    lines.append(
        f"flip construction: ballot k flips rho* on the k-th of {flipped}, "
        "then extends to the first rational ballot"
    )
    lines.append(f"paradox with {witness.profile.voters} voters:")
    lines.extend(f"  {row}" for row in witness_table(witness))
    lines.append(f"violated: {witness.violated.render(issues)}")
    return "\n".join(lines) + "\n"


def build_report(verdict: SafetyVerdict, witness: Optional[ParadoxWitness] = None) -> SafetyReport:
    issues = verdict.formula.issues
    mifap = None
    if verdict.critical_assignment is not None:
        mifap = {issues.names[i]: v for i, v in verdict.critical_assignment.bindings}
    return SafetyReport(
        formula=str(verdict.formula),
        safe=verdict.safe,
        max_clause_size=verdict.max_clause_size,
        prime_implicates=[c.render(issues) for c in verdict.prime_implicates],
        mifap=mifap,
        witness=witness.payload() if witness is not None else None,
    )
