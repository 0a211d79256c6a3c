from pathlib import Path
from typing import Optional

import typer

from aggparadox.aggregation.paradox import check_paradox
from aggparadox.aggregation.rules import MAJORITY
from aggparadox.cli.output import JSON_OPTION, OUTPUT_OPTION, emit, handle_errors, make_config
from aggparadox.encoders.scenarios import builtin_scenario
from aggparadox.models.domain import Scenario
from aggparadox.models.schemas import CommandResult, DemoReport, ExitCode
from aggparadox.safety.classifier import classify
from aggparadox.safety.report import format_table


def describe(scenario: Scenario) -> CommandResult:
    ic = scenario.constraint
    issues = scenario.issues
    profile = scenario.profile
    witness = check_paradox(MAJORITY, profile, ic)
    outcome = witness.outcome if witness is not None else MAJORITY(profile)
    verdict = classify(ic)

    rows = [
        (f"{scenario.voter_label} {v}", b) for v, b in enumerate(profile.ballots, start=1)
    ]
    lines = [scenario.title, f"issues: {' '.join(issues.names)}", f"constraint: {ic}"]
    lines.extend(f"{key}: {value}" for key, value in scenario.notes.items())
    lines.append("")
    lines.extend(format_table(issues, rows, outcome, scenario.columns, scenario.symbols))
    lines.append("")
    if witness is not None:
        lines.append(f"violated: {witness.violated.render(issues)}")
        lines.append("paradox: every voter is rational, the majority outcome is not")
    else:
        lines.append("no paradox")

    report = DemoReport(
        scenario=scenario.name,
        title=scenario.title,
        issues=list(issues.names),
        columns=list(scenario.columns),
        constraint=str(ic),
        voters=[list(b.bits) for b in profile.ballots],
        outcome=list(outcome.bits),
        paradox=witness is not None,
        violated=witness.violated.render(issues) if witness is not None else None,
        max_clause_size=verdict.max_clause_size,
    )
    return CommandResult(exit_code=ExitCode.OK, text="\n".join(lines) + "\n", payload=report)


@handle_errors
def demo(
    ctx: typer.Context,
    name: str = typer.Argument(
        ...,
        help="condorcet, discursive, ostrogorski, ostrogorski-strict, divided-government or mep",
    ),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Reproduce one of the classical paradoxes."""
    config = make_config(ctx, "demo", [name], json_output, output)
    emit(describe(builtin_scenario(name)), config)
