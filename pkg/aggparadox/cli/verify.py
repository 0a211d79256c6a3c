from pathlib import Path
from typing import Optional

import typer

from aggparadox.aggregation.paradox import check_paradox
from aggparadox.aggregation.profiles import read_profile
from aggparadox.aggregation.rules import MAJORITY
from aggparadox.cli.output import JSON_OPTION, OUTPUT_OPTION, emit, handle_errors, make_config
from aggparadox.errors import IrrationalIndividualError, IssueSetMismatchError, LengthMismatchError
from aggparadox.logic.parser import read_formula_file
from aggparadox.models.schemas import CommandResult, ExitCode, ParadoxReport
from aggparadox.safety.report import format_table, witness_table


@handle_errors
def verify(
    ctx: typer.Context,
    formula_file: Path = typer.Argument(..., help="Constraint file"),
    profile_file: Path = typer.Argument(..., help="Profile file, one ballot per line"),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Check whether a given profile is a majority paradox for a constraint."""
    config = make_config(ctx, "verify", [str(formula_file), str(profile_file)], json_output, output)
    ic = read_formula_file(formula_file)
    profile = read_profile(profile_file)
    if profile.issues.count != ic.count:
        raise LengthMismatchError(ic.count, profile.issues.count)
    if profile.issues != ic.issues:
        raise IssueSetMismatchError(
            f"profile issues {' '.join(profile.issues.names)} differ from "
            f"constraint issues {' '.join(ic.issues.names)}"
        )
    rows = [list(b.bits) for b in profile.ballots]

    try:
        witness = check_paradox(MAJORITY, profile, ic)
    except IrrationalIndividualError as e:
        report = ParadoxReport(formula=str(ic), voters=rows, irrational_voters=e.voters)
        emit(CommandResult(exit_code=ExitCode.IRRATIONAL, text=f"{e}\n", payload=report), config)

    if witness is None:
        outcome = MAJORITY(profile)
        table = format_table(
            ic.issues, [(f"Voter {v}", b) for v, b in enumerate(profile.ballots, start=1)], outcome
        )
        text = "\n".join(table + ["no paradox: the majority outcome is rational"]) + "\n"
        report = ParadoxReport(formula=str(ic), voters=rows, outcome=list(outcome.bits))
        emit(CommandResult(exit_code=ExitCode.OK, text=text, payload=report), config)

    issues = ic.issues
    text = "\n".join(
        witness_table(witness)
        + [f"paradox: outcome violates {witness.violated.render(issues)}"]
    ) + "\n"
    report = ParadoxReport(
        formula=str(ic),
        voters=rows,
        outcome=list(witness.outcome.bits),
        paradox=True,
        violated=witness.violated.render(issues),
    )
    emit(CommandResult(exit_code=ExitCode.PARADOX, text=text, payload=report), config)
