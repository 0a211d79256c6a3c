"""Safety classification, witness construction and the brute-force oracle."""
from pathlib import Path
from typing import Optional

import typer

from aggparadox.aggregation.paradox import brute_force_cr
from aggparadox.aggregation.rules import MAJORITY
from aggparadox.cli.output import (
    BUDGET_OPTION,
    JSON_OPTION,
    OUTPUT_OPTION,
    VOTERS_OPTION,
    emit,
    handle_errors,
    make_config,
)
from aggparadox.logic.parser import read_formula_file
from aggparadox.models.domain import CertifiedSafe
from aggparadox.models.schemas import BruteForceReport, CommandResult, ExitCode
from aggparadox.safety.classifier import classify, construct_paradox
from aggparadox.safety.report import build_report, explain, witness_table


@handle_errors
def check(
    ctx: typer.Context,
    formula_file: Path = typer.Argument(..., help="Constraint file"),
    voters: Optional[int] = VOTERS_OPTION,
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Decide whether the majority rule is collectively rational for a constraint."""
    config = make_config(ctx, "check", [str(formula_file)], json_output, output, voters=voters)
    ic = read_formula_file(formula_file)
    verdict = classify(ic)
    witness = None if verdict.safe else construct_paradox(ic, config.voters)
    emit(
        CommandResult(
            exit_code=ExitCode.OK if verdict.safe else ExitCode.PARADOX,
            text=explain(verdict, witness),
            payload=build_report(verdict, witness),
        ),
        config,
    )


@handle_errors
def paradox(
    ctx: typer.Context,
    formula_file: Path = typer.Argument(..., help="Constraint file"),
    voters: Optional[int] = VOTERS_OPTION,
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Construct a majority paradox for an unsafe constraint."""
    config = make_config(
        ctx,
        "paradox",
        [str(formula_file)],
        json_output,
        output,
        voters=voters,
        requires_majority=True,
    )
    ic = read_formula_file(formula_file)
    verdict = classify(ic)
    if verdict.safe:
        emit(
            CommandResult(
                exit_code=ExitCode.SAFE_NO_WITNESS,
                text="constraint is majority-safe\n",
                payload=build_report(verdict),
            ),
            config,
        )
    witness = construct_paradox(ic, config.voters)
    emit(
        CommandResult(
            exit_code=ExitCode.PARADOX,
            text=explain(verdict, witness),
            payload=build_report(verdict, witness),
        ),
        config,
    )


@handle_errors
def bruteforce(
    ctx: typer.Context,
    formula_file: Path = typer.Argument(..., help="Constraint file"),
    voters: Optional[int] = VOTERS_OPTION,
    budget: Optional[int] = BUDGET_OPTION,
    any_witness: bool = typer.Option(
        False, "--any-witness", help="Scan multisets of ballots only (any witness, not the first)"
    ),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Check every profile of rational ballots for a majority paradox."""
    config = make_config(
        ctx,
        "bruteforce",
        [str(formula_file)],
        json_output,
        output,
        voters=voters,
        budget=budget,
        requires_majority=True,
    )
    ic = read_formula_file(formula_file)
    result = brute_force_cr(
        MAJORITY, ic, config.voters, budget=config.budget, any_witness=any_witness
    )

    if isinstance(result, CertifiedSafe):
        text = (
            f"constraint: {ic}\n"
            f"certified safe at n={result.voters} ({result.profiles_checked} profiles checked)\n"
        )
        report = BruteForceReport(
            formula=str(ic),
            voters=result.voters,
            rule=result.rule,
            profiles_checked=result.profiles_checked,
            safe=True,
        )
        emit(CommandResult(exit_code=ExitCode.OK, text=text, payload=report), config)

    lines = [f"constraint: {ic}", f"paradox found at n={config.voters}:"]
    lines.extend(f"  {row}" for row in witness_table(result))
    lines.append(f"violated: {result.violated.render(ic.issues)}")
    report = BruteForceReport(
        formula=str(ic),
        voters=config.voters,
        rule=result.rule,
        safe=False,
        witness=result.payload(),
    )
    emit(CommandResult(exit_code=ExitCode.PARADOX, text="\n".join(lines) + "\n", payload=report), config)
