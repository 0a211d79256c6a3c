"""Encoders exposed on the command line: formula files plus an issue map."""
from pathlib import Path
from string import ascii_lowercase
from typing import Dict, Optional

import typer

from aggparadox.cli.output import JSON_OPTION, OUTPUT_OPTION, emit, handle_errors, make_config
from aggparadox.encoders.judgment import encode_agenda, has_median_property, mi_sets, read_agenda
from aggparadox.encoders.ostrogorski import PARTY_ISSUE, encode_ostrogorski
from aggparadox.encoders.preferences import OrderKind, encode_preferences, pair_name, pairs
from aggparadox.logic.formula import Formula
from aggparadox.logic.parser import format_formula_file
from aggparadox.models.schemas import AlternativeSet, CommandResult, EncodingReport, MiSetReport

router = typer.Typer(help="Write the integrity constraint of a classical setting", no_args_is_help=True)


def _result(kind: str, ic: Formula, issue_map: Dict[str, str]) -> CommandResult:
    comments = [f"{name}: {meaning}" for name, meaning in issue_map.items()]
    return CommandResult(
        text=format_formula_file(ic, comments),
        payload=EncodingReport(
            kind=kind,
            issues=list(ic.issues.names),
            conjuncts=[part.pretty() for part in ic.conjuncts()],
            issue_map=issue_map,
        ),
    )


def _split(names: Optional[str]) -> Optional[list]:
    if names is None:
        return None
    return [n.strip() for n in names.split(",") if n.strip()]


@router.command("pref")
@handle_errors
def encode_pref(
    ctx: typer.Context,
    alternatives: int = typer.Option(3, "--alternatives", help="Number of alternatives (2 to 5)"),
    names: Optional[str] = typer.Option(None, "--names", help="Comma-separated alternative labels"),
    kind: OrderKind = typer.Option(OrderKind.LINEAR, "--kind", help="linear, weak or partial"),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Preferences as binary ballots over ordered pairs of alternatives."""
    config = make_config(ctx, "encode", [], json_output, output)
    labels = _split(names) or list(ascii_lowercase[: max(alternatives, 0)])
    x = AlternativeSet(names=tuple(labels))
    _, ic = encode_preferences(x, kind)
    issue_map = {pair_name(x, a, b): f"{a} over {b}" for a, b in pairs(x)}
    emit(_result(f"pref-{OrderKind(kind).value}", ic, issue_map), config)


@router.command("agenda")
@handle_errors
def encode_agenda_file(
    ctx: typer.Context,
    file: Path = typer.Option(..., "--file", help="Agenda file (vars: header, name: formula lines)"),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Judgment aggregation: one issue per agenda entry, IC from the mi-sets."""
    config = make_config(ctx, "encode", [str(file)], json_output, output)
    agenda = read_agenda(file)
    issues, ic = encode_agenda(agenda)
    issue_map = {
        issue: entry.formula.pretty() for issue, entry in zip(issues.names, agenda.entries)
    }
    emit(_result("agenda", ic, issue_map), config)


@router.command("ostrogorski")
@handle_errors
def encode_ostrogorski_issues(
    ctx: typer.Context,
    issues: int = typer.Option(3, "--issues", help="Odd number of policy issues"),
    names: Optional[str] = typer.Option(None, "--names", help="Comma-separated policy issue names"),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Party vote decided by a majority of the policy issues."""
    config = make_config(ctx, "encode", [], json_output, output)
    issue_set, ic = encode_ostrogorski(issues, _split(names))
    issue_map = {name: "policy issue" for name in issue_set.names[:-1]}
    issue_map[PARTY_ISSUE] = "vote for the first party"
    emit(_result("ostrogorski", ic, issue_map), config)


@handle_errors
def list_mi_sets(
    ctx: typer.Context,
    agenda_file: Path = typer.Argument(..., help="Agenda file"),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """List the minimally inconsistent subsets of an agenda."""
    config = make_config(ctx, "mi-sets", [str(agenda_file)], json_output, output)
    agenda = read_agenda(agenda_file)
    found = mi_sets(agenda)
    median = has_median_property(agenda)
    lines = [f"entries: {', '.join(agenda.names)}", f"mi-sets ({len(found)}):"]
    lines.extend("  {" + ", ".join(members) + "}" for members in found)
    lines.append(f"median property: {'yes' if median else 'no'}")
    report = MiSetReport(entries=agenda.names, mi_sets=found, median_property=median)
    emit(CommandResult(text="\n".join(lines) + "\n", payload=report), config)
