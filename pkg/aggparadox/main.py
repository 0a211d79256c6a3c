from pathlib import Path
from typing import Optional

import typer

from aggparadox import __version__
from aggparadox.cli import check, demo, encode, verify
from aggparadox.cli.output import (
    BUDGET_OPTION,
    JSON_OPTION,
    OUTPUT_OPTION,
    VOTERS_OPTION,
    global_config,
)
from aggparadox.config import configure_logging

app = typer.Typer(
    name="aggparadox",
    help="Detect, construct and classify paradoxes of the majority rule in binary aggregation",
    no_args_is_help=True,
    add_completion=False,
)


def _version(value: bool) -> None:
    if value:
        typer.echo(f"aggparadox {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    version: bool = typer.Option(
        False, "--version", callback=_version, is_eager=True, help="Show the version and exit"
    ),
    json_output: bool = JSON_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    voters: Optional[int] = VOTERS_OPTION,
    budget: Optional[int] = BUDGET_OPTION,
):
    """Binary aggregation with integrity constraints.

    --json, --output, --voters and --budget given here apply to every
    subcommand; the same flag after the subcommand takes precedence.
    """
    configure_logging(verbose)
    ctx.obj = global_config(json_output, output, voters, budget)


# Include command modules
app.command("check")(check.check)
app.command("paradox")(check.paradox)
app.command("bruteforce")(check.bruteforce)
app.command("verify")(verify.verify)
app.command("demo")(demo.demo)
app.command("mi-sets")(encode.list_mi_sets)
app.add_typer(encode.router, name="encode")


if __name__ == "__main__":
    app()
