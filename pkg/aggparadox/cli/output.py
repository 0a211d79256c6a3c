"""Rendering of command results and mapping of errors to exit codes."""
import functools
import logging
from pathlib import Path
from typing import Callable, List, Optional

import typer
from pydantic import ValidationError

from aggparadox.errors import BudgetExceededError
from aggparadox.models.schemas import CommandConfig, CommandResult, ExitCode, OutputFormat

logger = logging.getLogger(__name__)

JSON_OPTION = typer.Option(False, "--json", help="Emit the machine-readable JSON report")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Write the report to this file")
VOTERS_OPTION = typer.Option(
    None, "--voters", "-n", min=1, help="Number of voters (odd, default 3)"
)
BUDGET_OPTION = typer.Option(
    None, "--budget", min=1, help="Profile budget (defaults to AGG_BUDGET)"
)


def _config(
    subcommand: str, inputs: List[str], json_output: bool, output: Optional[Path], extra: dict
) -> CommandConfig:
    return CommandConfig(
        subcommand=subcommand,
        inputs=inputs,
        output_format=OutputFormat.JSON if json_output else OutputFormat.TEXT,
        output=str(output) if output else None,
        **{k: v for k, v in extra.items() if v is not None},
    )


def global_config(
    json_output: bool = False,
    output: Optional[Path] = None,
    voters: Optional[int] = None,
    budget: Optional[int] = None,
) -> CommandConfig:
    """Flags given before the subcommand; stored on the typer context"""
    return _config("", [], json_output, output, {"voters": voters, "budget": budget})


def make_config(
    ctx: typer.Context,
    subcommand: str,
    inputs: List[str],
    json_output: bool = False,
    output: Optional[Path] = None,
    **extra,
) -> CommandConfig:
    """Subcommand flags win; anything left unset falls back to the global flags"""
    shared = ctx.obj if isinstance(ctx.obj, CommandConfig) else None
    if shared is not None:
        json_output = json_output or shared.output_format is OutputFormat.JSON
        output = output or shared.output
        for key in ("voters", "budget"):
            if key in extra and extra[key] is None and key in shared.model_fields_set:
                extra[key] = getattr(shared, key)
    return _config(subcommand, inputs, json_output, output, extra)


def render(result: CommandResult, config: CommandConfig) -> str:
    if config.output_format is OutputFormat.JSON and result.payload is not None:
        return result.payload.model_dump_json(indent=2) + "\n"
    return result.text


def emit(result: CommandResult, config: CommandConfig) -> None:
    """Write the rendered result and leave with its exit code"""
    content = render(result, config)
    if config.output:
        Path(config.output).write_text(content, encoding="utf-8")
        logger.info("report written to %s", config.output)
    else:
        typer.echo(content, nl=False)
    raise typer.Exit(code=int(result.exit_code))


def _describe(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(str(item["msg"]).removeprefix("Value error, ") for item in error.errors())
    return str(error)


def handle_errors(command: Callable) -> Callable:
    """Report failures on stderr with exit code 3 (budget) or 2 (anything else)"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except BudgetExceededError as e:
            typer.echo(f"Error: {e}", err=True)
            raise typer.Exit(code=int(ExitCode.BUDGET))
        except (ValueError, OSError) as e:
            logger.debug("command failed", exc_info=True)
            typer.echo(f"Error: {_describe(e)}", err=True)
            raise typer.Exit(code=int(ExitCode.USAGE))
        except RecursionError:
            typer.echo("Error: formula is nested too deeply", err=True)
            raise typer.Exit(code=int(ExitCode.USAGE))

    return wrapper
