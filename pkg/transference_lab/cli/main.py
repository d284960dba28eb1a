"""The ``transference-lab`` command group and its exit-code contract."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from time import perf_counter

import click

from config import CONFIG_BY_PROFILE, SUPPORTED_LOG_LEVELS
from transference_lab import __version__, create_lab
from transference_lab.errors import LabError, error_payload
from transference_lab.logging import run_log_extra

from .boundedness import bounded, mu, prune
from .experiments import crossing, moments, sweep
from .generate import dense_probe, gen, mparam
from .solve import alpha, arrow, turan

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 2


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--profile",
    type=click.Choice(sorted(CONFIG_BY_PROFILE)),
    default="default",
    show_default=True,
    help="Configuration profile.",
)
@click.option(
    "--log-level",
    type=click.Choice(sorted(SUPPORTED_LOG_LEVELS), case_sensitive=False),
    default=None,
    help="Override the profile log level.",
)
@click.option("--log-json/--no-log-json", default=None, help="Structured JSON logs on stderr.")
@click.version_option(__version__, prog_name="transference-lab")
@click.pass_context
def cli(ctx: click.Context, profile: str, log_level: str | None, log_json: bool | None) -> None:
    """Threshold experiments for extremal properties of random discrete structures."""

    overrides = {
        "LOG_LEVEL": log_level.upper() if log_level else None,
        "LOG_JSON_ENABLED": log_json,
    }
    ctx.obj = create_lab(profile, **overrides)


for subcommand in (
    gen,
    mparam,
    dense_probe,
    mu,
    bounded,
    prune,
    alpha,
    turan,
    arrow,
    sweep,
    crossing,
    moments,
):
    cli.add_command(subcommand)


def _report_error(error: LabError) -> None:
    payload = error_payload(error)
    click.echo(f"Error: {payload['message']}", err=True)
    for field, messages in sorted(payload.get("field_errors", {}).items()):
        for message in messages:
            if message != payload["message"]:
                click.echo(f"  {field}: {message}", err=True)


_VALUED_GLOBALS = {"--profile", "--log-level"}


def _subcommand_name(args: list[str]) -> str | None:
    skip = False
    for arg in args:
        if skip:
            skip = False
        elif arg in _VALUED_GLOBALS:
            skip = True
        elif not arg.startswith("-"):
            return arg
    return None


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and map outcomes to exit codes: 0 ok, 1 unreliable, 2 input error."""

    args = list(argv) if argv is not None else None
    command = _subcommand_name(args or [])
    start = perf_counter()
    status = "success"
    try:
        result = cli.main(args=args, prog_name="transference-lab", standalone_mode=False)
        code = result if isinstance(result, int) else 0
    except click.ClickException as exc:
        exc.show()
        code = EXIT_INPUT_ERROR
        status = "usage_error"
    except click.exceptions.Abort:
        click.echo("Aborted.", err=True)
        code = 1
        status = "aborted"
    except LabError as exc:
        _report_error(exc)
        code = exc.exit_code
        status = "error"

    if code == 1 and status == "success":
        status = "unreliable"
    logger.debug(
        "Command finished",
        extra=run_log_extra(
            event="cli.command",
            command=command or "",
            status=status,
            duration_ms=(perf_counter() - start) * 1000,
        ),
    )
    return code
