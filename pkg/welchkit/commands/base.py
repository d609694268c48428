"""
Shared pieces of the click commands: exit codes, option parsers and the
group that turns domain errors into exit codes.
"""

import logging
import traceback
from typing import Optional

import click
import sentry_sdk

from ..errors import FrameValidationError, InvalidArgumentError, WelchkitError
from ..models.frame import FieldTag
from ..utils import dumps, parse_number_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3

FIELD_CHOICE = click.Choice([tag.value for tag in FieldTag], case_sensitive=False)


class WelchkitGroup(click.Group):
    """click group mapping welchkit errors to the documented exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except FrameValidationError as e:
            logger.error(f"Frame validation failed: {e}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_VALIDATION)
        except InvalidArgumentError as e:
            logger.error(f"Invalid argument: {e}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_USAGE)
        except WelchkitError as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {e}", err=True)
            sentry_sdk.capture_exception(e)
            ctx.exit(EXIT_VIOLATION)
        except Exception as e:
            logger.error(f"Unexpected error: {str(e)}")
            logger.error(traceback.format_exc())
            click.echo(f"Error: {e}", err=True)
            sentry_sdk.capture_exception(e)
            ctx.exit(EXIT_VIOLATION)


def field_tag(value: str) -> FieldTag:
    return FieldTag(value.upper())


def int_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> list:
    """click callback for options like `--orders 1,2,3`."""
    if value is None:
        return []
    try:
        values = parse_number_list(value, int)
    except ValueError:
        raise click.BadParameter(f"expected comma separated integers, got '{value}'")
    if any(item < 1 for item in values):
        raise click.BadParameter("values must be positive")
    return values


def float_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> list:
    """click callback for options like `--ps 3,4.5`."""
    if value is None:
        return []
    try:
        return parse_number_list(value, float)
    except ValueError:
        raise click.BadParameter(f"expected comma separated numbers, got '{value}'")


def write_json(report, path: Optional[str]) -> None:
    """Write a report to `path`, or to standard output for '-'."""
    if path is None:
        return
    text = dumps(report)
    if path == "-":
        click.echo(text, nl=False)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
    logger.info(f"Wrote report to {path}")
