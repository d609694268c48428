import logging

import click

from ..services.analysis import circle_example
from ..utils import format_number
from .base import EXIT_VIOLATION, write_json

logger = logging.getLogger(__name__)


@click.command("circle-example")
@click.option("--nodes", type=click.IntRange(min=3), default=513, show_default=True,
              help="Trapezoid nodes on [0, 2π]")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, allow_dash=True),
              help="Write the checks as JSON ('-' for standard output)")
@click.pass_context
def circle_example_command(ctx: click.Context, nodes, json_path):
    """
    Reproduce the (cos α, sin α) example: S = πI, FP = 2π², equality in the
    integral Welch bound and a sup bound of 1/2 against a sup of 1.
    """
    report = circle_example(nodes)
    if json_path != "-":
        for check in report.checks:
            status = "ok" if check.passed else "FAILED"
            click.echo(
                f"{check.name}: {format_number(check.measured)} (expected {format_number(check.expected)}, "
                f"tolerance {format_number(check.tolerance)}) {status}  [{check.statement}]"
            )
    write_json(report, json_path)
    if not report.passed:
        ctx.exit(EXIT_VIOLATION)
