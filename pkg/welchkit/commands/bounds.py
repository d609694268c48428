import logging

import click
import sentry_sdk

from ..services.analysis import bounds_table
from ..utils import format_number
from .base import FIELD_CHOICE, field_tag, float_list, int_list, write_json

logger = logging.getLogger(__name__)


@click.command("bounds")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of unit vectors")
@click.option("--d", "d", type=click.IntRange(min=1), required=True, help="Dimension")
@click.option("--field", type=FIELD_CHOICE, default="C", show_default=True, help="R or C")
@click.option("--orders", default="1", show_default=True, callback=int_list, help="Welch orders m, e.g. 1,2,3")
@click.option("--ps", default="", callback=float_list, help="p-Welch exponents (each > 2)")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, allow_dash=True),
              help="Also write the table as JSON ('-' for standard output)")
def bounds_command(n, d, field, orders, ps, json_path):
    """Print the closed-form bounds for n unit vectors in K^d."""
    if n < d:
        raise click.UsageError(f"need n ≥ d, got n={n}, d={d}")
    if any(p <= 2.0 for p in ps):
        raise click.BadParameter("p-Welch exponents must exceed 2", param_hint="--ps")
    sentry_sdk.set_context("command", {"name": "bounds", "n": n, "d": d, "field": field})
    table = bounds_table(n, d, field_tag(field), orders=orders, ps=ps)

    if json_path != "-":
        click.echo(f"n = {n}, d = {d}, field = {table.field}")
        click.echo("")
        click.echo("order  C(d+m-1,m)  sum bound  max bound  √max(0, max bound)")
        for row in table.welch:
            click.echo(
                f"m={row.m}  {row.sym_dim}  {format_number(row.sum_lb)}  "
                f"{format_number(row.max_lb)}  {format_number(row.max_lb_sqrt)}"
            )
        for p, value in table.p_welch.items():
            click.echo(f"p-Welch p={p}: {format_number(value)}")
        click.echo("")
        alternatives = table.alternatives
        for name in ("bukh_cox", "orthoplex", "levenstein", "exponential"):
            value = getattr(alternatives, name)
            reason = alternatives.reasons.get(name)
            suffix = f"  ({reason})" if value is None and reason else ""
            click.echo(f"{name}: {format_number(value)}{suffix}")
        click.echo(f"gerzon: {table.gerzon}" + ("  (n exceeds it)" if table.exceeds_gerzon else ""))
    write_json(table, json_path)
