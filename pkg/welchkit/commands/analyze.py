import csv
import logging

import click
import sentry_sdk

from ..models.reports import AnalysisReport
from ..services.analysis import analyze_frame, gram_distribution
from ..services.frames import builtin_from_spec, load_frame
from ..utils import format_number
from .base import EXIT_VIOLATION, float_list, int_list, write_json

logger = logging.getLogger(__name__)


def _print_report(report: AnalysisReport) -> None:
    frame = report.frame
    click.echo(f"source: {report.source}")
    click.echo(
        f"frame: {frame.field}^{frame.dim}, {frame.node_count} nodes, μ(Ω) = {format_number(frame.total_mass)}, "
        f"(μ×μ)(Δ) = {format_number(frame.diagonal_mass)}, atomic = {format_number(frame.atomic)}, "
        f"normalized = {format_number(frame.normalized)}"
    )
    operator = report.operator
    click.echo(
        f"frame bounds: a = {format_number(operator.lower)}, b = {format_number(operator.upper)}, "
        f"b/a = {format_number(operator.bound_ratio)}, tight = {format_number(operator.tight)}"
    )
    metrics = report.metrics
    click.echo(
        f"coherence = {format_number(metrics.coherence)}, CRMS = {format_number(metrics.crms)}, "
        f"FP = {format_number(metrics.potential)}, equiangular = {format_number(metrics.equiangular)}"
    )
    for key, note in metrics.notes.items():
        click.echo(f"  {key}: {note}")
    click.echo("")
    for bound in report.bounds:
        label = bound.bound_id if bound.m_or_p is None else f"{bound.bound_id}[{format_number(bound.m_or_p)}]"
        if not bound.applicable:
            click.echo(f"{label}: n/a ({bound.reason})")
            continue
        status = "ok" if bound.satisfied else "VIOLATED"
        flags = " equality" if bound.equality else ""
        flags += " vacuous" if bound.vacuous else ""
        click.echo(
            f"{label}: lhs = {format_number(bound.lhs)}, rhs = {format_number(bound.rhs)}, "
            f"gap = {format_number(bound.gap)} {status}{flags}"
        )


@click.command("analyze")
@click.option("--frame", "frame_path", type=click.Path(dir_okay=False), help="Frame file (JSON)")
@click.option("--builtin", "builtin_spec", help="Builtin frame, e.g. onb:3, harmonic:7,3, cos_sin:513")
@click.option("--orders", default="1", show_default=True, callback=int_list, help="Welch orders m")
@click.option("--ps", default="4", show_default=True, callback=float_list, help="p-Welch exponents (each > 2)")
@click.option("--rs", default="2", show_default=True, callback=float_list, help="Trace-power exponents (each > 0)")
@click.option("--output", type=click.Path(dir_okay=False, allow_dash=True), help="Write the report as JSON")
@click.option("--json", "as_json", is_flag=True, help="Print the JSON report instead of the table")
@click.option("--dump-gram", type=click.Path(dir_okay=False), help="Write off-diagonal Gram magnitudes as CSV")
@click.pass_context
def analyze_command(ctx: click.Context, frame_path, builtin_spec, orders, ps, rs, output, as_json, dump_gram):
    """
    Analyze a frame: operator, metrics and every bound.

    Exits with 1 when an applicable bound is violated.
    """
    if (frame_path is None) == (builtin_spec is None):
        raise click.UsageError("give exactly one of --frame or --builtin")
    if any(p <= 2.0 for p in ps):
        raise click.BadParameter("p-Welch exponents must exceed 2", param_hint="--ps")
    if any(r <= 0.0 for r in rs):
        raise click.BadParameter("trace-power exponents must be positive", param_hint="--rs")

    source = frame_path if frame_path is not None else builtin_spec
    sentry_sdk.set_context("command", {"name": "analyze", "source": source})
    frame = load_frame(frame_path) if frame_path is not None else builtin_from_spec(builtin_spec)
    report = analyze_frame(frame, source, orders=orders, ps=ps, rs=rs)

    if as_json:
        write_json(report, "-")
    else:
        _print_report(report)
    if output is not None:
        write_json(report, output)
    if dump_gram is not None:
        with open(dump_gram, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["alpha", "beta", "modulus", "weight"])
            for alpha, beta, modulus, weight in gram_distribution(frame):
                writer.writerow([alpha, beta, repr(modulus), repr(weight)])
        logger.info(f"Wrote Gram magnitudes to {dump_gram}")

    if not report.all_satisfied:
        ids = ", ".join(bound.bound_id for bound in report.violations)
        click.echo(f"Bound violations: {ids}", err=True)
        ctx.exit(EXIT_VIOLATION)
