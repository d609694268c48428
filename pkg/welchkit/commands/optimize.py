import logging

import click
import sentry_sdk

from ..config import get_setting
from ..models.optimizer import DEFAULT_P_SCHEDULE, ObjectiveKind, OptimizerConfig, OptimizerResult
from ..services.frames import frame_to_document, save_frame
from ..services.optimizer import gradient_check, optimize
from ..utils import format_number
from .base import EXIT_VIOLATION, FIELD_CHOICE, field_tag, float_list, write_json

logger = logging.getLogger(__name__)

CERTIFICATE_SLACK = 1e-6


def _result_document(config: OptimizerConfig, result: OptimizerResult) -> dict:
    return {
        "config": config.model_dump(mode="json"),
        "objective": result.objective.value,
        "order": result.order,
        "achieved": result.achieved,
        "coherence": result.coherence,
        "potential": result.potential,
        "certificate": result.certificate,
        "equiangular": result.equiangular,
        "gamma": result.gamma,
        "tight": result.tight,
        "best_restart": result.best_restart,
        "restart_values": result.restart_values,
        "iterations_used": result.iterations_used,
        "frame": frame_to_document(result.frame),
    }


def _build_config(n, d, field, objective, m, seed, restarts, iters, p_schedule, step, tol, jobs) -> OptimizerConfig:
    kind = ObjectiveKind(objective)
    # `--objective potential --m 2` means the order-2 potential
    if kind is ObjectiveKind.POTENTIAL and m != 1:
        kind = ObjectiveKind.POTENTIAL_ORDER_M
    return OptimizerConfig.build(
        n=n, d=d, field=field_tag(field), objective=kind, m=m, seed=seed, restarts=restarts,
        max_iters=iters, p_schedule=p_schedule or list(DEFAULT_P_SCHEDULE), step=step, tol=tol, jobs=jobs,
    )


def _optimizer_options(command):
    options = [
        click.option("--n", "n", type=int, required=True, help="Number of unit vectors"),
        click.option("--d", "d", type=int, required=True, help="Dimension"),
        click.option("--field", type=FIELD_CHOICE, default="C", show_default=True),
        click.option("--objective", type=click.Choice([kind.value for kind in ObjectiveKind]),
                     default=ObjectiveKind.COHERENCE.value, show_default=True),
        click.option("--m", "m", type=int, default=1, show_default=True, help="Potential order"),
        click.option("--p-schedule", default="", callback=float_list,
                     help="Smoothing exponents, ascending (default 2,4,8,16,32,64)"),
    ]
    for option in reversed(options):
        command = option(command)
    return command


@click.command("optimize")
@_optimizer_options
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--restarts", type=int, default=1, show_default=True)
@click.option("--iters", type=int, default=20000, show_default=True, help="Iteration budget per restart")
@click.option("--step", type=float, default=0.1, show_default=True, help="Initial step size")
@click.option("--tol", type=float, default=1e-10, show_default=True, help="Stagnation tolerance")
@click.option("--jobs", type=int, default=lambda: get_setting("JOBS"),
              help="Restarts run concurrently (default WELCHKIT_JOBS)")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the best frame as a frame file")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, allow_dash=True),
              help="Write the full result as JSON ('-' for standard output)")
@click.pass_context
def optimize_command(ctx: click.Context, n, d, field, objective, m, p_schedule, seed, restarts, iters, step, tol,
                     jobs, out, json_path):
    """Search for low-coherence or low-potential unit vectors."""
    config = _build_config(n, d, field, objective, m, seed, restarts, iters, p_schedule, step, tol, jobs)
    sentry_sdk.set_context("command", {"name": "optimize", **config.model_dump(mode="json")})
    result = optimize(config)
    certificate = result.certificate

    if json_path != "-":
        click.echo(f"objective: {result.objective.value} (order {result.order})")
        click.echo(f"achieved: {format_number(result.achieved)}")
        click.echo(f"certificate: {certificate.name} = {format_number(certificate.value)}")
        click.echo(f"gap: {format_number(certificate.gap)}")
        click.echo(f"coherence: {format_number(result.coherence)}, potential: {format_number(result.potential)}")
        click.echo(f"equiangular: {format_number(result.equiangular)}, tight: {format_number(result.tight)}")
        click.echo(f"best restart: {result.best_restart} of {len(result.restart_values)}")
    if out is not None:
        save_frame(result.frame, out)
    write_json(_result_document(config, result), json_path)

    if certificate.gap < -CERTIFICATE_SLACK:
        click.echo(f"Achieved value is below the certificate {certificate.name}", err=True)
        ctx.exit(EXIT_VIOLATION)


@click.command("gradient-check")
@_optimizer_options
@click.option("--probe-seed", type=int, default=0, show_default=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False, allow_dash=True),
              help="Write the report as JSON ('-' for standard output)")
@click.pass_context
def gradient_check_command(ctx: click.Context, n, d, field, objective, m, p_schedule, probe_seed, json_path):
    """Compare analytic objective gradients with finite differences."""
    config = _build_config(n, d, field, objective, m, 0, 1, 1, p_schedule, 0.1, 1e-10, 1)
    report = gradient_check(config, probe_seed)
    if json_path != "-":
        for entry in report.entries:
            label = "potential" if entry.p is None else f"p={format_number(entry.p)}"
            status = "ok" if entry.passed else "FAILED"
            click.echo(f"{label}: max relative error {format_number(entry.max_rel_error)} {status}")
        click.echo(f"Riemannian gradient norm: {format_number(report.gradient_norm)}")
    write_json(report, json_path)
    if not report.passed:
        ctx.exit(EXIT_VIOLATION)
