"""
welchkit: continuous Welch bounds, frame metrics and packing search.
"""

import logging

import click
from dotenv import load_dotenv

load_dotenv()

from .commands import (  # noqa: E402
    analyze_command,
    bounds_command,
    circle_example_command,
    gradient_check_command,
    optimize_command,
)
from .commands.base import WelchkitGroup  # noqa: E402

__version__ = "1.0.0"

logger = logging.getLogger(__name__)


def create_cli() -> click.Group:
    """Create and configure the command-line interface."""

    @click.group(cls=WelchkitGroup)
    @click.version_option(__version__, prog_name="welchkit")
    @click.option("--verbose", is_flag=True, help="Log progress at INFO level to standard error")
    def cli(verbose: bool):
        """Continuous Welch bounds toolkit."""
        if verbose:
            logging.getLogger("welchkit").setLevel(logging.INFO)
            logger.info("Verbose logging enabled")

    cli.add_command(bounds_command)
    cli.add_command(analyze_command)
    cli.add_command(optimize_command)
    cli.add_command(gradient_check_command)
    cli.add_command(circle_example_command)
    return cli
