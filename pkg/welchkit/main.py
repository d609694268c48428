import logging
import sys
import traceback

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

import sentry_sdk  # noqa: E402

from . import create_cli  # noqa: E402
from .commands.base import EXIT_VIOLATION  # noqa: E402
from .config import get_setting, is_feature_enabled  # noqa: E402
from .sentry import init_sentry  # noqa: E402

logger = logging.getLogger(__name__)


def configure_logging() -> None:
    """Log to standard error so standard output stays a clean report."""
    level = logging.DEBUG if is_feature_enabled("DEBUG_LOGGING") else getattr(
        logging, get_setting("LOG_LEVEL"), logging.WARNING
    )
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )


def main(argv=None) -> int:
    """Console entry point."""
    configure_logging()
    init_sentry()
    cli = create_cli()
    try:
        cli.main(args=argv, prog_name="welchkit", standalone_mode=True)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_VIOLATION
    except Exception as e:
        logger.error(f"welchkit failed: {str(e)}")
        logger.error(traceback.format_exc())
        sentry_sdk.capture_exception(e)
        return EXIT_VIOLATION
    return 0


if __name__ == '__main__':
    sys.exit(main())
