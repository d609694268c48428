import logging

import sentry_sdk

from .config import get_setting, is_feature_enabled

logger = logging.getLogger(__name__)


def init_sentry() -> bool:
    """
    Initialize Sentry when ENABLE_SENTRY is on and SENTRY_DSN is set.

    Returns:
        True if Sentry was initialized
    """
    from . import __version__

    dsn = get_setting("SENTRY_DSN")
    if not is_feature_enabled("ENABLE_SENTRY") or not dsn:
        return False

    sentry_sdk.init(
        dsn=dsn,
        environment=get_setting("ENVIRONMENT"),
        release=f"welchkit@{__version__}",
        send_default_pii=False,
    )
    logger.info("Sentry error reporting enabled")
    return True
