import logging
import os
from unittest.mock import MagicMock, patch

import pytest

from welchkit.config import get_setting, is_feature_enabled, set_feature
from welchkit.errors import NumericFailureError, SingularOperatorError
from welchkit.models import BoundReport
from welchkit.services.analysis import analyze_frame


@pytest.fixture
def restore_flags():
    from welchkit.config import FEATURE_FLAGS

    saved = dict(FEATURE_FLAGS)
    yield
    FEATURE_FLAGS.clear()
    FEATURE_FLAGS.update(saved)


def test_feature_flags(restore_flags):
    """Test flags default off and can be flipped at runtime."""
    assert not is_feature_enabled("ENABLE_SENTRY")
    assert not is_feature_enabled("NO_SUCH_FLAG")

    set_feature("DEBUG_LOGGING", True)
    assert is_feature_enabled("DEBUG_LOGGING")

    assert get_setting("JOBS") == 1
    assert get_setting("EIGEN_METHOD") == "jacobi"
    with pytest.raises(KeyError):
        get_setting("NO_SUCH_SETTING")


def test_equality_tolerance_setting():
    """Test bound reports pick up WELCHKIT_EQUALITY_TOL when no tolerance is given."""
    with patch.dict("welchkit.config.features.SETTINGS", {"EQUALITY_TOL": 1e-2}):
        loose = BoundReport.evaluate("welch_integral", 1.005, 1.0)
    strict = BoundReport.evaluate("welch_integral", 1.005, 1.0)

    # Verify results
    assert loose.tolerance == 1e-2 and loose.equality
    assert strict.tolerance == 1e-6 and not strict.equality
    assert strict.satisfied


def test_sentry_disabled_by_default(restore_flags):
    """Test Sentry stays off without the flag or a DSN."""
    from welchkit.sentry import init_sentry

    with patch("welchkit.sentry.sentry_sdk.init") as mock_init:
        assert init_sentry() is False
        set_feature("ENABLE_SENTRY", True)
        with patch.dict("welchkit.config.features.SETTINGS", {"SENTRY_DSN": None}):
            assert init_sentry() is False
        mock_init.assert_not_called()


def test_sentry_enabled(restore_flags):
    """Test Sentry is initialized with the DSN, environment and release."""
    from welchkit.sentry import init_sentry

    set_feature("ENABLE_SENTRY", True)
    settings = {"SENTRY_DSN": "https://key@example.invalid/1", "ENVIRONMENT": "testing"}
    with patch.dict("welchkit.config.features.SETTINGS", settings), \
            patch("welchkit.sentry.sentry_sdk.init") as mock_init:
        assert init_sentry() is True

        # Verify results
        mock_init.assert_called_once()
        kwargs = mock_init.call_args.kwargs
        assert kwargs["dsn"] == settings["SENTRY_DSN"]
        assert kwargs["environment"] == "testing"
        assert kwargs["release"] == "welchkit@1.0.0"


def test_configure_logging(restore_flags):
    """Test the log level follows WELCHKIT_LOG_LEVEL and DEBUG_LOGGING."""
    from welchkit.main import configure_logging

    with patch("welchkit.main.logging.basicConfig") as mock_config:
        with patch.dict("welchkit.config.features.SETTINGS", {"LOG_LEVEL": "INFO"}):
            configure_logging()
        assert mock_config.call_args.kwargs["level"] == logging.INFO

        set_feature("DEBUG_LOGGING", True)
        configure_logging()
        assert mock_config.call_args.kwargs["level"] == logging.DEBUG
        assert "%(name)s" in mock_config.call_args.kwargs["format"]


@pytest.mark.parametrize("error,code", [
    (NumericFailureError("Jacobi did not converge"), 1),
    (SingularOperatorError("S is singular"), 1),
    (RuntimeError("boom"), 1),
])
def test_errors_map_to_exit_codes(runner, cli, error, code):
    """Test unexpected and numeric failures exit 1 and reach Sentry."""
    with patch("welchkit.commands.analyze.analyze_frame", side_effect=error), \
            patch("welchkit.commands.base.sentry_sdk.capture_exception") as mock_capture:
        result = runner.invoke(cli, ["analyze", "--builtin", "onb:3"])

        # Verify results
        assert result.exit_code == code
        mock_capture.assert_called_once_with(error)


def test_violation_exits_1(runner, cli):
    """Test a violated bound in the report gives exit code 1."""
    def broken_report(frame, source, **kwargs):
        report = analyze_frame(frame, source, **kwargs)
        broken = BoundReport.evaluate("welch_integral", 1.0, 2.0, m_or_p=1)
        return report.model_copy(update={"bounds": [broken] + report.bounds[1:]})

    with patch("welchkit.commands.analyze.analyze_frame", side_effect=broken_report):
        result = runner.invoke(cli, ["analyze", "--builtin", "onb:3"])
    assert result.exit_code == 1
    assert "VIOLATED" in result.output


def test_main_reports_unexpected_errors():
    """Test main() returns 1 and reports an exception raised outside click."""
    from welchkit import main as entry

    failing = MagicMock()
    failing.main.side_effect = RuntimeError("broken")
    with patch.object(entry, "create_cli", return_value=failing), \
            patch.object(entry, "init_sentry"), \
            patch.object(entry.sentry_sdk, "capture_exception") as mock_capture:
        assert entry.main(["bounds"]) == 1
        mock_capture.assert_called_once()


def test_verbose_flag(runner, cli):
    """Test --verbose raises the package log level to INFO."""
    package_logger = logging.getLogger("welchkit")
    previous = package_logger.level
    try:
        result = runner.invoke(cli, ["--verbose", "bounds", "--n", "3", "--d", "2"])
        assert result.exit_code == 0, result.output
        assert package_logger.level == logging.INFO
    finally:
        package_logger.setLevel(previous)


@pytest.mark.parametrize("raw,expected", [
    (None, 1),
    ("", 1),
    ("4", 4),
    ("four", 1),
    ("0", 1),
    ("-2", 1),
])
def test_env_int_falls_back(raw, expected):
    """Test malformed integer settings fall back to the default."""
    from welchkit.config.features import _env_int

    env = {} if raw is None else {"WELCHKIT_JOBS": raw}
    with patch.dict("os.environ", env):
        if raw is None:
            os.environ.pop("WELCHKIT_JOBS", None)
        with patch("welchkit.config.features.logger") as mock_logger:
            assert _env_int("WELCHKIT_JOBS", 1) == expected
            assert mock_logger.warning.called == (raw not in (None, "", "4"))


@pytest.mark.parametrize("raw,expected", [
    ("1e-3", 1e-3),
    ("tight", 1e-6),
    ("nan", 1e-6),
    ("inf", 1e-6),
    ("-1e-3", 1e-6),
])
def test_env_float_falls_back(raw, expected):
    """Test malformed tolerance settings fall back to the default with a warning."""
    from welchkit.config.features import _env_float

    with patch.dict("os.environ", {"WELCHKIT_EQUALITY_TOL": raw}), \
            patch("welchkit.config.features.logger") as mock_logger:
        assert _env_float("WELCHKIT_EQUALITY_TOL", 1e-6) == expected

        # Verify results
        assert mock_logger.warning.called == (raw != "1e-3")
