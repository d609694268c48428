import os

import pytest
from click.testing import CliRunner

# Set environment variables for testing
os.environ['ENABLE_SENTRY'] = 'false'
os.environ['WELCHKIT_JOBS'] = '1'
os.environ['WELCHKIT_EIGEN_METHOD'] = 'jacobi'
os.environ['WELCHKIT_EQUALITY_TOL'] = '1e-6'
os.environ['DEBUG_LOGGING'] = 'false'

from welchkit import create_cli  # noqa: E402
from welchkit.services.frames import builtin  # noqa: E402

from tests.helpers import random_frame  # noqa: E402


@pytest.fixture
def runner():
    """click runner with standard error kept apart from standard output."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def cli():
    return create_cli()


@pytest.fixture
def onb3():
    return builtin("onb", d=3)


@pytest.fixture
def sic():
    return builtin("sic_d2")


@pytest.fixture
def circle():
    return builtin("cos_sin", n_nodes=513)


@pytest.fixture(params=range(0, 100, 9))
def sweep_frame(request):
    """A slice of the 100-frame sweep for per-frame tests."""
    return random_frame(request.param)


@pytest.fixture
def bad_frame_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"field": "R", "dim": 2, "nodes": [{"weight": -1.0, "vector": [1.0, 0.0]}]}')
    return path
