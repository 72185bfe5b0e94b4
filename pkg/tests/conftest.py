"""
Shared pytest fixtures for all tests.

Provides reusable fixtures for:
- Temporary configuration directories
- The linear order function and the quartic test function
"""

import shutil
import tempfile
import os

import pytest

from varfrac.config import ConfigManager
from varfrac.expansion import clear_moment_cache
from tests.support import linear_order, quartic, write_config_dir


@pytest.fixture
def temp_config_dir():
    """Temporary config directory with valid domain files."""
    temp_dir = tempfile.mkdtemp()
    config_dir = write_config_dir(os.path.join(temp_dir, 'config'))
    yield config_dir
    shutil.rmtree(temp_dir)


@pytest.fixture
def config_manager(temp_config_dir):
    """ConfigManager over the temporary config directory."""
    return ConfigManager(config_dir=temp_config_dir)


@pytest.fixture
def order():
    return linear_order()


@pytest.fixture
def quartic_function():
    return quartic()


@pytest.fixture(autouse=True)
def fresh_moment_cache():
    """Moments are cached by function identity; start every test clean."""
    clear_moment_cache()
    yield
