#!/usr/bin/env python3
"""Pytest configuration and fixtures for the lefschetz-mci tests"""

import json
import os
import sys
import tempfile
from pathlib import Path

import pytest
from hypothesis import settings

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from core.config.models import CensusPreset, LefschetzConfig

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def temp_dir():
    """Provide a temporary directory for tests"""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def test_config():
    """Provide a test configuration"""
    return LefschetzConfig(
        jobs=1,
        log_level="DEBUG",
        presets={"tiny": CensusPreset(n_values=[1], dmax=3, pmax=3, property="slp", description="tiny sweep")},
    )


@pytest.fixture
def sample_config_file(temp_dir, test_config):
    """Create a sample configuration file for testing"""
    config_file = temp_dir / "lefschetz.json"
    with open(config_file, 'w') as f:
        json.dump(test_config.to_dict(), f)
    return config_file


# Pytest configuration
def pytest_configure(config):
    """Configure pytest"""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (run with --run-slow)"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests (run with --run-integration)"
    )


def pytest_collection_modifyitems(config, items):
    """Add markers to tests based on their paths"""
    for item in items:
        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)


# Custom pytest options
def pytest_addoption(parser):
    """Add custom pytest options"""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run slow tests"
    )
    parser.addoption(
        "--run-integration",
        action="store_true",
        default=False,
        help="run integration tests"
    )


def pytest_runtest_setup(item):
    """Skip tests based on custom options"""
    if "slow" in item.keywords and not item.config.getoption("--run-slow"):
        pytest.skip("need --run-slow option to run")

    if "integration" in item.keywords and not item.config.getoption("--run-integration"):
        pytest.skip("need --run-integration option to run")
