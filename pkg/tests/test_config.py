"""
Tests for settings and logging setup
"""

import logging

from greedykit.core.config import Settings
from greedykit.core.logging_config import setup_logging


def test_settings_defaults():
    s = Settings(_env_file=None)

    assert s.ORACLE_CAP == 10_000_000
    assert s.VIOLATION_TOLERANCE == 1e-9
    assert s.LOG_LEVEL == "WARNING"


def test_settings_read_prefixed_environment(monkeypatch):
    monkeypatch.setenv("GREEDYKIT_ORACLE_CAP", "500")
    monkeypatch.setenv("GREEDYKIT_BENCH_WORKERS", "4")

    s = Settings(_env_file=None)
    assert s.ORACLE_CAP == 500
    assert s.BENCH_WORKERS == 4


def test_setup_logging_sets_level():
    setup_logging("debug")
    assert logging.getLogger().level == logging.DEBUG

    setup_logging("WARNING")
    assert logging.getLogger().level == logging.WARNING
