"""
Shared pytest setup
Tests never touch the user's Groebner basis cache; @pytest.mark.slow tests
run only with CMDEF_LAB_RUN_SLOW=true
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from cmdef_lab.config import settings
from cmdef_lab.groebner.cache import set_cache_enabled


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large instances, enabled by CMDEF_LAB_RUN_SLOW=true")


def pytest_collection_modifyitems(config, items):
    if settings.run_slow:
        return
    skip_slow = pytest.mark.skip(reason="set CMDEF_LAB_RUN_SLOW=true for the large instances")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def no_basis_cache():
    set_cache_enabled(False)
    yield
    set_cache_enabled(False)
