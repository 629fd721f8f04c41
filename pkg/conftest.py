import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive runs (set MU_RUN_SLOW=1)")


def pytest_collection_modifyitems(config, items):
    if os.getenv('MU_RUN_SLOW') == '1':
        return
    skip = pytest.mark.skip(reason="set MU_RUN_SLOW=1 to run")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)
