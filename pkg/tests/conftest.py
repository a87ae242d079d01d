import os
import sys

import pytest

HERE = os.path.dirname(__file__)
GOLDEN = os.path.join(HERE, "golden")

if HERE not in sys.path:
    sys.path.insert(0, HERE)


@pytest.fixture
def golden_dir():
    return GOLDEN
