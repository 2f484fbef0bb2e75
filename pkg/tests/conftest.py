import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from chowlab.verify.config import ChowlabSettings, get_settings  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drops the cached settings so each test sees its own environment."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings():
    return ChowlabSettings(_env_file=None)
