import os

import pytest

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")
N8_FIXTURE = os.path.join(FIXTURE_DIR, "connected_n8.g6")


@pytest.fixture(scope="session")
def n8_fixture_path():
    assert os.path.exists(N8_FIXTURE), "run scripts/make_n8_fixture.py first"
    return N8_FIXTURE
