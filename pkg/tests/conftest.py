import pytest

from zpfcross import CosmologyContext


@pytest.fixture(scope="session")
def ctx():
    return CosmologyContext.default()
