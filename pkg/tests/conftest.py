import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from superlie.corpus import assoc_algebra, lie_algebra


@pytest.fixture(scope="session")
def heis():
    return lie_algebra("heis")


@pytest.fixture(scope="session")
def gl11():
    return lie_algebra("gl11")


@pytest.fixture(scope="session")
def sl21():
    return lie_algebra("sl21")


@pytest.fixture(scope="session")
def sl30():
    return lie_algebra("sl30")


@pytest.fixture(scope="session")
def m11():
    return assoc_algebra("m11")
