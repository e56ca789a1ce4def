import pytest

import procgen
from group_core import BsPresentation


@pytest.fixture
def bs23():
	return BsPresentation(2, 3)


@pytest.fixture
def bs2m3():
	return BsPresentation(2, -3)


@pytest.fixture
def bs2m2():
	return BsPresentation(2, -2)


@pytest.fixture
def rng():
	return procgen.make_rng(20211130)
