import pytest

from ncdegen.combinatorics import build_dual_complex


@pytest.fixture(scope="session")
def dual_complex():
    return build_dual_complex()
