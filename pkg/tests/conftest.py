import pytest

from lmrttg import verify_seven_pairs


@pytest.fixture(scope="session")
def seven_pairs_report():
    """The exhaustive seven-pairs scan, run once per session."""
    return verify_seven_pairs()
