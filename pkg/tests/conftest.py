from pathlib import Path

import pytest

from tropdet import IntMatrix, parse_matrix_text

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def member_5x10() -> IntMatrix:
    """Reference member of the (k=1, l=2, m=6, n=5) family with tdet 9."""
    return parse_matrix_text((FIXTURES / "member_5x10.txt").read_text())


@pytest.fixture(scope="session")
def member_10x15() -> IntMatrix:
    """Reference member of the (k=2, l=3, m=6, n=5) family with tdet 19."""
    return parse_matrix_text((FIXTURES / "member_10x15.txt").read_text())


@pytest.fixture
def fixture_path():
    def _path(name: str) -> str:
        return str(FIXTURES / name)

    return _path
