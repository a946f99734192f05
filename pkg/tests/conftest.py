import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mysticum import build_multimysticum, fixture_sextuple


@pytest.fixture(scope="session")
def fixture_m():
    return build_multimysticum(fixture_sextuple(), 8)


@pytest.fixture(scope="session")
def base(fixture_m):
    return fixture_m.base
