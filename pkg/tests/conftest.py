import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qalg.expr import evaluate  # noqa: E402


def ev(text):
    return evaluate(text)[0]


@pytest.fixture
def e():
    return ev
