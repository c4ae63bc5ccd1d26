import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gradedlc import CMonomial, CMonomialIdeal, FIELD, GRADED_PID, generate_corpus


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(seed=42, n=50)


@pytest.fixture
def axes_ideal():
    # (X1, X2) over a field
    return CMonomialIdeal(2, FIELD, (CMonomial(0, (1, 0)), CMonomial(0, (0, 1))))


@pytest.fixture
def product_ideal():
    # (X1*X2) over a field
    return CMonomialIdeal(2, FIELD, (CMonomial(0, (1, 1)),))


@pytest.fixture
def yx_ideal():
    # (Y*X) over K[Y]
    return CMonomialIdeal(1, GRADED_PID, (CMonomial(1, (1,)),))


@pytest.fixture
def yx1_x2_ideal():
    # (Y*X1, X2) over K[Y]
    return CMonomialIdeal(2, GRADED_PID, (CMonomial(1, (1, 0)), CMonomial(0, (0, 1))))
