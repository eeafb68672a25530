from fractions import Fraction

import pytest

from qoscpoly import QContext


@pytest.fixture
def ctx_q14():
    """q = 1/4 (s = 1/2), omega = 1/8, omega0 = 1/6."""
    return QContext(Fraction(1, 2), Fraction(1, 8))


@pytest.fixture
def ctx_q12():
    """q = 1/2 built directly from q (no rational base root)."""
    return QContext.from_q(Fraction(1, 2))


@pytest.fixture
def ctx_q916():
    """q = 9/16 (s = 3/4), omega = 1/8."""
    return QContext(Fraction(3, 4), Fraction(1, 8))
