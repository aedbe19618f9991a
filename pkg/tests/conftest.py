"""Shared fixtures: frozen reference matrices for n=10, k=3."""

import pytest

# Ternary seed for n=10, k=3: unit top row, six recursive rows, three
# finishing rows.  Transcribed by evaluating the two row templates by hand.
SEED_10_3 = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, -1, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 1, -1, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 1, -1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 1, -1, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 1, -1, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
)

# Matching unit upper-triangular transform: row 1 is e_1, row i > 1 has
# ones at the columns j >= i with j = i mod 3.
TRANSFORM_10_3 = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

# Orthogonal vector for n=10, k=3: prefix is the 3-step sequence, tail is
# the negated window sums (-44, -37, -24).
V_10_3 = (1, 1, 2, 4, 7, 13, 24, -44, -37, -24)


@pytest.fixture(scope="session")
def seed_10_3():
    return SEED_10_3


@pytest.fixture(scope="session")
def transform_10_3():
    return TRANSFORM_10_3


@pytest.fixture(scope="session")
def v_10_3():
    return V_10_3
