"""Shared fixtures: the two matrices every golden test revolves around."""

import numpy as np
import pytest

from bandpos import make_pentadiagonal, make_tridiagonal


def a_eps(eps: float):
    """tridiag([1, 2+eps, 1], [1, 1]): PD for eps > 0 with determinant eps;
    its Hadamard r-th power has determinant (2+eps)**r - 2."""
    return make_tridiagonal([1.0, 2.0 + eps, 1.0], [1.0, 1.0])


@pytest.fixture
def a01():
    return a_eps(0.1)


@pytest.fixture
def p_matrix():
    """The 5x5 PSD pentadiagonal whose powered determinant is
    2 - 3*2**r + 4**r."""
    return make_pentadiagonal([1.0, 2.0, 2.0, 1.0, 1.0], [1.0, 1.0, 1.0])


P_DENSE = np.array(
    [
        [1.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 2.0, 0.0, 1.0, 0.0],
        [1.0, 0.0, 2.0, 0.0, 1.0],
        [0.0, 1.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 1.0],
    ]
)
