"""Circle family: blocks, eigenvalue identification with the torus axis, counts."""

import math

import numpy as np
import pytest

from bihindex.circle import (
    CircleLabel,
    circle_block,
    circle_eigenvalue,
    circle_index_nullity,
    circle_index_nullity_by_matrices,
)
from bihindex.torus import InvalidLabelError, block_matrix, eigenvalue


def test_zero_mode_block():
    for k in (1, 2, 7):
        arr = circle_block(k, 0).to_numpy()
        assert arr.tolist() == [[0.0, 0.0], [0.0, -float(k**4)]]


def test_block_entries():
    b = circle_block(3, 2)
    # off-diagonal +-2 sqrt(2) k m^3 with k = 3, m = 2
    assert float(b[0, 3]) == pytest.approx(-2 * math.sqrt(2) * 3 * 8)
    assert float(b[2, 1]) == pytest.approx(2 * math.sqrt(2) * 3 * 8)
    assert float(b[0, 0]) == 4 * (4 + 27)
    assert float(b[2, 2]) == 16 + 2 * 9 * 4 - 81


def test_block_equals_torus_axis_block():
    for k in range(1, 21):
        for m in range(1, 21):
            assert circle_block(k, m) == block_matrix(k, m, 0), (k, m)


def test_eigenvalues_equal_torus_axis_values():
    for k in range(1, 26):
        for m in range(1, 26):
            for branch in ("plus", "minus"):
                assert circle_eigenvalue(k, m, branch) == eigenvalue(k, m, 0, branch)


def test_index_nullity_formula():
    assert circle_index_nullity(1) == (1, 3)
    assert circle_index_nullity(3) == (5, 3)
    assert circle_index_nullity(50) == (99, 3)
    for k in range(1, 26):
        assert circle_index_nullity(k) == (1 + 2 * (k - 1), 3)


def test_matrix_counting_path_agrees():
    for k in range(1, 13):
        assert circle_index_nullity_by_matrices(k) == circle_index_nullity(k)


def test_block_eigenvalues_numeric():
    for k in (2, 5):
        for m in (1, 3, 8):
            ev = np.sort(np.linalg.eigvalsh(circle_block(k, m).to_numpy()))
            lam = float(circle_eigenvalue(k, m, "minus"))
            lap = float(circle_eigenvalue(k, m, "plus"))
            expected = np.sort([lam, lam, lap, lap])
            assert np.allclose(ev, expected, rtol=1e-10, atol=1e-9)


def test_label_validation():
    with pytest.raises(InvalidLabelError):
        CircleLabel(0, 1)
    with pytest.raises(InvalidLabelError):
        CircleLabel(1, -1)
