"""Bareiss characteristic polynomials over Z[sqrt(2)]."""

import random

import numpy as np
import pytest

from bihindex.exact import QuadExt
from bihindex.matrices import (
    AsymmetricMatrixError,
    ExactMatrix,
    IrrationalCoefficientError,
    charpoly_exact,
    diagonal,
)
from bihindex.polynomials import IntPolynomial


def test_symmetry_enforced():
    with pytest.raises(AsymmetricMatrixError):
        ExactMatrix([[1, 2], [3, 4]])
    m = ExactMatrix([[1, 2], [2, 4]])
    assert m.order == 2
    assert m[0, 1] == QuadExt(2)


def test_charpoly_small_cases():
    assert charpoly_exact(diagonal([1, 1])) == IntPolynomial([1, -2, 1])
    # the degree-zero circle block at k = 1
    assert charpoly_exact(diagonal([0, -1])) == IntPolynomial([0, 1, 1])
    assert charpoly_exact(diagonal([2, 3, 5])) == IntPolynomial([-30, 31, -10, 1])


def test_charpoly_sqrt2_entries_cancel():
    # [[0, sqrt2], [sqrt2, 0]] has charpoly x^2 - 2
    r2 = QuadExt(0, 1)
    m = ExactMatrix([[QuadExt(0), r2], [r2, QuadExt(0)]])
    assert charpoly_exact(m) == IntPolynomial([-2, 0, 1])


def test_charpoly_irrational_coefficient_detected():
    r2 = QuadExt(0, 1)
    m = ExactMatrix([[r2, QuadExt(0)], [QuadExt(0), QuadExt(1)]])
    with pytest.raises(IrrationalCoefficientError):
        charpoly_exact(m)


def _random_symmetric(rng: random.Random, order: int) -> ExactMatrix:
    """Random symmetric matrix whose charpoly is rational: conjugation-stable
    entries (rational diagonal blocks with sqrt(2) couplings arranged as in
    the package's blocks would be overkill -- plain rational entries here)."""
    rows = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(i, order):
            v = rng.randint(-9, 9)
            rows[i][j] = v
            rows[j][i] = v
    return ExactMatrix(rows)


def test_charpoly_matches_numpy_eigenvalues():
    rng = random.Random(5)
    for order in (2, 3, 4, 5, 6):
        for _ in range(10):
            m = _random_symmetric(rng, order)
            p = charpoly_exact(m)
            assert p.degree == order
            assert p.leading() == 1
            ev = np.linalg.eigvalsh(m.to_numpy())
            # det(xI - M) vanishes at each numerical eigenvalue
            for lam in ev:
                vals = [float(c) for c in p.coeffs]
                acc = 0.0
                for c in reversed(vals):
                    acc = acc * lam + c
                scale = max(1.0, max(abs(v) for v in vals)) * max(1.0, abs(lam)) ** order
                assert abs(acc) <= 1e-8 * scale


def test_charpoly_trace_and_det_coefficients():
    rng = random.Random(8)
    m = _random_symmetric(rng, 5)
    p = charpoly_exact(m)
    trace = sum(m[i, i].a for i in range(5))
    assert p.coeffs[4] == -trace
    det_float = float(np.linalg.det(m.to_numpy()))
    assert abs((-1) ** 5 * p.coeffs[0] - det_float) < 1e-6 * max(1.0, abs(det_float))


def test_charpoly_exact_root_evaluation():
    # matrix with known integer spectrum: diag(7, -3, 0)
    p = charpoly_exact(diagonal([7, -3, 0]))
    for lam in (7, -3, 0):
        assert p(lam) == 0
