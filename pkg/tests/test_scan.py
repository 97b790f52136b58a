"""Fast-lane conjecture scan: exactness, determinism, the near-tie family."""

import os

import pytest

from bihindex.scan import (
    ScanRow,
    _AMBIGUITY,
    _prefilter_numpy,
    conjecture_scan,
    flagged_rows,
    scan_row,
    scan_row_with_pairs,
)
from bihindex.torus import discriminant, interior_sign_scan, min_abs_interior_discriminant


def test_fast_scan_matches_exact_scan():
    for k in range(1, 41):
        f, g, neg, zero = interior_sign_scan(k)
        row = scan_row(k)
        assert (row.f, row.g) == (f, g), k
        row2, neg2, zero2 = scan_row_with_pairs(k)
        assert row2 == row
        assert neg2 == sorted(neg)
        assert zero2 == sorted(zero)


def test_numpy_prefilter_path_matches_exact():
    # the fallback lane, exercised directly regardless of numba availability
    for k in (1, 2, 7, 19, 33, 50):
        certain, ambiguous = _prefilter_numpy(k)
        f = len(certain)
        g = 0
        for m, n in ambiguous:
            d = discriminant(k, m, n)
            if d < 0:
                f += 1
            elif d == 0:
                g += 1
        fe, ge, _, _ = interior_sign_scan(k)
        assert (f, g) == (fe, ge), k


def test_certain_pairs_are_certainly_signed():
    # every pair the prefilter calls certain must be far beyond the threshold
    for k in (120, 200):
        certain, ambiguous = _prefilter_numpy(k)
        for m, n in certain[::max(1, len(certain) // 50)]:
            assert discriminant(k, m, n) < 0
        for m, n in ambiguous:
            assert abs(discriminant(k, m, n)) < 2 * _AMBIGUITY


def test_conjecture_scan_small_range():
    rows = conjecture_scan(10)
    assert [r.k for r in rows] == list(range(1, 11))
    assert all(r.g == 0 and r.nullity == 5 for r in rows)
    assert flagged_rows(rows) == []
    assert rows[1] == ScanRow(k=2, f=2, g=0, index=13, nullity=5)


def test_conjecture_scan_workers_deterministic():
    solo = conjecture_scan(12, workers=1)
    duo = conjecture_scan(12, workers=2)
    assert solo == duo


def test_near_tie_at_k192_is_exactly_nonzero():
    # the closest approach to a vanishing interior branch in this range:
    # |D| ~ 2e14 at (100, 185), about 1e15 times smaller than the term scale,
    # well inside the exact lane (threshold 1e18) -- and provably nonzero
    d, arg = min_abs_interior_discriminant(192, m_range=(95, 105), n_range=(180, 190))
    assert (d, arg) == (193615494292225, (100, 185))
    assert scan_row(192).g == 0


def test_true_value_at_k155():
    # exact enumeration over the certified bound; see the acceptance module
    # for the relation of this number to the reference table
    row = scan_row(155)
    assert row.f == 22176
    assert row.index == 89321
    assert row.nullity == 5
    # dual-route confirmation through the pure integer scan
    f, g, neg, _ = interior_sign_scan(155)
    assert (f, g) == (22176, 0)
    assert max(m for m, _ in neg) == 160  # negative pairs reach beyond m = k


def test_scan_row_rejects_bad_range():
    with pytest.raises(ValueError):
        conjecture_scan(0)
    with pytest.raises(ValueError):
        conjecture_scan(5, k_min=9)


@pytest.mark.slow
@pytest.mark.skipif(
    not os.environ.get("BIHINDEX_FULL_SCAN"),
    reason="full k<=1500 scan: set BIHINDEX_FULL_SCAN=1 (a few minutes single worker)",
)
def test_full_conjecture_scan_to_1500():
    rows = conjecture_scan(1500)
    assert flagged_rows(rows) == []
    assert all(r.nullity == 5 for r in rows)
