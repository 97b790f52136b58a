"""Root counting: Sturm counts against constructed-root and bisection oracles."""

import random
from fractions import Fraction

import pytest

from bihindex.polynomials import (
    IntPolynomial,
    count_distinct_real_roots,
    count_roots,
    count_roots_with_multiplicity,
    squarefree_decomposition,
    zero_root_multiplicity,
)


def test_basic_algebra():
    p = IntPolynomial([1, 2, 3])
    q = IntPolynomial([0, 1])
    assert (p * q).coeffs == (0, 1, 2, 3)
    assert (p + q).coeffs == (1, 3, 3)
    assert p(2) == 1 + 4 + 12
    assert p(Fraction(1, 2)) == Fraction(11, 4)
    assert p.derivative().coeffs == (2, 6)
    assert (q**3).coeffs == (0, 0, 0, 1)
    assert IntPolynomial([0, 0]).is_zero()


def test_count_roots_examples():
    assert count_roots(IntPolynomial([-1, 0, 1]), "negative") == 1  # x^2 - 1
    assert count_roots(IntPolynomial([-1, 0, 1]), "positive") == 1
    assert count_roots(IntPolynomial([0, 0, 1]), "zero") == 2       # x^2
    assert count_roots(IntPolynomial([2, 0, 1]), "negative") == 0   # x^2 + 2
    assert count_roots(IntPolynomial([0, 1, 1]), "negative") == 1   # x(x+1)
    assert count_roots(IntPolynomial([0, 1, 1]), "zero") == 1


def _poly_from_linear_factors(factors):
    """prod (q x - p) as an IntPolynomial, factors given as Fractions p/q."""
    p = IntPolynomial([1])
    for root in factors:
        p = p * IntPolynomial([-root.numerator, root.denominator])
    return p


def test_counts_against_constructed_roots():
    rng = random.Random(2024)
    for trial in range(200):
        n_lin = rng.randint(1, 4)
        roots = []
        for _ in range(n_lin):
            num = rng.randint(-6, 6)
            den = rng.randint(1, 4)
            mult = rng.randint(1, 3)
            roots.extend([Fraction(num, den)] * mult)
        p = _poly_from_linear_factors(roots)
        # optionally multiply by an irreducible quadratic (no real roots)
        if rng.random() < 0.5:
            a = rng.randint(1, 3)
            b = rng.randint(-2, 2)
            c = rng.randint(1, 4) + b * b  # discriminant b^2 - 4ac < 0 since 4ac > b^2
            p = p * IntPolynomial([c, b, a])
        distinct = set(roots)
        neg_d = sum(1 for r in distinct if r < 0)
        pos_d = sum(1 for r in distinct if r > 0)
        zero_m = sum(1 for r in roots if r == 0)
        neg_m = sum(1 for r in roots if r < 0)
        pos_m = sum(1 for r in roots if r > 0)
        assert count_roots(p, "negative") == neg_d, (trial, roots)
        assert count_roots(p, "positive") == pos_d
        assert count_roots(p, "zero") == zero_m
        assert count_roots_with_multiplicity(p, "negative") == neg_m
        assert count_roots_with_multiplicity(p, "positive") == pos_m
        assert count_distinct_real_roots(p) == len(distinct)


def _bisection_root_count(p: IntPolynomial, lo: float, hi: float, depth: int = 60) -> int:
    """Count sign-change roots of a squarefree polynomial in (lo, hi)."""

    def ev(x: float) -> float:
        out = 0.0
        for c in reversed(p.coeffs):
            out = out * x + c
        return out

    # subdivide; squarefree + simple roots means sign changes find them all
    pieces = 4096
    xs = [lo + (hi - lo) * i / pieces for i in range(pieces + 1)]
    vals = [ev(x) for x in xs]
    count = 0
    for i in range(pieces):
        a, b = vals[i], vals[i + 1]
        if a == 0.0:
            continue
        if a * b < 0:
            count += 1
    return count


def test_sturm_against_bisection_oracle():
    # 200 random squarefree-by-construction polynomials of degree <= 6 with
    # distinct integer-spaced roots, away from the sampling grid pathologies
    rng = random.Random(99)
    for _ in range(200):
        deg = rng.randint(1, 6)
        roots = rng.sample(range(-8, 9), deg)
        p = _poly_from_linear_factors([Fraction(r) for r in roots])
        # roots live in [-8, 8] by construction; grid spacing << 1 finds them all
        neg = _bisection_root_count(p, -9.5, -1e-9)
        pos = _bisection_root_count(p, 1e-9, 9.5)
        assert count_roots(p, "negative") == neg
        assert count_roots(p, "positive") == pos


def test_squarefree_decomposition_structure():
    # (x-1)^2 (x+2)^3 x
    p = (
        IntPolynomial([-1, 1]) ** 2
        * IntPolynomial([2, 1]) ** 3
        * IntPolynomial([0, 1])
    )
    decomp = squarefree_decomposition(p)
    mults = sorted(m for m, _ in decomp)
    assert mults == [1, 2, 3]
    assert zero_root_multiplicity(p) == 1
    assert count_roots_with_multiplicity(p, "negative") == 3
    assert count_roots_with_multiplicity(p, "positive") == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        count_roots(IntPolynomial([]), "negative")


def test_high_degree_big_coefficients():
    # (x - 10^9)^2 (x + 10^9) has exact big-int arithmetic throughout
    big = 10**9
    p = IntPolynomial([-big, 1]) ** 2 * IntPolynomial([big, 1])
    assert count_roots_with_multiplicity(p, "positive") == 2
    assert count_roots_with_multiplicity(p, "negative") == 1
    assert p(big) == 0 and p(-big) == 0
    assert p(big + 1) == (big + 1 + big)
