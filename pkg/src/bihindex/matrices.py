"""Symmetric matrices over Z[sqrt(2)] and fraction-free characteristic polynomials.

The characteristic polynomial det(xI - M) is computed by Bareiss elimination
over Z[sqrt(2)][x].  Every Bareiss pivot is a leading principal minor of
xI - M, hence a monic polynomial, so no pivoting is ever needed and the exact
divisions are plain long divisions by monic divisors.  Every matrix built by
this package has a rational characteristic polynomial; a surviving sqrt(2)
part signals a wrongly assembled matrix and raises.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .exact import QUAD_ONE, QUAD_ZERO, QuadExt
from .polynomials import IntPolynomial


class AsymmetricMatrixError(ValueError):
    """Raised when a constructed block is not symmetric."""


class IrrationalCoefficientError(ValueError):
    """Raised when a characteristic polynomial keeps a sqrt(2) part."""


def _coerce_entry(x: int | QuadExt) -> QuadExt:
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, int):
        return QuadExt(x, 0)
    raise TypeError(f"matrix entry must be int or QuadExt, got {type(x).__name__}")


class ExactMatrix:
    """Square symmetric matrix with entries in Z[sqrt(2))."""

    __slots__ = ("order", "entries")

    def __init__(self, rows: Sequence[Sequence[int | QuadExt]]) -> None:
        entries = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ValueError("matrix must be square")
        if n == 0:
            raise ValueError("matrix must be nonempty")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise AsymmetricMatrixError(
                        f"entry ({i},{j})={entries[i][j]} != ({j},{i})={entries[j][i]}"
                    )
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *_args) -> None:
        raise AttributeError("ExactMatrix is immutable")

    def __getitem__(self, ij: tuple[int, int]) -> QuadExt:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def trace(self) -> QuadExt:
        t = QUAD_ZERO
        for i in range(self.order):
            t = t + self.entries[i][i]
        return t

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)

    def __repr__(self) -> str:
        return f"ExactMatrix(order={self.order})"


# -- polynomials over Z[sqrt(2)], lowest degree first -------------------------

QPoly = list  # list[QuadExt]


def _qp_trim(p: QPoly) -> QPoly:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _qp_mul(p: QPoly, q: QPoly) -> QPoly:
    if not p or not q:
        return []
    out = [QUAD_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _qp_trim(out)


def _qp_sub(p: QPoly, q: QPoly) -> QPoly:
    out = list(p) + [QUAD_ZERO] * (len(q) - len(p))
    for i, b in enumerate(q):
        out[i] = out[i] - b
    return _qp_trim(out)


def _qp_divexact(p: QPoly, d: QPoly) -> QPoly:
    """Exact division; Bareiss guarantees divisibility and monic divisors."""
    if not d:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(p)
    dd = len(d) - 1
    lead = d[-1]
    quo = [QUAD_ZERO] * max(len(p) - dd, 0)
    while r and len(r) - 1 >= dd:
        c = r[-1].divexact(lead)
        shift = len(r) - 1 - dd
        quo[shift] = c
        for i, b in enumerate(d):
            r[shift + i] = r[shift + i] - c * b
        r = _qp_trim(r)
    if r:
        raise ValueError("inexact polynomial division in Bareiss elimination")
    return _qp_trim(quo)


def charpoly_exact(m: ExactMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - M), coefficients in Z.

    Raises IrrationalCoefficientError if any coefficient retains a nonzero
    sqrt(2) part (all blocks assembled by this package must cancel it).
    """
    n = m.order
    # working matrix of polynomials representing xI - M
    a: list[list[QPoly]] = []
    for i in range(n):
        row = []
        for j in range(n):
            e = m.entries[i][j]
            if i == j:
                row.append(_qp_trim([-e, QUAD_ONE]))
            else:
                row.append(_qp_trim([-e]))
        a.append(row)

    prev: QPoly = [QUAD_ONE]
    for k in range(n - 1):
        pivot = a[k][k]  # monic of degree k+1, never zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _qp_sub(_qp_mul(a[i][j], pivot), _qp_mul(a[i][k], a[k][j]))
                a[i][j] = _qp_divexact(num, prev)
        prev = pivot
    det = a[n - 1][n - 1]

    coeffs = []
    for c in det:
        if not c.is_rational():
            raise IrrationalCoefficientError(
                f"characteristic polynomial coefficient {c} has a sqrt(2) part"
            )
        coeffs.append(c.a)
    return IntPolynomial(coeffs)


def diagonal(values: Iterable[int | QuadExt]) -> ExactMatrix:
    vals = [_coerce_entry(v) for v in values]
    n = len(vals)
    return ExactMatrix(
        [[vals[i] if i == j else QUAD_ZERO for j in range(n)] for i in range(n)]
    )
