"""Compactly supported smooth test functions with analytic derivatives.

The fourth-order quadratic forms in this package need four classical
derivatives of every section, so sections are drawn from closed-form bump
families rather than free-form sample arrays:

  * PolynomialBump -- (1 - y^2)^p * Q(y) on a support interval (C^{p-1}
    across the endpoints; p >= 5 keeps the fourth derivative continuous);
  * CosPowerBump -- cos^p of the centred variable on a half-period (the
    classical counterexample profile cos^6 is only C^5, which is exactly the
    regularity the instability example needs).

Both evaluate any derivative order on numpy arrays and vanish identically
outside their support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class _SupportedFunction:
    support: tuple[float, float]

    def __call__(self, u: np.ndarray, deriv: int = 0) -> np.ndarray:  # pragma: no cover
        raise NotImplementedError


@dataclass(frozen=True)
class PolynomialBump(_SupportedFunction):
    """P(y) on y in [-1, 1] (zero outside), y = (u - center)/halfwidth."""

    center: float
    halfwidth: float
    ycoeffs: tuple[float, ...]  # lowest degree first, includes the (1-y^2)^p factor

    @classmethod
    def make(
        cls,
        center: float,
        halfwidth: float,
        power: int = 6,
        weights: tuple[float, ...] = (1.0,),
    ) -> PolynomialBump:
        """(1 - y^2)^power * (weights[0] + weights[1] y + ...)."""
        if power < 5:
            raise ValueError("power >= 5 keeps four continuous derivatives")
        base = np.array([1.0])
        factor = np.array([1.0, 0.0, -1.0])  # 1 - y^2
        for _ in range(power):
            base = np.convolve(base, factor)
        poly = np.convolve(base, np.asarray(weights, dtype=float))
        return cls(center=center, halfwidth=halfwidth, ycoeffs=tuple(poly))

    @property
    def support(self) -> tuple[float, float]:
        return (self.center - self.halfwidth, self.center + self.halfwidth)

    def __call__(self, u: np.ndarray, deriv: int = 0) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        y = (u - self.center) / self.halfwidth
        c = np.array(self.ycoeffs)
        for _ in range(deriv):
            c = np.polynomial.polynomial.polyder(c) if len(c) > 1 else np.zeros(1)
        vals = np.polynomial.polynomial.polyval(y, c) / self.halfwidth**deriv
        return np.where(np.abs(y) < 1.0, vals, 0.0)

    def scaled(self, a: float) -> PolynomialBump:
        return PolynomialBump(
            self.center, self.halfwidth, tuple(a * c for c in self.ycoeffs)
        )


@dataclass(frozen=True)
class CosPowerBump(_SupportedFunction):
    """cos^power(u - center) on [center - pi/2, center + pi/2], zero outside.

    Even powers expand into a finite cosine series, so every derivative is a
    trigonometric polynomial evaluated exactly.
    """

    center: float
    power: int
    amplitude: float = 1.0

    def __post_init__(self) -> None:
        if self.power < 6 or self.power % 2:
            raise ValueError("power must be even and >= 6")

    @property
    def support(self) -> tuple[float, float]:
        return (self.center - math.pi / 2, self.center + math.pi / 2)

    def _series(self) -> list[tuple[int, float]]:
        # cos^p x = 2^-p [ C(p, p/2) + 2 sum_{j=1}^{p/2} C(p, p/2 - j) cos(2 j x) ]
        p = self.power
        out = [(0, math.comb(p, p // 2) / 2**p)]
        for j in range(1, p // 2 + 1):
            out.append((2 * j, 2 * math.comb(p, p // 2 - j) / 2**p))
        return out

    def __call__(self, u: np.ndarray, deriv: int = 0) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        x = u - self.center
        total = np.zeros_like(x)
        for freq, coef in self._series():
            # d^r/dx^r cos(w x) = w^r cos(w x + r pi/2); 0**0 == 1 covers w = 0
            total += coef * freq**deriv * np.cos(freq * x + deriv * math.pi / 2)
        inside = np.abs(x) < math.pi / 2
        return np.where(inside, self.amplitude * total, 0.0)

    def scaled(self, a: float) -> CosPowerBump:
        return CosPowerBump(self.center, self.power, self.amplitude * a)


def random_polynomial_bump(rng: np.random.Generator, span: float = 4.0) -> PolynomialBump:
    """A nontrivial random bump, for property tests."""
    center = float(rng.uniform(-span, span))
    halfwidth = float(rng.uniform(0.4, 2.5))
    degree = int(rng.integers(1, 4))
    weights = tuple(float(w) for w in rng.uniform(-2.0, 2.0, size=degree))
    if all(abs(w) < 1e-3 for w in weights):
        weights = (1.0,)
    return PolynomialBump.make(center, halfwidth, power=6, weights=weights)
