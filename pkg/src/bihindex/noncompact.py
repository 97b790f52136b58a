"""Strict stability of the cubic-phase biharmonic lines R -> S^2.

The maps send gamma to (cos A, sin A, 0) with A = a g^3 + b g^2 + c g + d
(a^2 + b^2 > 0 keeps them proper).  For compactly supported sections
V = f1 T + f2 N (T tangent, N normal to the equator) the second-variation
quadratic form integrates by parts into

    int (f1'')^2 + (f2'' + (A')^2 f2)^2 + [(A'')^2 + 2 A''' A'] f2^2,

so positivity of  w(g) = (A'')^2 + 2 A''' A' = 72 a^2 g^2 + 48 a b g
+ 4 b^2 + 12 a c  is a sufficient condition for strict stability.  Its
global minimum is -4 (b^2 - 3 a c) when a != 0 and the constant 4 b^2 when
a = 0, hence the exact certificate: stable when a = 0 or b^2 - 3 a c <= 0.
Outside the certificate the form can actually turn negative: with
A = g^3 - 2 g and f2 = cos^6 on a half-period the integral is ~ -3.537.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable

import numpy as np

from .bumps import CosPowerBump, _SupportedFunction
from .quadrature import adaptive_integrate


class NotProperError(ValueError):
    """Raised when a = b = 0 (the phase is affine and the map harmonic)."""


class Stability(enum.Enum):
    STABLE = "stable"
    NOT_CERTIFIED = "not-certified"


def _rat(x, name: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (Rational, str)):
        raise TypeError(f"{name} must be an exact rational, got {type(x).__name__}")
    return Fraction(x)


@dataclass(frozen=True)
class CubicPhase:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _rat(getattr(self, name), name))
        if self.a == 0 and self.b == 0:
            raise NotProperError("a = b = 0 gives a harmonic (not proper) map")

    def phase(self, g: np.ndarray) -> np.ndarray:
        a, b, c, d = (float(x) for x in (self.a, self.b, self.c, self.d))
        return ((a * g + b) * g + c) * g + d

    def d1(self, g: np.ndarray) -> np.ndarray:
        a, b, c = float(self.a), float(self.b), float(self.c)
        return (3.0 * a * g + 2.0 * b) * g + c

    def d2(self, g: np.ndarray) -> np.ndarray:
        return 6.0 * float(self.a) * g + 2.0 * float(self.b)

    def d3(self, g: np.ndarray) -> np.ndarray:
        return 6.0 * float(self.a) * np.ones_like(np.asarray(g, dtype=float))


def curvature_integrand(phase: CubicPhase, g: Fraction) -> Fraction:
    """w(g) = (A'')^2 + 2 A''' A' = 72 a^2 g^2 + 48 a b g + 4 b^2 + 12 a c, exact."""
    g = Fraction(g)
    a, b, c = phase.a, phase.b, phase.c
    return 72 * a * a * g * g + 48 * a * b * g + 4 * b * b + 12 * a * c


def integrand_min(phase: CubicPhase) -> Fraction:
    """Exact global minimum of w over the line."""
    a, b, c = phase.a, phase.b, phase.c
    if a == 0:
        return 4 * b * b
    return -4 * (b * b - 3 * a * c)


def is_strictly_stable(phase: CubicPhase) -> Stability:
    """Stable iff a = 0 or b^2 - 3ac <= 0 (exact); the condition is
    sufficient, so the other outcome is NOT_CERTIFIED, never 'unstable'."""
    if phase.a == 0 or phase.b**2 - 3 * phase.a * phase.c <= 0:
        return Stability.STABLE
    return Stability.NOT_CERTIFIED


@dataclass(frozen=True)
class SectionPair:
    """Compactly supported section f1 T + f2 N; None means the zero function."""

    f1: _SupportedFunction | None = None
    f2: _SupportedFunction | None = None

    def support(self) -> tuple[float, float] | None:
        los, his = [], []
        for f in (self.f1, self.f2):
            if f is not None:
                lo, hi = f.support
                los.append(lo)
                his.append(hi)
        if not los:
            return None
        return min(los), max(his)


def hessian_form(phase: CubicPhase, section: SectionPair, rel_tol: float = 1e-11) -> float:
    """The integrated-by-parts quadratic form of the section."""
    sup = section.support()
    if sup is None:
        return 0.0
    lo, hi = sup

    def integrand(g: np.ndarray) -> np.ndarray:
        total = np.zeros_like(g)
        if section.f1 is not None:
            total = total + section.f1(g, 2) ** 2
        if section.f2 is not None:
            f2 = section.f2(g, 0)
            f2dd = section.f2(g, 2)
            ap = phase.d1(g)
            app = phase.d2(g)
            appp = phase.d3(g)
            total = total + (f2dd + ap * ap * f2) ** 2
            total = total + (app * app + 2.0 * appp * ap) * f2 * f2
        return total

    return adaptive_integrate(integrand, lo, hi, rel_tol=rel_tol)


def i2_sections(
    phase: CubicPhase, section: SectionPair
) -> tuple[Callable[[np.ndarray], np.ndarray], Callable[[np.ndarray], np.ndarray]]:
    """Image of the section under the fourth-order operator, componentwise.

    Tangential: f1''''.  Normal: f2'''' + 2 (A')^2 f2'' + 4 A'' A' f2'
    + (4 A''' A' + 3 (A'')^2 + (A')^4) f2.
    """

    def tangential(g: np.ndarray) -> np.ndarray:
        if section.f1 is None:
            return np.zeros_like(np.asarray(g, dtype=float))
        return section.f1(g, 4)

    def normal(g: np.ndarray) -> np.ndarray:
        if section.f2 is None:
            return np.zeros_like(np.asarray(g, dtype=float))
        ap = phase.d1(g)
        app = phase.d2(g)
        appp = phase.d3(g)
        f = section.f2
        return (
            f(g, 4)
            + 2.0 * ap * ap * f(g, 2)
            + 4.0 * app * ap * f(g, 1)
            + (4.0 * appp * ap + 3.0 * app * app + ap**4) * f(g, 0)
        )

    return tangential, normal


def i2_pairing(phase: CubicPhase, section: SectionPair, rel_tol: float = 1e-11) -> float:
    """int < I2 V, V >, the pre-integration-by-parts form of the Hessian."""
    sup = section.support()
    if sup is None:
        return 0.0
    lo, hi = sup
    tangential, normal = i2_sections(phase, section)

    def integrand(g: np.ndarray) -> np.ndarray:
        total = np.zeros_like(g)
        if section.f1 is not None:
            total = total + tangential(g) * section.f1(g, 0)
        if section.f2 is not None:
            total = total + normal(g) * section.f2(g, 0)
        return total

    return adaptive_integrate(integrand, lo, hi, rel_tol=rel_tol)


COUNTEREXAMPLE_PHASE = CubicPhase(Fraction(1), Fraction(0), Fraction(-2), Fraction(0))
COUNTEREXAMPLE_SECTION = SectionPair(f1=None, f2=CosPowerBump(center=0.0, power=6))


def counterexample_value() -> float:
    """Hessian of the cos^6 normal section under A = g^3 - 2g; ~ -3.537 < 0."""
    return hessian_form(COUNTEREXAMPLE_PHASE, COUNTEREXAMPLE_SECTION)


def find_instability_witness(
    phase: CubicPhase, tries: int = 60, seed: int = 0
) -> tuple[SectionPair, float] | None:
    """Best-effort search for a section with negative Hessian.

    Scans cos-power bumps centred where w(g) is most negative, with a few
    random widths/amplitudes; returns (section, value) if one goes negative.
    Finding nothing proves nothing -- the certificate is one-sided.
    """
    if is_strictly_stable(phase) is Stability.STABLE:
        return None
    a, b = phase.a, phase.b
    g_min = float(-b / (3 * a)) if a != 0 else 0.0
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        center = g_min + float(rng.uniform(-1.0, 1.0))
        section = SectionPair(f2=CosPowerBump(center=center, power=6))
        val = hessian_form(phase, section)
        if val < 0.0:
            return section, val
    return None
