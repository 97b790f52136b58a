"""Spectrum, index and nullity for the equivariant biharmonic maps T^2 -> S^2.

For the map winding k times around the small circle at colatitude pi/4, the
second-variation operator of the bienergy preserves the finite-dimensional
subspaces spanned by the Laplace eigenfunctions with Fourier label (m, n).
On such a subspace it acts, in the orthonormal trigonometric basis, by a
symmetric block with entries in Z[sqrt(2)]:

    2x2  diag(0, -k^4)                      (m, n) = (0, 0)
    4x4  with off-diagonal +-2*sqrt(2)*k*m^3     n = 0
    4x4  diagonal                                m = 0
    8x8  built from A, B, C below           m, n >= 1

    A = (3m^2+n^2) k^2 + s^2,  B = -k^4 + 2m^2 k^2 + s^2,
    C = 2 sqrt(2) k m s,       s = m^2 + n^2.

Each 8x8 block has the two eigenvalues

    lambda^{+-} = ( T +- sqrt(R) ) / 2,
    T = -k^4 + k^2 (5m^2+n^2) + 2 s^2,
    R = k^8 + 2 k^6 s + k^4 s^2 + 32 k^2 m^2 s^2,

with multiplicity 4 (2 on the axes, where the same formulas apply with n = 0
or m = 0; for m = 0 the radicand is a perfect square and the eigenvalues are
the rationals n^2(n^2+k^2) and n^4-k^4).

Since lambda^+ > 0 away from (0,0), the sign of lambda^- is the sign of the
integer D = A*B - C^2 = A*B - 8 k^2 m^2 s^2, which this module uses for all
counting.  Writing f(k) / g(k) for the number of interior pairs (m, n >= 1)
with lambda^- negative / zero,

    index(k)   = 1 + 4(k-1) + 4 f(k),
    nullity(k) = 5 + 4 g(k),

and D > 0 is proved for s >= 9 k^2 (see enumeration_bound), which makes the
lattice scan finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import QUAD_SQRT2, QuadExt, Surd, int_sign
from .matrices import ExactMatrix

BRANCHES = ("mu0", "mu1", "plus", "minus")


class InvalidLabelError(ValueError):
    """Raised for a Fourier label/branch combination that does not exist."""


class NotNegativeError(ValueError):
    """Raised when an eigenvector coefficient is requested for lambda^- >= 0."""


@dataclass(frozen=True)
class TorusLabel:
    k: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidLabelError("winding number k must be >= 1")
        if self.m < 0 or self.n < 0:
            raise InvalidLabelError("Fourier indices must be nonnegative")

    @property
    def laplace_eigenvalue(self) -> int:
        return self.m * self.m + self.n * self.n


@dataclass(frozen=True)
class SpectrumEntry:
    label: TorusLabel
    branch: str
    eigenvalue: Surd
    multiplicity: int


@dataclass(frozen=True)
class MergedEigenvalue:
    """One point of the spectrum with branch contributions summed."""

    eigenvalue: Surd
    multiplicity: int
    branches: tuple[str, ...]


@dataclass(frozen=True)
class IndexReport:
    k: int
    index: int
    nullity: int
    f: int
    g: int
    negative_pairs: tuple[tuple[int, int], ...] = field(repr=False)
    zero_pairs: tuple[tuple[int, int], ...] = field(repr=False)


# -- closed forms -------------------------------------------------------------

def lambda_parts(k: int, m: int, n: int) -> tuple[int, int]:
    """(T, R) with lambda^{+-} = (T +- sqrt(R)) / 2."""
    s = m * m + n * n
    t = -k**4 + k * k * (5 * m * m + n * n) + 2 * s * s
    r = k**8 + 2 * k**6 * s + k**4 * s * s + 32 * k * k * m * m * s * s
    return t, r


def block_coefficients(k: int, m: int, n: int) -> tuple[int, int, int]:
    """(A, B, C^2) of the coupled block; valid for any (m, n) != (0, 0)."""
    s = m * m + n * n
    a = k * k * (3 * m * m + n * n) + s * s
    b = -k**4 + 2 * m * m * k * k + s * s
    c2 = 8 * k * k * m * m * s * s
    return a, b, c2


def discriminant(k: int, m: int, n: int) -> int:
    """D = A*B - C^2 = 4 lambda^+ lambda^-; its sign is the sign of lambda^-."""
    a, b, c2 = block_coefficients(k, m, n)
    return a * b - c2


def eigenvalue(k: int, m: int, n: int, branch: str) -> Surd:
    """Exact eigenvalue for Fourier label (m, n) and the given branch."""
    if branch not in BRANCHES:
        raise InvalidLabelError(f"unknown branch {branch!r}")
    TorusLabel(k, m, n)
    if branch == "mu0":
        if (m, n) != (0, 0):
            raise InvalidLabelError("mu0 exists only at (m, n) = (0, 0)")
        return Surd(0, 0)
    if branch == "mu1":
        if (m, n) != (0, 0):
            raise InvalidLabelError("mu1 exists only at (m, n) = (0, 0)")
        return Surd(-(k**4), 0)
    if (m, n) == (0, 0):
        raise InvalidLabelError("lambda branches need (m, n) != (0, 0)")
    t, r = lambda_parts(k, m, n)
    return Surd(t, r, 2, 1 if branch == "plus" else -1)


def branch_multiplicity(m: int, n: int) -> int:
    if (m, n) == (0, 0):
        return 1
    if m == 0 or n == 0:
        return 2
    return 4


# -- exact sign tests ----------------------------------------------------------

def sign_lambda_minus(k: int, m: int, n: int) -> int:
    """Sign of lambda^-_{m,n} for an interior pair, via the integer D-test."""
    if m < 1 or n < 1:
        raise InvalidLabelError("interior pairs need m, n >= 1")
    return int_sign(discriminant(k, m, n))


def sign_lambda_minus_axis(k: int, m: int) -> int:
    """Sign of lambda^-_{m,0}: negative iff m < k, zero iff m = k.

    Computed by the same exact D-test with n = 0 and cross-asserted against
    the m-versus-k trichotomy.
    """
    if m < 1:
        raise InvalidLabelError("axis test needs m >= 1")
    sign_d = int_sign(discriminant(k, m, 0))
    expected = -1 if m < k else (0 if m == k else 1)
    if sign_d != expected:
        raise AssertionError(
            f"axis trichotomy violated at k={k}, m={m}: D-test {sign_d}, expected {expected}"
        )
    return sign_d


def enumeration_bound(k: int) -> int:
    """Bound 9k^2: D(k, m, n) > 0 for every interior pair with m^2+n^2 >= 9k^2.

    Proof sketch: A >= s^2 and B >= s^2 - k^4 > 0 give A*B >= s^2 (s^2 - k^4),
    while m^2 < s gives C^2 < 8 k^2 s^3; hence D > s^2 (s^2 - 8 k^2 s - k^4),
    and s^2 - 8 k^2 s - k^4 >= 9k^2*k^2 - k^4 = 8 k^4 > 0 once s >= 9 k^2.
    """
    if k < 1:
        raise InvalidLabelError("k must be >= 1")
    return 9 * k * k


def interior_sign_scan(k: int) -> tuple[int, int, list[tuple[int, int]], list[tuple[int, int]]]:
    """Exact scan of all interior pairs below the enumeration bound.

    Returns (f, g, negative_pairs, zero_pairs).
    """
    bound = enumeration_bound(k)
    k2 = k * k
    k4 = k2 * k2
    neg: list[tuple[int, int]] = []
    zero: list[tuple[int, int]] = []
    m = 1
    while m * m < bound:
        m2 = m * m
        n = 1
        while m2 + n * n < bound:
            s = m2 + n * n
            a = k2 * (2 * m2 + s) + s * s
            b = s * s + 2 * m2 * k2 - k4
            d = a * b - 8 * k2 * m2 * s * s
            if d < 0:
                neg.append((m, n))
            elif d == 0:
                zero.append((m, n))
            n += 1
        m += 1
    return len(neg), len(zero), neg, zero


def index_nullity(k: int) -> IndexReport:
    """Exact index and nullity of the degree-k map, with the lattice evidence."""
    f, g, neg, zero = interior_sign_scan(k)

    # axis families, counted by the same exact test rather than assumed
    neg_m_axis = sum(1 for m in range(1, 3 * k + 1) if sign_lambda_minus_axis(k, m) < 0)
    zero_m_axis = sum(1 for m in range(1, 3 * k + 1) if sign_lambda_minus_axis(k, m) == 0)
    neg_n_axis = sum(1 for n in range(1, 3 * k + 1) if n**4 < k**4)
    zero_n_axis = sum(1 for n in range(1, 3 * k + 1) if n**4 == k**4)

    index = 1 + 2 * (neg_m_axis + neg_n_axis) + 4 * f
    nullity = 1 + 2 * (zero_m_axis + zero_n_axis) + 4 * g
    return IndexReport(
        k=k,
        index=index,
        nullity=nullity,
        f=f,
        g=g,
        negative_pairs=tuple(neg),
        zero_pairs=tuple(zero),
    )


def min_abs_interior_discriminant(
    k: int,
    m_range: tuple[int, int] | None = None,
    n_range: tuple[int, int] | None = None,
) -> tuple[int, tuple[int, int]]:
    """Smallest |D| over interior pairs, with its witness pair.

    Without ranges the whole scan region below the enumeration bound is
    searched; with ranges only the given window (intersected with the
    region).  Exposes how close the scan comes to a zero of lambda^- (the
    nullity-5 conjecture holds iff no interior D vanishes).
    """
    bound = enumeration_bound(k)
    best: int | None = None
    arg = (0, 0)
    m_lo, m_hi = m_range if m_range else (1, bound)
    n_lo, n_hi = n_range if n_range else (1, bound)
    m = max(m_lo, 1)
    while m <= m_hi and m * m < bound:
        n = max(n_lo, 1)
        while n <= n_hi and m * m + n * n < bound:
            d = abs(discriminant(k, m, n))
            if best is None or d < best:
                best, arg = d, (m, n)
            n += 1
        m += 1
    if best is None:
        raise InvalidLabelError("empty scan window")
    return best, arg


# -- block matrices ------------------------------------------------------------

def _gamma_derivative_matrix(m: int, n: int) -> tuple[int, list[list[int]]]:
    """(dim, Dg) where Dg is the action of d/d(gamma) on the Fourier basis.

    Basis order: interior (m, n >= 1): cc, cs, sc, ss; axis: cos, sin;
    (0, 0): the constant.
    """
    if m >= 1 and n >= 1:
        d = 4
        dg = [[0] * 4 for _ in range(4)]
        dg[2][0] = -m  # cc -> -m sc
        dg[3][1] = -m  # cs -> -m ss
        dg[0][2] = m   # sc ->  m cc
        dg[1][3] = m   # ss ->  m cs
        return d, dg
    if m >= 1:
        return 2, [[0, m], [-m, 0]]  # cos -> -m sin, sin -> m cos
    if n >= 1:
        return 2, [[0, 0], [0, 0]]
    return 1, [[0]]


def block_matrix(k: int, m: int, n: int) -> ExactMatrix:
    """Block of the second-variation operator on the (m, n) subspace.

    Assembled by applying the two operator rules to the trigonometric basis
    (tangential sections first, then normal ones); 2x2 at (0,0), 4x4 on the
    axes, 8x8 in the interior.
    """
    TorusLabel(k, m, n)
    lam = m * m + n * n
    k2 = k * k
    dim, dg = _gamma_derivative_matrix(m, n)
    diag_y = lam * (lam + k2) + 2 * k2 * m * m
    diag_eta = lam * lam - k2 * k2 + 2 * k2 * m * m
    coupling = 2 * k * lam  # times sqrt(2), sign from the derivative matrix

    size = 2 * dim
    rows = [[QuadExt(0)] * size for _ in range(size)]
    for i in range(dim):
        rows[i][i] = QuadExt(diag_y)
        rows[dim + i][dim + i] = QuadExt(diag_eta)
        for j in range(dim):
            if dg[i][j]:
                c = QUAD_SQRT2 * (coupling * dg[i][j])
                rows[dim + i][j] = c       # eta component of image of y-section
                rows[j][dim + i] = c       # symmetry
    return ExactMatrix(rows)


def spectrum_entries(k: int, lambda_max: int) -> list[SpectrumEntry]:
    """Per-branch eigenvalues for all labels with m^2 + n^2 <= lambda_max."""
    out = [
        SpectrumEntry(TorusLabel(k, 0, 0), "mu0", eigenvalue(k, 0, 0, "mu0"), 1),
        SpectrumEntry(TorusLabel(k, 0, 0), "mu1", eigenvalue(k, 0, 0, "mu1"), 1),
    ]
    for m in range(0, int(lambda_max**0.5) + 2):
        for n in range(0, int(lambda_max**0.5) + 2):
            if (m, n) == (0, 0) or m * m + n * n > lambda_max:
                continue
            mult = branch_multiplicity(m, n)
            for branch in ("plus", "minus"):
                out.append(
                    SpectrumEntry(TorusLabel(k, m, n), branch, eigenvalue(k, m, n, branch), mult)
                )
    return out


def spectrum(k: int, lambda_max: int) -> list[MergedEigenvalue]:
    """Spectrum up to Laplace level lambda_max, ties merged, ascending.

    Branch multiplicity and spectral multiplicity differ where branches
    collide (for instance 0 = mu0 = lambda^-_{k,0} = lambda^-_{0,k} whenever
    lambda_max >= k^2).
    """
    import functools

    entries = spectrum_entries(k, lambda_max)
    entries.sort(
        key=functools.cmp_to_key(lambda a, b: a.eigenvalue._cmp(b.eigenvalue))
    )
    merged: list[MergedEigenvalue] = []
    for e in entries:
        tag = f"{e.branch}[{e.label.m},{e.label.n}]"
        if merged and merged[-1].eigenvalue == e.eigenvalue:
            prev = merged[-1]
            merged[-1] = MergedEigenvalue(
                prev.eigenvalue, prev.multiplicity + e.multiplicity, prev.branches + (tag,)
            )
        else:
            merged.append(MergedEigenvalue(e.eigenvalue, e.multiplicity, (tag,)))
    return merged


def negative_eigenvector_coefficient(k: int, m: int, n: int) -> Surd:
    """Coefficient c with c * (pushforward of grad f) + f * (normal section)
    spanning the lambda^-_{m,n} eigenspace, as an exact surd.

    Solving the reduced 2x2 eigenvector equation of the block gives
    c = 4 s / (A - lambda^-), which rationalises to
    c = ( -(k^4 + k^2 s) + sqrt(R) ) / (4 k^2 m^2 s)  with s = m^2 + n^2.
    """
    if m < 1:
        raise InvalidLabelError("the gradient coupling needs m >= 1")
    TorusLabel(k, m, n)
    sgn = sign_lambda_minus(k, m, n) if n >= 1 else sign_lambda_minus_axis(k, m)
    if sgn >= 0:
        raise NotNegativeError(f"lambda^-({m},{n}) is not negative at k={k}")
    s = m * m + n * n
    _, r = lambda_parts(k, m, n)
    return Surd(-(k**4 + k * k * s), r, 4 * k * k * m * m * s)
