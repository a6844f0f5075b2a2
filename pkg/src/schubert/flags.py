"""Rational normal curves, osculating flags, bilinear forms and nilpotents.

Supported groups act on C^m for m = ambient dimension:

* SL(m)       -- no form; the curve is the moment curve (1, t, ..., t^(m-1)).
* Sp(2n)      -- alternating form; curve entries t^j/j! with signs flipping
                 alternately past entry n.
* SO(2n+1)    -- symmetric form (anti-diagonal ones); same divided-power
                 curve shape, one entry longer.
* SO(2n)      -- only a principal nilpotent is constructed; no curve, flag
                 or form is attached to this kind.

All osculating flags here are exact: curve entries are polynomials over Q,
differentiated symbolically and evaluated at rational points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DimensionMismatch, NotNilpotent, UnsupportedGroup
from .linalg import Matrix, exp_nilpotent, rank
from .poly import PolyQ

__all__ = [
    "GroupKind",
    "Flag",
    "BilinearForm",
    "curve_polynomials",
    "curve_point",
    "osculating_flag",
    "gram_matrix",
    "is_isotropic_flag",
    "principal_nilpotent",
    "nilpotency_index",
    "exp_translate_flag",
    "flags_equal",
    "random_isotropic_flag",
]

_TAGS = ("SL", "Sp", "SO_odd", "SO_even")


@dataclass(frozen=True)
class GroupKind:
    """A classical group tag with its size parameter (m for SL, n otherwise)."""

    tag: str
    param: int

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown group tag {self.tag!r}")
        low = 2 if self.tag == "SL" else 1
        if self.param < low:
            raise ValueError(f"{self.tag} needs parameter >= {low}")

    @classmethod
    def sl(cls, m: int) -> "GroupKind":
        return cls("SL", m)

    @classmethod
    def sp(cls, n: int) -> "GroupKind":
        return cls("Sp", n)

    @classmethod
    def so_odd(cls, n: int) -> "GroupKind":
        return cls("SO_odd", n)

    @classmethod
    def so_even(cls, n: int) -> "GroupKind":
        return cls("SO_even", n)

    @property
    def ambient_dim(self) -> int:
        if self.tag == "SL":
            return self.param
        if self.tag == "Sp":
            return 2 * self.param
        if self.tag == "SO_odd":
            return 2 * self.param + 1
        return 2 * self.param

    def __str__(self):
        return f"{'SO' if self.tag.startswith('SO') else self.tag}({self.ambient_dim})"


@dataclass(frozen=True)
class Flag:
    """A complete flag in C^m, stored as an invertible basis matrix.

    Column i spans the new direction of the i-th subspace: the j-th subspace
    of the flag is the span of the first j columns.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        m = self.ambient_dim
        if self.basis.rows != m or self.basis.cols != m:
            raise DimensionMismatch(
                f"flag basis must be {m}x{m}, got {self.basis.rows}x{self.basis.cols}")
        if rank(self.basis) != m:
            raise ValueError("flag basis matrix is singular")

    @classmethod
    def coordinate(cls, m: int) -> "Flag":
        return cls(m, Matrix.identity(m))

    def prefix(self, i: int) -> Matrix:
        """Basis of the i-dimensional subspace, as an m x i matrix."""
        return self.basis.prefix_columns(i)


@dataclass(frozen=True)
class BilinearForm:
    """A nondegenerate bilinear form given by its Gram matrix."""

    kind: str  # "alternating" | "symmetric"
    gram: Matrix

    def __post_init__(self):
        if self.kind not in ("alternating", "symmetric"):
            raise ValueError(f"unknown form kind {self.kind!r}")
        g = self.gram
        if g.rows != g.cols:
            raise DimensionMismatch("Gram matrix must be square")
        want = -g if self.kind == "alternating" else g
        if g.transpose() != want:
            raise ValueError(f"Gram matrix is not {self.kind}")
        if rank(g) != g.rows:
            raise ValueError("Gram matrix is degenerate")

    @property
    def ambient_dim(self) -> int:
        return self.gram.rows


# -- curves and osculating flags -------------------------------------------


def curve_polynomials(kind: GroupKind) -> tuple[PolyQ, ...]:
    """The m coordinate polynomials of the group's rational normal curve.

    For SL(m) these are 1, t, ..., t^(m-1).  For Sp(2n) and SO(2n+1) the
    j-th entry is t^j/j!, with the sign flipping on each step past j = n.
    """
    if kind.tag == "SL":
        return tuple(PolyQ.monomial(j) for j in range(kind.param))
    if kind.tag in ("Sp", "SO_odd"):
        n = kind.param
        m = kind.ambient_dim
        out = []
        for j in range(m):
            sign = 1 if j <= n else (-1) ** (j - n)
            out.append(PolyQ.monomial(j, Fraction(sign, factorial(j))))
        return tuple(out)
    raise UnsupportedGroup(f"{kind} carries no distinguished curve")


def curve_point(kind: GroupKind, t) -> Matrix:
    """The curve evaluated at rational t, as an m x 1 column."""
    t = Fraction(t)
    return Matrix.column_vector([p(t) for p in curve_polynomials(kind)])


def osculating_flag(kind: GroupKind, t) -> Flag:
    """The flag of derivative spans of the curve at t.

    Column i holds the (i-1)-st derivative of the curve; the basis matrix is
    invertible for every t because the curve entries span all polynomials of
    degree below m.
    """
    t = Fraction(t)
    ps = list(curve_polynomials(kind))
    m = kind.ambient_dim
    cols = []
    for _ in range(m):
        cols.append([p(t) for p in ps])
        ps = [p.derivative() for p in ps]
    return Flag(m, Matrix.from_columns(cols, rows=m))


# -- bilinear forms ----------------------------------------------------------


def gram_matrix(kind: GroupKind) -> BilinearForm:
    """The preserved bilinear form: alternating for Sp, symmetric for SO(2n+1).

    Sp(2n): anti-diagonal with +1 in the first n rows and -1 in the last n.
    SO(2n+1): anti-diagonal ones.
    """
    if kind.tag == "Sp":
        m = kind.ambient_dim
        n = kind.param
        g = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            g[i][m - 1 - i] = Fraction(1 if i < n else -1)
        return BilinearForm("alternating", Matrix(g, shape=(m, m)))
    if kind.tag == "SO_odd":
        m = kind.ambient_dim
        g = [[Fraction(int(i + j == m - 1)) for j in range(m)] for i in range(m)]
        return BilinearForm("symmetric", Matrix(g, shape=(m, m)))
    raise UnsupportedGroup(f"{kind} preserves no bilinear form here")


def is_isotropic_flag(flag: Flag, form: BilinearForm) -> bool:
    """Whether the i-dim subspace pairs to zero with the (m-i)-dim one, all i.

    Equivalently, with P = basis^T * gram * basis, every entry P[a][b] with
    (1-indexed) a + b <= m vanishes.
    """
    m = flag.ambient_dim
    if form.ambient_dim != m:
        raise DimensionMismatch(
            f"flag in dimension {m}, form in dimension {form.ambient_dim}")
    P = flag.basis.transpose() * form.gram * flag.basis
    for i in range(m):
        for j in range(m - 1 - i):
            if P[i, j]:
                return False
    return True


# -- principal nilpotents -----------------------------------------------------


def principal_nilpotent(kind: GroupKind) -> Matrix:
    """A principal nilpotent element of the group's Lie algebra.

    SL(m): subdiagonal (1, 2, ..., m-1).
    Sp(2n): subdiagonal of n ones then n-1 minus-ones.
    SO(2n+1): subdiagonal of n ones then n minus-ones.
    SO(2n): subdiagonal (1, ..., 1, 0, -1, ..., -1), plus +1 at row n+1,
    column n-1 and -1 at row n+2, column n (1-indexed), the orientation for
    which the (2n-1)-st power vanishes.
    """
    m = kind.ambient_dim
    a = [[Fraction(0)] * m for _ in range(m)]
    if kind.tag == "SL":
        sub = list(range(1, m))
    elif kind.tag == "Sp":
        n = kind.param
        sub = [1] * n + [-1] * (n - 1)
    elif kind.tag == "SO_odd":
        n = kind.param
        sub = [1] * n + [-1] * n
    else:  # SO_even
        n = kind.param
        sub = [1] * (n - 1) + [0] + [-1] * (n - 1)
        if n >= 2:
            a[n][n - 2] = Fraction(1)
            a[n + 1][n - 1] = Fraction(-1)
    for i, v in enumerate(sub):
        if v:
            a[i + 1][i] = a[i + 1][i] + Fraction(v)
    return Matrix(a, shape=(m, m))


def nilpotency_index(N: Matrix) -> int:
    """The least p >= 1 with N^p = 0; NotNilpotent when there is none."""
    if N.rows != N.cols:
        raise NotNilpotent("only square matrices can be nilpotent")
    P = Matrix.identity(N.rows)
    for p in range(1, N.rows + 1):
        P = P * N
        if P.is_zero():
            return p
    raise NotNilpotent(f"matrix power N^{N.rows} is nonzero")


def exp_translate_flag(kind: GroupKind, t) -> Flag:
    """The flag exp(t * eta) applied to the coordinate flag.

    This equals the osculating flag of the group's curve at t (checked by
    the test suite for every supported kind).
    """
    if kind.tag == "SO_even":
        raise UnsupportedGroup(f"{kind} has no attached flag family")
    g = exp_nilpotent(principal_nilpotent(kind), Fraction(t))
    return Flag(kind.ambient_dim, g)


def flags_equal(F: Flag, G: Flag) -> bool:
    """Whether two bases present the same flag (equal prefix spans for all i)."""
    if F.ambient_dim != G.ambient_dim:
        raise DimensionMismatch(
            f"flags in dimensions {F.ambient_dim} and {G.ambient_dim}")
    for i in range(1, F.ambient_dim + 1):
        if rank(F.prefix(i).hstack(G.prefix(i))) != i:
            return False
    return True


# -- random isotropic flags ---------------------------------------------------


def _root_elements(kind: GroupKind, form: BilinearForm) -> tuple[list[Matrix], list[Matrix]]:
    """Strictly upper and lower triangular root elements of the Lie algebra.

    For the anti-diagonal forms used here, the element supported at (a, b) is
    paired with position (m+1-b, m+1-a).  Each returned X satisfies
    X^T * gram + gram * X = 0.
    """
    m = kind.ambient_dim
    G = form.gram
    if kind.tag == "Sp":
        n = kind.param
        eps = [0] + [1] * n + [-1] * n  # 1-indexed
    upper: list[Matrix] = []
    lower: list[Matrix] = []
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            if a == b:
                continue
            pa, pb = m + 1 - b, m + 1 - a
            if (pa, pb) < (a, b):
                continue  # the partner position generates the same line
            if kind.tag == "SO_odd" and a + b == m + 1:
                continue  # anti-diagonal positions are absent from so(2n+1)
            rows = [[Fraction(0)] * m for _ in range(m)]
            rows[a - 1][b - 1] = Fraction(1)
            if (pa, pb) != (a, b):
                c = -1 if kind.tag == "SO_odd" else -eps[a] * eps[b]
                rows[pa - 1][pb - 1] = Fraction(c)
            X = Matrix(rows, shape=(m, m))
            assert (X.transpose() * G + G * X).is_zero()
            (upper if a < b else lower).append(X)
    return upper, lower


def random_isotropic_flag(kind: GroupKind, seed: int) -> Flag:
    """A seeded random isotropic flag for Sp(2n) or SO(2n+1).

    The flag is the coordinate flag moved by a product of exponentials of
    root elements with small random rational coefficients, so it is exactly
    isotropic by construction and deterministic in the seed.
    """
    if kind.tag not in ("Sp", "SO_odd"):
        raise UnsupportedGroup(f"{kind} has no isotropic flags here")
    form = gram_matrix(kind)
    upper, lower = _root_elements(kind, form)
    rng = random.Random(seed)
    g = Matrix.identity(kind.ambient_dim)
    for X in upper + lower:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        g = g * exp_nilpotent(X, c)
    return Flag(kind.ambient_dim, g)
