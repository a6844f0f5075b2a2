"""Schubert conditions on Grassmannians: membership, tangents, certificates.

Conventions.  A condition I = (i_1 < ... < i_k) on Gr(k, m) relative to a
flag E is

    dim(V  cap  E_{i_j}) >= j        for j = 1, ..., k,

with codimension sum(m - k + j - i_j).  The open cell consists of the V
whose intersection dimensions jump exactly at the i_j.  At an open-cell
point the tangent space of the Schubert variety inside Hom(V, C^m/V) is cut
out by

    phi(V cap E_{i_j})  subset  (E_{i_j} + V) / V     for every j,

and a list of conditions is transverse at V when the stacked constraint
rows have rank equal to the sum of the codimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (DegenerateConfiguration, DimensionMismatch, InfinitelyMany,
                     NegativeExpectedDimension, NotInCellInterior, NotMember)
from .flags import Flag
from .linalg import (Matrix, det, inverse, kernel, rank, simplify_matrix,
                     solve_quadratic)

__all__ = [
    "SchubertCondition",
    "GrPoint",
    "PermCondition",
    "TangentSpace",
    "TransversalityCertificate",
    "codim",
    "iota",
    "membership",
    "cell_interior",
    "tangent_space",
    "transversality_certificate",
    "small_solver_gr24",
    "pad_to_zero_dimensional",
    "perm_codim",
    "flag_manifold_dim",
    "expected_dim_report",
    "ExpectedDimReport",
    "condition_codim",
]


@dataclass(frozen=True)
class SchubertCondition:
    """Indices 1 <= i_1 < ... < i_k <= m defining a condition on Gr(k, m)."""

    k: int
    m: int
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.k < 1 or self.k > self.m:
            raise ValueError(f"need 1 <= k <= m, got k={self.k}, m={self.m}")
        if len(self.indices) != self.k:
            raise ValueError("index count must equal k")
        prev = 0
        for i in self.indices:
            if not prev < i <= self.m:
                raise ValueError(f"indices must increase strictly within 1..{self.m}")
            prev = i


def codim(cond: SchubertCondition) -> int:
    """Codimension of the condition in Gr(k, m)."""
    return sum(cond.m - cond.k + j - i for j, i in enumerate(cond.indices, 1))


def iota(k: int, m: int) -> SchubertCondition:
    """The unique codimension-one condition (m-k, m-k+2, m-k+3, ..., m)."""
    if not 1 <= k < m:
        raise ValueError(f"need 1 <= k < m, got k={k}, m={m}")
    return SchubertCondition(k, m, (m - k,) + tuple(range(m - k + 2, m + 1)))


@dataclass(frozen=True)
class GrPoint:
    """A point of Gr(k, m): an m x k basis matrix of full column rank."""

    basis: Matrix

    def __post_init__(self):
        if rank(self.basis) != self.basis.cols:
            raise ValueError("basis columns are linearly dependent")

    @property
    def ambient_dim(self) -> int:
        return self.basis.rows

    @property
    def k(self) -> int:
        return self.basis.cols


def _check_compatible(V: GrPoint, cond: SchubertCondition, F: Flag) -> None:
    if V.ambient_dim != cond.m or F.ambient_dim != cond.m:
        raise DimensionMismatch(
            f"condition lives on Gr({cond.k},{cond.m}); point has m={V.ambient_dim},"
            f" flag has m={F.ambient_dim}")
    if V.k != cond.k:
        raise DimensionMismatch(f"condition needs k={cond.k}, point has k={V.k}")


def _cap_dim(V: GrPoint, F: Flag, i: int) -> int:
    """dim(V cap E_i) = k + i - rank([V | E_i])."""
    return V.k + i - rank(V.basis.hstack(F.prefix(i)))


def membership(V: GrPoint, cond: SchubertCondition, F: Flag) -> bool:
    """Whether dim(V cap E_{i_j}) >= j for every j, computed by exact ranks."""
    _check_compatible(V, cond, F)
    return all(_cap_dim(V, F, i) >= j for j, i in enumerate(cond.indices, 1))


def cell_interior(V: GrPoint, cond: SchubertCondition, F: Flag) -> bool:
    """Whether the intersection dimensions jump exactly at the i_j.

    Raises NotMember when V is not in the variety at all.
    """
    if not membership(V, cond, F):
        raise NotMember(f"point is not in the Schubert variety of {cond.indices}")
    for j, i in enumerate(cond.indices, 1):
        if _cap_dim(V, F, i) != j or _cap_dim(V, F, i - 1) != j - 1:
            return False
    return True


@dataclass(frozen=True)
class TangentSpace:
    """Linear constraints cutting the tangent space inside Hom(V, C^m/V).

    ``constraints`` has k*(m-k) columns; the coordinate phi_{r,c} (image
    coordinate r of basis vector c of V) sits in column c*(m-k) + r.
    """

    point: GrPoint
    constraints: Matrix

    @property
    def hom_dim(self) -> int:
        return self.point.k * (self.point.ambient_dim - self.point.k)


def _complement_columns(B: Matrix) -> Matrix:
    """Standard basis vectors completing the column span of B to C^m.

    Uses the rows missed by the pivot rows of B, i.e. the pivot columns of
    B transposed.
    """
    from .linalg import rref

    _, pivot_rows = rref(B.transpose())
    miss = [r for r in range(B.rows) if r not in pivot_rows]
    cols = []
    for r in miss:
        v = [Fraction(0)] * B.rows
        v[r] = Fraction(1)
        cols.append(v)
    if not cols:
        return Matrix([[] for _ in range(B.rows)], shape=(B.rows, 0))
    return Matrix.from_columns(cols, rows=B.rows)


def tangent_space(V: GrPoint, cond: SchubertCondition, F: Flag) -> TangentSpace:
    """Constraint rows for the tangent space at an open-cell point.

    At such a point the rows always have rank equal to the codimension of
    the condition.  Raises NotInCellInterior away from the open cell.
    """
    _check_compatible(V, cond, F)
    if not membership(V, cond, F):
        raise NotInCellInterior("point is not even in the Schubert variety")
    if not cell_interior(V, cond, F):
        raise NotInCellInterior(
            "point satisfies deeper incidences than the condition requires")
    k, m = V.k, V.ambient_dim
    comp = _complement_columns(V.basis)
    proj = inverse(V.basis.hstack(comp)).take_rows(range(k, m))
    rows_out: list[list] = []
    for j, i in enumerate(cond.indices, 1):
        # columns of `alphas` are V-coordinates of a basis of V cap E_i
        alphas = kernel(V.basis.hstack(F.prefix(i))).take_rows(range(k))
        # rows cutting the image of E_i + V inside the complement coordinates
        S = proj * F.prefix(i)
        Q = kernel(S.transpose())
        if Q.cols == 0:
            continue
        for ca in range(alphas.cols):
            alpha = alphas.column(ca)
            for cq in range(Q.cols):
                q = Q.column(cq)
                rows_out.append([alpha[c] * q[r]
                                 for c in range(k) for r in range(m - k)])
    constraints = Matrix(rows_out, shape=(len(rows_out), k * (m - k)))
    return TangentSpace(point=V, constraints=constraints)


@dataclass(frozen=True)
class TransversalityCertificate:
    transverse: bool
    tangent_codim: int
    codim_sum: int


def transversality_certificate(
        V: GrPoint,
        conditions: Sequence[tuple[SchubertCondition, Flag]]) -> TransversalityCertificate:
    """Stack all tangent constraints at V and compare rank with codim sum."""
    k, m = V.k, V.ambient_dim
    stacked = Matrix([[] for _ in range(0)], shape=(0, k * (m - k)))
    total = 0
    for idx, (cond, F) in enumerate(conditions):
        try:
            T = tangent_space(V, cond, F)
        except NotInCellInterior as e:
            raise NotInCellInterior(f"condition {idx}: {e}") from None
        stacked = stacked.vstack(T.constraints)
        total += codim(cond)
    r = rank(stacked)
    return TransversalityCertificate(transverse=(r == total),
                                     tangent_codim=r, codim_sum=total)


# -- the four-lines solver ---------------------------------------------------


def small_solver_gr24(flags: Sequence[Flag],
                      conditions: Sequence[SchubertCondition] | None = None
                      ) -> list[GrPoint]:
    """All V in Gr(2, 4) meeting the 2-plane of each of four flags.

    Writes V = span(a, b) with a in the first flag's 2-plane A and b in the
    second's B (valid whenever A and B are transverse), turns the remaining
    two incidences into a bilinear equation each on P^1 x P^1, eliminates
    the second factor, and solves the resulting quadratic exactly over a
    quadratic extension.  Generically returns 2 points.

    Raises DegenerateConfiguration when two of the 2-planes meet or when the
    quadratic has a double root, and InfinitelyMany when the solution set is
    positive-dimensional.
    """
    flags = list(flags)
    if len(flags) != 4:
        raise ValueError("exactly four flags are required")
    want = iota(2, 4)
    if conditions is not None:
        conditions = list(conditions)
        if len(conditions) != 4 or any(c != want for c in conditions):
            raise ValueError("this solver handles four copies of the"
                             " codimension-one condition on Gr(2, 4)")
    for f in flags:
        if f.ambient_dim != 4:
            raise DimensionMismatch("flags must live in C^4")
    planes = [f.prefix(2) for f in flags]
    for i in range(4):
        for j in range(i + 1, 4):
            if rank(planes[i].hstack(planes[j])) != 4:
                raise DegenerateConfiguration(
                    f"2-planes of flags {i} and {j} are not transverse")

    a1, a2 = planes[0].column(0), planes[0].column(1)
    b1, b2 = planes[1].column(0), planes[1].column(1)

    def pencil_matrix(cplane: Matrix) -> list[list]:
        c1, c2 = cplane.column(0), cplane.column(1)
        return [[det(Matrix.from_columns([ap, bq, c1, c2], rows=4))
                 for bq in (b1, b2)] for ap in (a1, a2)]

    M = pencil_matrix(planes[2])
    N = pencil_matrix(planes[3])

    # Q(x0, x1) = (x^T M)_0 (x^T N)_1 - (x^T M)_1 (x^T N)_0
    c00 = M[0][0] * N[0][1] - M[0][1] * N[0][0]
    c01 = M[0][0] * N[1][1] + M[1][0] * N[0][1] - M[0][1] * N[1][0] - M[1][1] * N[0][0]
    c11 = M[1][0] * N[1][1] - M[1][1] * N[1][0]
    if not (c00 or c01 or c11):
        raise InfinitelyMany("every line through the first two planes works")
    disc = c01 * c01 - 4 * c00 * c11
    if not disc:
        raise DegenerateConfiguration("double solution: the discriminant vanishes")

    xs: list[tuple] = []
    if c11:
        for r in solve_quadratic(c11, c01, c00):
            xs.append((Fraction(1), r))
    else:
        xs.append((Fraction(1), -c00 / c01))
        xs.append((Fraction(0), Fraction(1)))

    out = []
    for x0, x1 in xs:
        u = (x0 * M[0][0] + x1 * M[1][0], x0 * M[0][1] + x1 * M[1][1])
        v = (x0 * N[0][0] + x1 * N[1][0], x0 * N[0][1] + x1 * N[1][1])
        w = u if (u[0] or u[1]) else v
        if not (w[0] or w[1]):
            raise InfinitelyMany("a whole pencil of lines satisfies all conditions")
        y0, y1 = w[1], -w[0]
        col_a = [x0 * a1[r] + x1 * a2[r] for r in range(4)]
        col_b = [y0 * b1[r] + y1 * b2[r] for r in range(4)]
        basis = simplify_matrix(Matrix.from_columns([col_a, col_b], rows=4))
        out.append(GrPoint(basis))
    return out


# -- padding and dimension bookkeeping ----------------------------------------


def pad_to_zero_dimensional(
        conditions: Sequence[tuple[SchubertCondition, Fraction]],
        fresh_points: Sequence,
        k: int | None = None,
        m: int | None = None) -> list[tuple[SchubertCondition, Fraction]]:
    """Append codimension-one conditions at fresh points until expected dim 0.

    ``conditions`` pairs each condition with the rational parameter of the
    flag it is imposed at.  Raises NegativeExpectedDimension when the given
    conditions already exceed the ambient dimension, and ValueError when the
    fresh points collide with existing ones or run out.
    """
    conditions = [(c, Fraction(t)) for c, t in conditions]
    if conditions:
        k = conditions[0][0].k if k is None else k
        m = conditions[0][0].m if m is None else m
    if k is None or m is None:
        raise ValueError("k and m are required when no conditions are given")
    for c, _ in conditions:
        if (c.k, c.m) != (k, m):
            raise DimensionMismatch("conditions live on different Grassmannians")
    r = k * (m - k) - sum(codim(c) for c, _ in conditions)
    if r < 0:
        raise NegativeExpectedDimension(
            f"codimensions exceed dim Gr({k},{m}) by {-r}")
    fresh = [Fraction(u) for u in fresh_points]
    if len(set(fresh)) != len(fresh):
        raise ValueError("fresh points must be pairwise distinct")
    used = {t for _, t in conditions}
    clash = used.intersection(fresh)
    if clash:
        raise ValueError(f"fresh points collide with condition points: {sorted(clash)}")
    if len(fresh) < r:
        raise ValueError(f"need {r} fresh points, got {len(fresh)}")
    pad = iota(k, m)
    return conditions + [(pad, u) for u in fresh[:r]]


@dataclass(frozen=True)
class PermCondition:
    """A permutation condition on a partial flag manifold.

    ``perm`` is in one-line notation on 1..m; its descent positions must lie
    in ``descent_bound`` (the dimension steps of the flag manifold).
    """

    m: int
    perm: tuple[int, ...]
    descent_bound: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "descent_bound", tuple(self.descent_bound))
        if sorted(self.perm) != list(range(1, self.m + 1)):
            raise ValueError(f"not a permutation of 1..{self.m}: {self.perm}")
        bound = set(self.descent_bound)
        if not all(1 <= d < self.m for d in bound):
            raise ValueError("descent bound positions must lie in 1..m-1")
        descents = {i + 1 for i in range(self.m - 1)
                    if self.perm[i] > self.perm[i + 1]}
        if not descents <= bound:
            raise ValueError(
                f"permutation {self.perm} has descents {sorted(descents)}"
                f" outside the allowed steps {sorted(bound)}")


def perm_codim(cond: PermCondition) -> int:
    """Codimension of the permutation condition: the inversion count."""
    p = cond.perm
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
               if p[i] > p[j])


def flag_manifold_dim(dims: Sequence[int], m: int) -> int:
    """Dimension of the manifold of flags with the given subspace dims in C^m.

    Computed as the sum over pairs of consecutive dimension gaps of their
    products; for a single step k this is k*(m-k), and for the complete flag
    it is m*(m-1)/2.
    """
    dims = list(dims)
    if not dims or any(d <= 0 or d >= m for d in dims):
        raise ValueError("subspace dimensions must lie strictly between 0 and m")
    if sorted(set(dims)) != dims:
        raise ValueError("subspace dimensions must increase strictly")
    gaps = [dims[0]] + [b - a for a, b in zip(dims, dims[1:])] + [m - dims[-1]]
    return sum(gaps[i] * gaps[j]
               for i in range(len(gaps)) for j in range(i + 1, len(gaps)))


def condition_codim(cond) -> int:
    if isinstance(cond, SchubertCondition):
        return codim(cond)
    if isinstance(cond, PermCondition):
        return perm_codim(cond)
    raise TypeError(f"not a condition: {cond!r}")


@dataclass(frozen=True)
class ExpectedDimReport:
    expected: int
    empty_for_general: bool


def expected_dim_report(conditions: Iterable, ambient_dim: int) -> ExpectedDimReport:
    """Ambient dimension minus total codimension; negative means empty for
    general flags."""
    expected = ambient_dim - sum(condition_codim(c) for c in conditions)
    return ExpectedDimReport(expected=expected, empty_for_general=expected < 0)
