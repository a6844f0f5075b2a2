"""Wronskians of polynomial planes and their Schubert-condition dictionary.

A k-plane P of polynomials of degree below m corresponds to a point of
Gr(k, m) via the basis

    q_j(t) = (-1)^j * C(m-1, j) * t^(m-1-j),          j = 0, ..., m-1,

the coefficient expansion of (t - s)^(m-1) in powers of s.  Under this map
the span of the first i derivative columns of the moment-curve flag at t0
pulls back to the polynomials divisible by (t - t0)^(m-i), so intersection
conditions against osculating flags become vanishing-order conditions, at
every rational t0 simultaneously.

The vanishing orders of P at t0 reproduce the order of vanishing of the
Wronskian there: ord(W, t0) equals the codimension of the ramification
condition of P at t0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DegenerateConfiguration, ZeroPolynomial
from .flags import Flag, osculating_flag
from .grassmann import GrPoint, SchubertCondition, codim
from .linalg import Matrix, rank, rref, simplify_scalar, solve_quadratic
from .poly import PolyQ

__all__ = [
    "PolyPlane",
    "wronskian",
    "vanishing_order",
    "plane_vanishing_orders",
    "ramification_condition",
    "check_eh_identity",
    "EHReport",
    "plane_to_grpoint",
    "wronski_solver_gr24",
    "random_plane",
]


@dataclass(frozen=True)
class PolyPlane:
    """A k-dimensional space of polynomials of degree < m."""

    m: int
    k: int
    basis: tuple[PolyQ, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        if self.k < 1 or len(self.basis) != self.k:
            raise ValueError("basis size must equal k >= 1")
        for p in self.basis:
            if p.degree() >= self.m:
                raise ValueError(f"degree {p.degree()} is not below m = {self.m}")
        if rank(self.coefficient_matrix()) != self.k:
            raise ValueError("basis polynomials are linearly dependent")

    def coefficient_matrix(self) -> Matrix:
        """k x m matrix whose rows are the coefficient vectors (low degree first)."""
        rows = []
        for p in self.basis:
            row = list(p.coeffs) + [Fraction(0)] * (self.m - len(p.coeffs))
            rows.append(row)
        return Matrix(rows, shape=(self.k, self.m))


def _poly_det(grid: list[list[PolyQ]]) -> PolyQ:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    out = PolyQ.zero()
    for c in range(n):
        if grid[0][c].is_zero:
            continue
        minor = [row[:c] + row[c + 1:] for row in grid[1:]]
        term = grid[0][c] * _poly_det(minor)
        out = out + term if c % 2 == 0 else out - term
    return out


def wronskian(plane: PolyPlane) -> PolyQ:
    """det of the k x k matrix of derivatives (row a holds the a-th derivative).

    Nonzero for any plane, of degree at most k*(m-k) after the forced factor
    structure; invariant up to scale under change of basis.
    """
    grid = [list(plane.basis)]
    for _ in range(plane.k - 1):
        grid.append([p.derivative() for p in grid[-1]])
    return _poly_det(grid)


def vanishing_order(f: PolyQ, t0) -> int:
    """Multiplicity of t0 as a root of f; 0 when f(t0) != 0."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes to all orders")
    t0 = Fraction(t0)
    order = 0
    while True:
        q, rem = f.divide_linear(t0)
        if rem:
            return order
        order += 1
        f = q


def plane_vanishing_orders(plane: PolyPlane, t0) -> tuple[int, ...]:
    """The k distinct vanishing orders at t0 achieved by nonzero elements.

    Row-reduces the k x m jet matrix (row c holds the derivative values of
    basis polynomial c); the pivot columns are exactly the achieved orders.
    """
    t0 = Fraction(t0)
    rows = []
    for p in plane.basis:
        q = p
        vals = []
        for _ in range(plane.m):
            vals.append(q(t0))
            q = q.derivative()
        rows.append(vals)
    _, pivots = rref(Matrix(rows, shape=(plane.k, plane.m)))
    return tuple(pivots)


def ramification_condition(plane: PolyPlane, t0) -> SchubertCondition:
    """The condition (against the osculating flag at t0) that the plane satisfies.

    Vanishing orders a_1 < ... < a_k translate to indices m - a_k < ... < m - a_1.
    """
    orders = plane_vanishing_orders(plane, t0)
    return SchubertCondition(plane.k, plane.m,
                             tuple(sorted(plane.m - a for a in orders)))


@dataclass(frozen=True)
class EHReport:
    codim: int
    wronski_order: int
    equal: bool


def check_eh_identity(plane: PolyPlane, t0) -> EHReport:
    """Compare the ramification codimension with the Wronskian's root order."""
    c = codim(ramification_condition(plane, t0))
    w = vanishing_order(wronskian(plane), t0)
    return EHReport(codim=c, wronski_order=w, equal=(c == w))


def plane_to_grpoint(plane: PolyPlane) -> GrPoint:
    """The Gr(k, m) point of the plane in the divided-power basis above.

    A polynomial with coefficients c_0, ..., c_(m-1) maps to the column with
    entries (-1)^j * c_(m-1-j) / C(m-1, j).
    """
    m = plane.m
    cols = []
    for p in plane.basis:
        c = list(p.coeffs) + [Fraction(0)] * (m - len(p.coeffs))
        col = [simplify_scalar(c[m - 1 - j] * Fraction((-1) ** j, comb(m - 1, j)))
               for j in range(m)]
        cols.append(col)
    return GrPoint(Matrix.from_columns(cols, rows=m))


def wronski_solver_gr24(roots) -> list[PolyPlane]:
    """All 2-planes of cubics whose Wronskian vanishes at four given points.

    Every solution has one monic quadratic and one monic cubic basis element;
    normalizing the cubic to have no quadratic term leaves four unknowns that
    the Wronskian identity pins down to a single quadratic equation, solved
    exactly.  Returns the generic count of 2 planes, over Q(sqrt(d)).
    """
    rs = [Fraction(r) for r in roots]
    if len(rs) != 4:
        raise ValueError("exactly four points are required")
    if len(set(rs)) != 4:
        raise DegenerateConfiguration("the four points must be pairwise distinct")
    w0 = PolyQ.one()
    for r in rs:
        w0 = w0 * PolyQ([-r, 1])
    e0, e1, e2, e3 = w0.coeffs[0], w0.coeffs[1], w0.coeffs[2], w0.coeffs[3]
    # with f = t^3 + p t + q and g = t^2 + u t + v the Wronskian f g' - f' g is
    # -t^4 - 2u t^3 + (p - 3v) t^2 + 2q t + (q u - p v), matched against -w0
    u = e3 / 2
    q = -e1 / 2
    vs = solve_quadratic(3, -e2, -(q * u + e0))
    if vs[0] == vs[1]:
        raise DegenerateConfiguration("double solution: the discriminant vanishes")
    out = []
    for v in vs:
        p = 3 * v - e2
        f = PolyQ([q, simplify_scalar(p), 0, 1])
        g = PolyQ([simplify_scalar(v), u, 1])
        out.append(PolyPlane(4, 2, (f, g)))
    return out


def random_plane(k: int, m: int, rng: random.Random) -> PolyPlane:
    """A seeded random k-plane of polynomials of degree < m."""
    while True:
        polys = tuple(
            PolyQ([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                   for _ in range(m)])
            for _ in range(k))
        try:
            return PolyPlane(m, k, polys)
        except ValueError:
            continue


def osculating_point_flag(m: int, t0) -> Flag:
    """Shorthand for the moment-curve osculating flag in C^m at t0."""
    from .flags import GroupKind

    return osculating_flag(GroupKind.sl(m), t0)
