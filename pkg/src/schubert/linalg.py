"""Exact dense linear algebra over Q and quadratic extensions Q(sqrt(d)).

Scalars are ``fractions.Fraction``, or :class:`QuadExt` for values that live
in a quadratic field.  There is no floating point anywhere.  Matrices are
small and dense (desk scale), so plain Gaussian elimination with exact
division is used throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt, lcm
from typing import Iterable, Sequence, Union

from .errors import NoSolution, NotNilpotent

__all__ = [
    "Rational",
    "Scalar",
    "QuadExt",
    "Matrix",
    "rank",
    "rref",
    "kernel",
    "inverse",
    "det",
    "exp_nilpotent",
    "solve_quadratic",
    "square_split",
    "simplify_scalar",
    "simplify_matrix",
]

Rational = Fraction


# Trial-division bound for square extraction.  Beyond this we only test the
# remaining cofactor for being a perfect square, so a square of a prime above
# the bound can survive inside d.  That keeps n == s*s*d exactly true always,
# and d genuinely squarefree whenever |n| < _TRIAL_BOUND**4.
_TRIAL_BOUND = 100_000


@lru_cache(maxsize=8192)
def square_split(n: int) -> tuple[int, int]:
    """Write ``n = s*s*d`` with ``d`` square-reduced; return ``(s, d)``.

    The sign of ``n`` stays on ``d``; ``square_split(0) == (1, 0)``.  ``d``
    is squarefree for every input a test will ever see (see _TRIAL_BOUND);
    the decomposition itself is exact for arbitrary integers.
    """
    if n == 0:
        return 1, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    root = isqrt(n)
    if root * root == n:
        return root, sign
    s, d = 1, 1
    p = 2
    while p <= _TRIAL_BOUND and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if n > 1:
        root = isqrt(n)
        if root * root == n:
            s *= root
        else:
            d *= n
    return s, sign * d


class QuadExt:
    """An element ``a + b*sqrt(d)`` of the quadratic field Q(sqrt(d)).

    ``d`` is kept squarefree (possibly negative); rational values normalize
    to ``b == 0, d == 1`` so that equality and hashing agree with Fraction.
    Arithmetic mixes freely with int and Fraction; combining elements of two
    visibly different extensions raises ValueError.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if b:
            s, d0 = square_split(d)
            b *= s
            if d0 == 0:
                b, d = Fraction(0), 1
            elif d0 == 1:
                a, b, d = a + b, Fraction(0), 1
            else:
                d = d0
        else:
            b, d = Fraction(0), 1
        self.a = a
        self.b = b
        self.d = d

    # -- helpers -----------------------------------------------------------
    @staticmethod
    def _mate(other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return None

    def _join_d(self, other: "QuadExt") -> int:
        if self.b and other.b and self.d != other.d:
            raise ValueError(
                f"cannot combine sqrt({self.d}) with sqrt({other.d})")
        return self.d if self.b else other.d

    @property
    def is_rational(self) -> bool:
        return not self.b

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> "QuadExt":
        nrm = self.a * self.a - self.d * self.b * self.b
        if not nrm:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadExt(self.a / nrm, -self.b / nrm, self.d)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._mate(other)
        if o is None:
            return NotImplemented
        d = self._join_d(o)
        return QuadExt(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._mate(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._mate(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._mate(other)
        if o is None:
            return NotImplemented
        d = self._join_d(o)
        return QuadExt(self.a * o.a + d * self.b * o.b,
                       self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._mate(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._mate(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QuadExt(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        tail = f"{self.b}*sqrt({self.d})" if self.b > 0 else f"- {-self.b}*sqrt({self.d})"
        if not self.a:
            return tail if self.b > 0 else "-" + tail[2:]
        mid = "+ " if self.b > 0 else ""
        return f"{self.a} {mid}{tail}"


Scalar = Union[Fraction, QuadExt]


def _coerce(x) -> Scalar:
    if isinstance(x, (Fraction, QuadExt)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"matrix entries must be exact scalars, got {type(x).__name__}")


def simplify_scalar(x: Scalar) -> Scalar:
    """Collapse a QuadExt that happens to be rational down to a Fraction."""
    if isinstance(x, QuadExt) and not x.b:
        return x.a
    return x


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("_data", "_rows", "_cols")

    def __init__(self, rows: Iterable[Iterable], shape: tuple[int, int] | None = None):
        data = tuple(tuple(_coerce(x) for x in row) for row in rows)
        if shape is None:
            r = len(data)
            c = len(data[0]) if r else 0
        else:
            r, c = shape
            if len(data) != r:
                raise ValueError("row count does not match declared shape")
        for row in data:
            if len(row) != c:
                raise ValueError("ragged rows in matrix literal")
        self._data = data
        self._rows = r
        self._cols = c

    # -- construction --------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)],
                   shape=(n, n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def column_vector(cls, entries: Sequence) -> "Matrix":
        return cls([[e] for e in entries], shape=(len(entries), 1))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if rows is None:
            if not cols:
                raise ValueError("cannot infer row count from zero columns")
            rows = len(cols[0])
        for col in cols:
            if len(col) != rows:
                raise ValueError("ragged columns")
        return cls([[col[i] for col in cols] for i in range(rows)],
                   shape=(rows, len(cols)))

    # -- shape / access -------------------------------------------------------
    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def to_rows(self) -> list[list]:
        return [list(row) for row in self._data]

    def take_rows(self, idxs: Iterable[int]) -> "Matrix":
        idxs = list(idxs)
        return Matrix([self._data[i] for i in idxs], shape=(len(idxs), self._cols))

    def take_columns(self, idxs: Iterable[int]) -> "Matrix":
        idxs = list(idxs)
        return Matrix([[row[j] for j in idxs] for row in self._data],
                      shape=(self._rows, len(idxs)))

    def prefix_columns(self, n: int) -> "Matrix":
        return self.take_columns(range(n))

    # -- algebra ---------------------------------------------------------------
    def transpose(self) -> "Matrix":
        return Matrix([[self._data[i][j] for i in range(self._rows)]
                       for j in range(self._cols)], shape=(self._cols, self._rows))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self._rows != other._rows:
            raise ValueError("hstack needs equal row counts")
        return Matrix([ra + rb for ra, rb in zip(self._data, other._data)],
                      shape=(self._rows, self._cols + other._cols))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self._cols != other._cols:
            raise ValueError("vstack needs equal column counts")
        return Matrix(self._data + other._data,
                      shape=(self._rows + other._rows, self._cols))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self._rows, self._cols) != (other._rows, other._cols):
            raise ValueError("shape mismatch in matrix addition")
        return Matrix([[x + y for x, y in zip(ra, rb)]
                       for ra, rb in zip(self._data, other._data)],
                      shape=(self._rows, self._cols))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self._data],
                      shape=(self._rows, self._cols))

    def scale(self, s) -> "Matrix":
        s = s if isinstance(s, (Fraction, QuadExt)) else Fraction(s)
        return Matrix([[x * s for x in row] for row in self._data],
                      shape=(self._rows, self._cols))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self._cols != other._rows:
                raise ValueError("shape mismatch in matrix product")
            bt = other.transpose()._data
            return Matrix([[_dot(row, col) for col in bt] for row in self._data],
                          shape=(self._rows, other._cols))
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if self._rows != self._cols:
            raise ValueError("power of a non-square matrix")
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Matrix.identity(self._rows)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(not x for row in self._data for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return ((self._rows, self._cols) == (other._rows, other._cols)
                and self._data == other._data)

    def __hash__(self):
        return hash((self._rows, self._cols, self._data))

    def __repr__(self):
        return f"Matrix({self._rows}x{self._cols})"

    def __str__(self):
        return "\n".join("[" + "  ".join(str(x) for x in row) + "]"
                         for row in self._data)


def _dot(xs, ys):
    acc = Fraction(0)
    for x, y in zip(xs, ys):
        if x and y:
            acc = acc + x * y
    return acc


def simplify_matrix(M: Matrix) -> Matrix:
    return Matrix([[simplify_scalar(x) for x in row] for row in M.to_rows()],
                  shape=(M.rows, M.cols))


# -- elimination ----------------------------------------------------------


def _rref_rows(M: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form as a list of rows, plus pivot column indices."""
    a = M.to_rows()
    nr, nc = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    a, pivots = _rref_rows(M)
    return Matrix(a, shape=(M.rows, M.cols)), tuple(pivots)


def _integer_rows(M: Matrix):
    """Row-scaled copy of M with int entries, or None if any entry is
    irrational.  Row scaling by the denominator lcm preserves rank."""
    out = []
    for row in M.to_rows():
        vals = []
        for x in row:
            if isinstance(x, QuadExt):
                if x.b:
                    return None
                x = x.a
            elif isinstance(x, int):
                x = Fraction(x)
            vals.append(x)
        scale = lcm(*(x.denominator for x in vals)) if vals else 1
        out.append([x.numerator * (scale // x.denominator) for x in vals])
    return out


def _bareiss_rank(a: list[list[int]], nc: int) -> int:
    """Fraction-free (Bareiss) elimination rank of an integer row list."""
    nr = len(a)
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv_row = a[r]
        piv = piv_row[c]
        for i in range(r + 1, nr):
            row = a[i]
            x = row[c]
            for j in range(c + 1, nc):
                row[j] = (piv * row[j] - x * piv_row[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def rank(M: Matrix) -> int:
    ints = _integer_rows(M)
    if ints is not None:
        return _bareiss_rank(ints, M.cols)
    return len(_rref_rows(M)[1])


def kernel(M: Matrix) -> Matrix:
    """A basis of the right null space, as the columns of a cols x nullity matrix.

    Satisfies ``M * kernel(M) == 0`` and ``kernel(M).cols == M.cols - rank(M)``.
    """
    a, pivots = _rref_rows(M)
    free = [c for c in range(M.cols) if c not in pivots]
    cols = []
    for f in free:
        v: list = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -a[r][f]
        cols.append(v)
    if not cols:
        return Matrix([[] for _ in range(M.cols)], shape=(M.cols, 0))
    return Matrix.from_columns(cols, rows=M.cols)


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    a, pivots = _rref_rows(M.hstack(Matrix.identity(n)))
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([row[n:] for row in a], shape=(n, n))


def det(M: Matrix) -> Scalar:
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    a = M.to_rows()
    n = M.rows
    out: Scalar = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            out = -out
        pv = a[c][c]
        out = out * pv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def exp_nilpotent(N: Matrix, t) -> Matrix:
    """``exp(t*N)`` for nilpotent ``N``, as the finite sum of ``t^j N^j / j!``.

    Raises NotNilpotent when ``N^rows != 0``.
    """
    if N.rows != N.cols:
        raise NotNilpotent("only square matrices can be nilpotent")
    t = Fraction(t)
    n = N.rows
    out = Matrix.identity(n)
    P = Matrix.identity(n)
    tp = Fraction(1)
    for j in range(1, n + 1):
        P = P * N
        if P.is_zero():
            return out
        if j == n:
            raise NotNilpotent(f"matrix power N^{n} is nonzero")
        tp *= t
        out = out + P.scale(tp / factorial(j))
    return out


def solve_quadratic(a, b, c) -> list[QuadExt]:
    """Exact roots of ``a x^2 + b x + c`` with rational coefficients.

    Quadratic case returns both roots (with multiplicity) over Q(sqrt(d)) for
    the squarefree part d of the discriminant; rational-square discriminants
    collapse to rational roots.  The linear case returns its single root.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not a:
        if not b:
            if not c:
                raise ValueError("identically zero equation")
            raise NoSolution("nonzero constant equation has no roots")
        return [QuadExt(-c / b)]
    disc = b * b - 4 * a * c
    s, d = square_split(disc.numerator * disc.denominator)
    rad = Fraction(s, disc.denominator)  # sqrt(disc) == rad * sqrt(d)
    re = -b / (2 * a)
    co = rad / (2 * a)
    return [QuadExt(re, co, d), QuadExt(re, -co, d)]
