"""Univariate polynomials with exact coefficients (Fraction or QuadExt)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import QuadExt, Scalar

__all__ = ["PolyQ"]


def _coerce(x) -> Scalar:
    if isinstance(x, (Fraction, QuadExt)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"polynomial coefficients must be exact scalars, got {type(x).__name__}")


class PolyQ:
    """A polynomial in one variable, coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "PolyQ":
        return cls(())

    @classmethod
    def one(cls) -> "PolyQ":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "PolyQ":
        return cls((0,) * power + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Scalar:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyQ(out)

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyQ):
            if self.is_zero or other.is_zero:
                return PolyQ()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return PolyQ(out)
        if isinstance(other, (int, Fraction, QuadExt)):
            return PolyQ([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            return PolyQ([other * c for c in self.coeffs])
        return NotImplemented

    def derivative(self) -> "PolyQ":
        return PolyQ([j * c for j, c in enumerate(self.coeffs)][1:])

    def __call__(self, t):
        acc: Scalar = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divide_linear(self, t0) -> tuple["PolyQ", Scalar]:
        """Synthetic division by ``(t - t0)``; returns (quotient, remainder)."""
        if self.is_zero:
            return PolyQ(), Fraction(0)
        q: list = [Fraction(0)] * max(len(self.coeffs) - 1, 0)
        carry: Scalar = Fraction(0)
        for i in range(len(self.coeffs) - 1, 0, -1):
            carry = self.coeffs[i] + t0 * carry
            q[i - 1] = carry
        rem = self.coeffs[0] + t0 * carry
        return PolyQ(q), rem

    def proportional(self, other: "PolyQ") -> bool:
        """True when the two polynomials agree up to a nonzero scalar."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.degree() != other.degree():
            return False
        lam = other.leading() / self.leading()
        return self * lam == other

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"PolyQ({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            elif j == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{j}")
        return " + ".join(parts)
