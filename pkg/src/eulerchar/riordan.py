"""The Riordan group on truncated series.

A pair of series (beta, alpha), both with nonzero constant term, induces
an infinite lower triangular matrix T(beta|alpha) whose k-th column holds
the coefficients of the geometric progression term

    (beta/alpha) * (x/alpha)**k.

These matrices form a group under the ordinary matrix product, and act
linearly on power series by

    g  |->  (beta/alpha) * g(x/alpha),

which agrees with multiplying the column of coefficients of g by the
matrix.  Two members matter here: Pascal's triangle T(1|1-x), and the
triangle F = T(1/(1-x)|1-x) whose n-th row is the face-count vector of
the solid n-simplex.
"""

from __future__ import annotations

from fractions import Fraction

from .fps import Series
from .matrix import ExactMatrix


class RiordanPair:
    """T(beta|alpha), truncated to the smaller precision of the pair."""

    __slots__ = ("beta", "alpha", "_ratio", "_columns")

    def __init__(self, beta: Series, alpha: Series):
        if not beta.coeff(0):
            raise ValueError("beta must have a nonzero constant term")
        if not alpha.coeff(0):
            raise ValueError("alpha must have a nonzero constant term")
        n = min(beta.precision, alpha.precision)
        self.beta = beta.truncate(n)
        self.alpha = alpha.truncate(n)
        self._ratio = Series.x(n) * self.alpha.invert()
        # column k is column k-1 times the ratio; grown lazily, cached
        self._columns = [self.beta * self.alpha.invert()]

    @property
    def truncation(self) -> int:
        return self.beta.precision

    @property
    def ratio(self) -> Series:
        """x/alpha, the column-to-column multiplier (valuation 1)."""
        return self._ratio

    def column(self, k: int) -> Series:
        """The k-th column series (beta/alpha) * (x/alpha)**k."""
        if not 0 <= k < self.truncation:
            raise IndexError(f"column {k} is beyond truncation {self.truncation}")
        cols = self._columns
        while len(cols) <= k:
            cols.append(cols[-1] * self._ratio)
        return cols[k]

    def entry(self, n: int, k: int) -> Fraction:
        """Matrix entry [x^n] (beta/alpha)(x/alpha)^k; zero above the diagonal."""
        if not 0 <= n < self.truncation:
            raise IndexError(f"row {n} is beyond truncation {self.truncation}")
        if not 0 <= k < self.truncation:
            raise IndexError(f"column {k} is beyond truncation {self.truncation}")
        if k > n:
            return Fraction(0)
        return self.column(k).coeff(n)

    def to_matrix(self, m: int) -> ExactMatrix:
        """The finite (m+1) x (m+1) window of the infinite matrix."""
        if not 0 <= m < self.truncation:
            raise IndexError(f"window size {m} is beyond truncation {self.truncation}")
        cols = [self.column(k) for k in range(m + 1)]
        return ExactMatrix._raw(
            [[cols[k].coeff(n) for k in range(m + 1)] for n in range(m + 1)]
        )

    def apply(self, g: Series) -> Series:
        """The induced linear action (beta/alpha) * g(x/alpha).

        Matches matrix-times-column on every coefficient it reports; the
        result precision is min(truncation, precision of g).
        """
        return self.column(0) * g.compose(self._ratio)

    def multiply(self, other: "RiordanPair") -> "RiordanPair":
        """Group product: T(b|a) T(b'|a') = T(b * b'(x/a) | a * a'(x/a))."""
        return RiordanPair(
            self.beta * other.beta.compose(self._ratio),
            self.alpha * other.alpha.compose(self._ratio),
        )

    __mul__ = multiply

    def inverse(self) -> "RiordanPair":
        """Group inverse T(1/beta(u) | 1/alpha(u)), u the reversion of x/alpha."""
        u = self._ratio.comp_inverse()
        return RiordanPair(
            self.beta.compose(u).invert(),
            self.alpha.compose(u).invert(),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return self.beta == other.beta and self.alpha == other.alpha

    __hash__ = None

    def __repr__(self) -> str:
        return f"RiordanPair(beta={self.beta!r}, alpha={self.alpha!r})"


def identity_pair(truncation: int) -> RiordanPair:
    """T(1|1), the identity of the group."""
    one = Series.one(truncation)
    return RiordanPair(one, one)


def pascal(truncation: int) -> RiordanPair:
    """Pascal's triangle T(1|1-x): entry (n, k) is the binomial C(n, k)."""
    return RiordanPair(Series.one(truncation), Series([1, -1], truncation))


def f_matrix(truncation: int) -> RiordanPair:
    """T(1/(1-x)|1-x): row n is the face-count vector of the solid n-simplex,
    entry (n, k) = C(n+1, k+1).  Equals Pascal's triangle with its first
    row and column deleted."""
    one_minus_x = Series([1, -1], truncation)
    return RiordanPair(one_minus_x.invert(), one_minus_x)
