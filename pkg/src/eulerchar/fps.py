"""Truncated formal power series over the rationals.

A :class:`Series` holds the first N coefficients of an element of Q[[x]],
together with that explicit precision N.  Coefficients are
:class:`fractions.Fraction` values, so every operation is exact; nothing
is ever rounded.  Binary operations report ``min(precision, precision)``
coefficients: a result never claims more terms than its inputs justify.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[int, str, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NonInvertibleError(ValueError):
    """Multiplicative inversion of a series whose constant term is zero."""


class CompositionError(ValueError):
    """Composition f(g) where the inner series has a nonzero constant term."""


class ReversionError(ValueError):
    """Compositional inversion of a series whose valuation is not exactly 1."""


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction.

    Floats are rejected outright: admitting one would silently smuggle a
    rounding error into a pipeline whose whole point is exactness.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float coefficient {value!r}")
    return Fraction(value)


def _mul_lists(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    # Cauchy product of the first n coefficients, skipping zero terms;
    # the skip matters because composition arguments have valuation >= 1.
    out = [_ZERO] * n
    for i in range(min(n, len(a))):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(n - i, len(b))):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


class Series:
    """The first ``precision`` coefficients of a formal power series."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], precision: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        if precision is not None:
            if precision < 1:
                raise ValueError("precision must be at least 1")
            # Padding asserts the omitted coefficients are exact zeros,
            # which is only sound for polynomials given in full.
            cs = cs[:precision] + [_ZERO] * (precision - len(cs))
        if not cs:
            raise ValueError("a series needs at least one known coefficient")
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs) -> "Series":
        # Internal fast path: trusted list/tuple of Fractions.
        s = object.__new__(cls)
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    def constant(cls, value: RationalLike, precision: int) -> "Series":
        if precision < 1:
            raise ValueError("precision must be at least 1")
        return cls._raw([as_fraction(value)] + [_ZERO] * (precision - 1))

    @classmethod
    def zero(cls, precision: int) -> "Series":
        return cls.constant(0, precision)

    @classmethod
    def one(cls, precision: int) -> "Series":
        return cls.constant(1, precision)

    @classmethod
    def x(cls, precision: int) -> "Series":
        """The identity series x, truncated to the requested precision."""
        return cls([0, 1], precision)

    # -- inspection ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    def coeff(self, n: int) -> Fraction:
        """Coefficient of x^n; raises IndexError beyond the precision."""
        if not 0 <= n < len(self._coeffs):
            raise IndexError(f"coefficient {n} is beyond precision {len(self._coeffs)}")
        return self._coeffs[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coeff(n)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all known
        coefficients vanish (valuation beyond the precision)."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def truncate(self, precision: int) -> "Series":
        if not 1 <= precision <= len(self._coeffs):
            raise ValueError(
                f"cannot truncate precision {len(self._coeffs)} to {precision}"
            )
        return Series._raw(self._coeffs[:precision])

    def to_strings(self) -> list[str]:
        """Coefficients as exact strings, "p/q" or plain "p" when q = 1."""
        return [str(c) for c in self._coeffs]

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        return Series._raw([self._coeffs[i] + other._coeffs[i] for i in range(n)])

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        return Series._raw([self._coeffs[i] - other._coeffs[i] for i in range(n)])

    def __neg__(self) -> "Series":
        return Series._raw([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(len(self._coeffs), len(other._coeffs))
            return Series._raw(_mul_lists(list(self._coeffs), list(other._coeffs), n))
        s = as_fraction(other)
        return Series._raw([c * s for c in self._coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.invert()
        s = as_fraction(other)
        if not s:
            raise ZeroDivisionError("division of a series by zero")
        return Series._raw([c / s for c in self._coeffs])

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers must be nonnegative integers")
        result = Series.one(len(self._coeffs))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "Series":
        """Multiplicative inverse g with self * g = 1 up to the precision.

        Solves the convolution recurrence g_0 = 1/f_0,
        g_n = -(sum_{k=1..n} f_k g_{n-k}) / f_0.
        """
        c = self._coeffs
        if not c[0]:
            raise NonInvertibleError("series with zero constant term has no inverse")
        n = len(c)
        inv0 = _ONE / c[0]
        out = [inv0] + [_ZERO] * (n - 1)
        for k in range(1, n):
            acc = _ZERO
            for j in range(1, k + 1):
                cj = c[j]
                if cj:
                    acc += cj * out[k - j]
            if acc:
                out[k] = -inv0 * acc
        return Series._raw(out)

    def compose(self, inner: "Series") -> "Series":
        """f(g(x)) for an inner series g of positive valuation.

        Horner evaluation: coefficient n of the result depends only on
        coefficients 0..n of both operands, so truncation is stable.
        """
        if not isinstance(inner, Series):
            raise TypeError("can only compose with another Series")
        if inner._coeffs[0]:
            raise CompositionError(
                "inner series must have zero constant term for composition"
            )
        n = min(len(self._coeffs), len(inner._coeffs))
        f = self._coeffs
        g = list(inner._coeffs[:n])
        acc = [f[n - 1]] + [_ZERO] * (n - 1)
        for k in range(n - 2, -1, -1):
            acc = _mul_lists(acc, g, n)
            acc[0] += f[k]
        return Series._raw(acc)

    def comp_inverse(self) -> "Series":
        """Compositional inverse v with self(v) = v(self) = x.

        Requires valuation exactly 1.  Solves the triangular recurrence
        obtained by matching coefficients in compose(v, self) = x, using
        incrementally maintained powers of self:

            sum_{k=1..m} v_k * (self^k)[m] = [m == 1]
        """
        c = self._coeffs
        n = len(c)
        if c[0] or n < 2 or not c[1]:
            raise ReversionError(
                "compositional inverse needs valuation exactly 1 "
                "(zero constant term, nonzero linear term)"
            )
        w = list(c)
        powers: list[list[Fraction]] = [[], w]  # powers[k] = self^k
        v = [_ZERO, _ONE / c[1]]
        for m in range(2, n):
            powers.append(_mul_lists(powers[-1], w, n))
            acc = _ZERO
            for k in range(1, m):
                pkm = powers[k][m]
                if pkm:
                    acc += v[k] * pkm
            v.append(-acc / powers[m][m])
        return Series._raw(v)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        """Coefficient-wise equality up to the smaller precision."""
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        return self._coeffs[:n] == other._coeffs[:n]

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None  # equality up to min precision is not hashable

    def __repr__(self) -> str:
        return f"Series([{', '.join(self.to_strings())}])"
