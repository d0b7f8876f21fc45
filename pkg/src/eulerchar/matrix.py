"""Dense matrices of exact rationals.

Just enough linear algebra for the finite matrix windows used elsewhere:
construction, product, difference, powers, and exact equality.  Entries
are always Fractions so the nullspace solver can consume any window
without conversions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .fps import as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ExactMatrix:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = [tuple(as_fraction(e) for e in row) for row in rows]
        if not rs or not rs[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rs[0])
        if any(len(r) != width for r in rs):
            raise ValueError("matrix rows must all have the same length")
        self._rows = tuple(rs)

    @classmethod
    def _raw(cls, rows) -> "ExactMatrix":
        m = object.__new__(cls)
        m._rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._raw(
            [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls._raw([[_ZERO] * cols for _ in range(rows)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = list(zip(*other._rows))  # column views
        return ExactMatrix._raw(
            [[_dot(r, c) for c in bt] for r in self._rows]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix difference needs equal shapes")
        return ExactMatrix._raw(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __pow__(self, k: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("matrix power needs a square matrix")
        if not isinstance(k, int) or k < 0:
            raise ValueError("matrix powers must be nonnegative integers")
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    __hash__ = None

    def to_strings(self) -> list[list[str]]:
        """Row-major grid of exact rational strings."""
        return [[str(e) for e in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"ExactMatrix({[[str(e) for e in row] for row in self._rows]})"


def _dot(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Fraction:
    acc = _ZERO
    for x, y in zip(xs, ys):
        if x and y:
            acc += x * y
    return acc


def row_times_matrix(row: Sequence, matrix: ExactMatrix) -> tuple[Fraction, ...]:
    """Row vector times matrix, the orientation f-vectors act in."""
    xs = [as_fraction(x) for x in row]
    if len(xs) != matrix.rows:
        raise ValueError("row length must equal the matrix row count")
    cols = list(zip(*matrix.entries))
    return tuple(_dot(xs, c) for c in cols)
