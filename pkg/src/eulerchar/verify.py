"""Exact kernels and the finite-window uniqueness checks.

The two headline facts this package mechanizes are checked here at any
finite truncation: the only weight series assigning the same value to
every solid simplex are k/(1+x) (recovered by inverting the f-vector
triangle), and the only series fixed by the subdivision operator B are
c/(1+x) (the unit eigenspace of every finite window B_m is
one-dimensional because the diagonal factorials are distinct).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .fps import RationalLike, Series, as_fraction
from .matrix import ExactMatrix, row_times_matrix
from .riordan import f_matrix
from .simplicial import Complex
from .subdivision import apply_B, matrix_B

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class NullspaceBasis:
    """Exact basis of a kernel, in reduced-echelon canonical form.

    Each basis column sets one free variable to 1 (free columns taken in
    increasing index order) and solves the pivot rows, so the basis is
    deterministic for a given matrix.
    """

    dimension: int
    basis: tuple[tuple[Fraction, ...], ...]


def nullspace(matrix: ExactMatrix) -> NullspaceBasis:
    """Exact basis of {v : M v = 0} by Gauss-Jordan elimination.

    Leftmost-nonzero pivoting; exact rationals need no magnitude
    heuristics.  dimension = cols - rank.
    """
    rows = [list(r) for r in matrix.entries]
    ncols = matrix.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = _ONE / rows[r][c]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1

    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * ncols
        v[fc] = _ONE
        for row_index, pc in enumerate(pivots):
            v[pc] = -rows[row_index][fc]
        basis.append(tuple(v))
    return NullspaceBasis(dimension=len(free), basis=tuple(basis))


def eigenspace_of_b(m: int) -> NullspaceBasis:
    """Kernel of B_m - I: the fixed vectors of the subdivision window.

    Expected outcome at every m: dimension 1, basis proportional to the
    alternating vector (1, -1, 1, ...), the coefficients of 1/(1+x).
    """
    window = matrix_B(m)
    return nullspace(window - ExactMatrix.identity(m + 1))


def homotopy_unique(k: RationalLike, precision: int) -> Series:
    """The unique weight series taking value k on every solid simplex.

    Inverts the f-vector triangle against the constant profile k/(1-x);
    the result must equal k/(1+x), i.e. k times the Euler weights.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    kf = as_fraction(k)
    constant_profile = Series.constant(kf, precision) * Series(
        [1, -1], precision
    ).invert()
    return f_matrix(precision).inverse().apply(constant_profile)


class SdInvariance(NamedTuple):
    invariant: bool
    first_mismatch: Optional[int]


def check_sd_invariant(g: Series) -> SdInvariance:
    """Whether g is fixed by the subdivision operator, up to its precision.

    Returns the first coefficient index where B(g) differs from g as the
    certificate of failure; (True, None) when fixed.
    """
    image = apply_B(g)
    for i in range(g.precision):
        if image.coeff(i) != g.coeff(i):
            return SdInvariance(False, i)
    return SdInvariance(True, None)


@dataclass(frozen=True)
class ChiReportRow:
    k: int
    fvec_complex: tuple[int, ...]
    fvec_matrix: tuple[int, ...]
    chi_complex: int
    chi_matrix: int

    @property
    def agree(self) -> bool:
        return (
            self.fvec_complex == self.fvec_matrix
            and self.chi_complex == self.chi_matrix
        )


@dataclass(frozen=True)
class ChiSdReport:
    rows: tuple[ChiReportRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(row.agree for row in self.rows)

    @property
    def chi_values(self) -> tuple[int, ...]:
        return tuple(row.chi_complex for row in self.rows)


def chi_sd_report(complex_: Complex, kmax: int) -> ChiSdReport:
    """Euler characteristics of iterated subdivisions, two ways.

    For k = 0..kmax the f-vector of the k-th subdivision is computed
    both by genuinely subdividing the complex and as the row product
    f * B^k; the report records both alternating sums.  They agree, and
    stay constant in k, exactly because 1/(1+x) is fixed by B.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    base_fv = complex_.f_vector()
    m = len(base_fv) - 1
    window = matrix_B(m)

    rows = []
    current = complex_
    for k in range(kmax + 1):
        fv_complex = tuple(current.f_vector())
        fv_row = row_times_matrix(base_fv, window**k)
        fv_matrix = tuple(int(e) for e in fv_row)
        rows.append(
            ChiReportRow(
                k=k,
                fvec_complex=fv_complex,
                fvec_matrix=fv_matrix,
                chi_complex=_alternating_sum(fv_complex),
                chi_matrix=_alternating_sum(fv_matrix),
            )
        )
        if k < kmax:
            current = current.barycentric_subdivision()
    return ChiSdReport(rows=tuple(rows))


def _alternating_sum(fv: Sequence[int]) -> int:
    return sum((-1) ** i * fi for i, fi in enumerate(fv))
