"""Stirling numbers and the barycentric-subdivision operator.

Subdividing a complex barycentrically changes its face counts by a fixed
lower triangular integer matrix B with entries

    b[i][j] = (j+1)! * {i+1 choose j+1}_2      ({.}_2: second kind),

independent of the complex.  B factors as S*D where S holds the shifted
second-kind Stirling numbers and D = diag((i+1)!).  F-vectors transform
as rows multiplying B on the left; series coefficients transform as
columns, eta_i = sum_{j<=i} b[i][j] * zeta_j.  Keeping the two
orientations straight is the whole game, so both actions live here and
are pinned against each other in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .fps import Series
from .matrix import ExactMatrix


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into
    k nonempty blocks.  Zero when k > n; {0, 0} = 1."""
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if k > n:
        return 0
    if k == n:
        return 1
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of n
    elements with k cycles.  Zero when k > n; [0, 0] = 1."""
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be nonnegative")
    if k > n:
        return 0
    if k == n:
        return 1
    if k == 0:
        return 0
    return (n - 1) * stirling1(n - 1, k) + stirling1(n - 1, k - 1)


def stirling_triangle(kind: int, m: int) -> list[list[int]]:
    """Rows i = 0..m of the chosen triangle, row i holding entries j = 0..i."""
    if kind == 1:
        fn = stirling1
    elif kind == 2:
        fn = stirling2
    else:
        raise ValueError("kind must be 1 or 2")
    return [[fn(i, j) for j in range(i + 1)] for i in range(m + 1)]


def matrix_S(m: int) -> ExactMatrix:
    """(m+1)-window of the shifted second-kind triangle {i+1 choose j+1}."""
    _check_window(m)
    return ExactMatrix._raw(
        [
            [Fraction(stirling2(i + 1, j + 1)) for j in range(m + 1)]
            for i in range(m + 1)
        ]
    )


def matrix_S_inverse(m: int) -> ExactMatrix:
    """Exact inverse of matrix_S: entries (-1)^(i-j) [i+1 choose j+1]."""
    _check_window(m)
    return ExactMatrix._raw(
        [
            [
                Fraction((-1) ** (i - j) * stirling1(i + 1, j + 1))
                for j in range(m + 1)
            ]
            for i in range(m + 1)
        ]
    )


def matrix_D(m: int) -> ExactMatrix:
    """Diagonal window diag(1!, 2!, ..., (m+1)!)."""
    _check_window(m)
    zero = Fraction(0)
    return ExactMatrix._raw(
        [
            [Fraction(factorial(i + 1)) if i == j else zero for j in range(m + 1)]
            for i in range(m + 1)
        ]
    )


def matrix_B(m: int) -> ExactMatrix:
    """The subdivision window B_m = S_m * D_m, built entrywise."""
    _check_window(m)
    return ExactMatrix._raw(
        [[Fraction(_b_entry(i, j)) for j in range(m + 1)] for i in range(m + 1)]
    )


def _b_entry(i: int, j: int) -> int:
    return factorial(j + 1) * stirling2(i + 1, j + 1)


def _check_window(m: int) -> None:
    if m < 0:
        raise ValueError("window size must be nonnegative")


def sd_fvector(fvec: Sequence[int]) -> list[int]:
    """Face counts after one barycentric subdivision.

    For an input row (f_0, ..., f_m) the j-th output entry is
    sum_i f_i * (j+1)! * {i+1 choose j+1}_2, i.e. the row times B_m.
    """
    fv = list(fvec)
    if not fv:
        raise ValueError("f-vector must be nonempty")
    for entry in fv:
        if not isinstance(entry, int) or entry < 0:
            raise ValueError("f-vector entries must be nonnegative integers")
    m = len(fv) - 1
    return [
        sum(fv[i] * _b_entry(i, j) for i in range(j, m + 1)) for j in range(m + 1)
    ]


def apply_B(g: Series) -> Series:
    """The column action of B on series coefficients.

    eta_i = sum_{j<=i} b[i][j] * zeta_j; lower triangularity makes every
    output coefficient a finite sum, so the precision is preserved.
    1/(1+x) is a fixed point of this map.
    """
    zs = g.coeffs
    out = []
    for i in range(len(zs)):
        acc = Fraction(0)
        for j in range(i + 1):
            zj = zs[j]
            if zj:
                acc += _b_entry(i, j) * zj
        out.append(acc)
    return Series._raw(out)


def delta(precision: int) -> Series:
    """D applied to 1/(1+x): coefficients (i+1)! * (-1)^i.

    Feeding this through matrix_S gives back the coefficients of 1/(1+x),
    which is how the fixed point of B splits across the S*D factorization.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    return Series._raw(
        [Fraction((-1) ** i * factorial(i + 1)) for i in range(precision)]
    )
