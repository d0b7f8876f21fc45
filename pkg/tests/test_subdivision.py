"""Stirling numbers and the subdivision operator B = S*D."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from eulerchar.fps import Series
from eulerchar.matrix import ExactMatrix, row_times_matrix
from eulerchar.subdivision import (
    apply_B,
    delta,
    matrix_B,
    matrix_D,
    matrix_S,
    matrix_S_inverse,
    sd_fvector,
    stirling1,
    stirling2,
    stirling_triangle,
)


# -- Stirling numbers ---------------------------------------------------


def test_stirling2_against_partition_enumeration():
    from oracles import count_set_partitions

    for n in range(8):
        for k in range(n + 2):
            assert stirling2(n, k) == count_set_partitions(n, k)


def test_stirling1_against_cycle_enumeration():
    from oracles import count_permutations_by_cycles

    for n in range(7):
        for k in range(n + 2):
            assert stirling1(n, k) == count_permutations_by_cycles(n, k)


def test_stirling_examples():
    assert stirling2(3, 2) == 3
    for n in range(10):
        assert stirling2(n, n) == 1
        assert stirling1(n, n) == 1
    for n in range(1, 10):
        assert stirling2(n, 1) == 1


def test_stirling1_row_sums_are_factorials():
    assert sum(stirling1(4, j) for j in range(5)) == 24
    for i in range(16):
        assert sum(stirling1(i, j) for j in range(i + 1)) == factorial(i)


def test_stirling1_column_zero_vanishes():
    for i in range(1, 16):
        assert stirling1(i, 0) == 0


def test_out_of_range_indices():
    assert stirling2(2, 5) == 0
    assert stirling1(3, 7) == 0
    with pytest.raises(ValueError):
        stirling2(-1, 0)
    with pytest.raises(ValueError):
        stirling1(2, -2)


def test_stirling_triangle_rows():
    assert stirling_triangle(2, 3) == [[1], [0, 1], [0, 1, 1], [0, 1, 3, 1]]
    assert stirling_triangle(1, 3) == [[1], [0, 1], [0, 1, 1], [0, 2, 3, 1]]
    with pytest.raises(ValueError):
        stirling_triangle(3, 2)


# -- matrices -----------------------------------------------------------


def test_b_window_values():
    assert matrix_B(2) == ExactMatrix([[1, 0, 0], [1, 2, 0], [1, 6, 6]])


def test_b_diagonal_is_distinct_factorials():
    b = matrix_B(10)
    diag = [b.entry(i, i) for i in range(11)]
    assert diag == [Fraction(factorial(i + 1)) for i in range(11)]
    assert len(set(diag)) == 11


def test_d_window():
    assert matrix_D(2) == ExactMatrix([[1, 0, 0], [0, 2, 0], [0, 0, 6]])


def test_b_factors_as_s_times_d():
    for m in range(21):
        assert matrix_S(m) * matrix_D(m) == matrix_B(m)


def test_s_inverse_small_window():
    assert matrix_S_inverse(1) == ExactMatrix([[1, 0], [-1, 1]])
    assert matrix_S_inverse(0) == ExactMatrix([[1]])


def test_s_inverse_both_sides():
    for m in range(13):
        identity = ExactMatrix.identity(m + 1)
        assert matrix_S(m) * matrix_S_inverse(m) == identity
        assert matrix_S_inverse(m) * matrix_S(m) == identity


# -- the two actions of B ----------------------------------------------


def test_sd_fvector_solid_triangle():
    assert sd_fvector([3, 3, 1]) == [7, 12, 6]


def test_sd_fvector_point_and_edge():
    assert sd_fvector([1]) == [1]
    assert sd_fvector([2, 1]) == [3, 2]


def test_sd_fvector_validates_input():
    with pytest.raises(ValueError):
        sd_fvector([])
    with pytest.raises(ValueError):
        sd_fvector([1, -2])
    with pytest.raises(ValueError):
        sd_fvector([Fraction(1, 2)])


def test_apply_B_fixed_point():
    for precision in (1, 2, 5, 16, 40):
        euler = Series([1, 1], precision).invert()
        assert apply_B(euler).coeffs == euler.coeffs


def test_apply_B_zero():
    assert apply_B(Series.zero(6)).coeffs == (Fraction(0),) * 6


def test_apply_B_constant_one():
    # First column of B is all ones, so B(1) is the all-ones series.
    out = apply_B(Series.one(8))
    assert out.coeffs == (Fraction(1),) * 8


def test_delta_values():
    assert delta(4).coeffs == (Fraction(1), Fraction(-2), Fraction(6), Fraction(-24))
    assert delta(1).coeff(0) == 1


def test_s_window_maps_delta_to_euler_weights():
    m = 20
    window = matrix_S(m)
    d = delta(m + 1)
    for i in range(m + 1):
        acc = sum(window.entry(i, j) * d.coeff(j) for j in range(i + 1))
        assert acc == Fraction(-1) ** i


# -- consistency of the row and column conventions ----------------------

fvector_rows = st.lists(st.integers(min_value=0, max_value=50), min_size=1, max_size=7)
series_columns = st.lists(
    st.fractions(min_value=-8, max_value=8, max_denominator=5),
    min_size=1,
    max_size=8,
).map(Series)


@given(fvector_rows)
def test_sd_fvector_is_row_times_window(fv):
    m = len(fv) - 1
    via_matrix = row_times_matrix(fv, matrix_B(m))
    assert list(via_matrix) == sd_fvector(fv)


@given(series_columns)
def test_apply_B_is_window_times_column(zeta):
    m = zeta.precision - 1
    window = matrix_B(m)
    image = apply_B(zeta)
    for i in range(m + 1):
        expected = sum(window.entry(i, j) * zeta.coeff(j) for j in range(i + 1))
        assert image.coeff(i) == expected


@given(fvector_rows)
def test_subdivision_preserves_alternating_sum(fv):
    def chi(row):
        return sum((-1) ** i * e for i, e in enumerate(row))

    assert chi(sd_fvector(fv)) == chi(fv)
