"""Riordan pairs: triangle entries, group laws, and the induced action."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulerchar.fps import Series
from eulerchar.matrix import ExactMatrix
from eulerchar.riordan import RiordanPair, f_matrix, identity_pair, pascal

from oracles import binomial_table, matmul


def F(p, q=1):
    return Fraction(p, q)


def test_admissibility_requires_nonzero_constant_terms():
    with pytest.raises(ValueError):
        RiordanPair(Series([0, 1]), Series([1, 1]))
    with pytest.raises(ValueError):
        RiordanPair(Series([1, 1]), Series([0, 1]))


def test_truncation_is_min_of_pair():
    t = RiordanPair(Series([1, 2, 3]), Series([1, 1], 5))
    assert t.truncation == 3


# -- entries -----------------------------------------------------------


def test_pascal_entries_match_binomial_recurrence():
    table = binomial_table(7)
    p = pascal(8)
    for n in range(8):
        for k in range(8):
            expected = table[n][k] if k <= n else 0
            assert p.entry(n, k) == expected


def test_pascal_entry_example():
    assert pascal(8).entry(4, 2) == 6


def test_f_matrix_entry_is_simplex_vertex_count():
    # entry (2, 0) = C(3, 1) = 3, the vertex count of the solid 2-simplex
    assert f_matrix(8).entry(2, 0) == 3


def test_entries_above_diagonal_vanish():
    assert pascal(8).entry(1, 3) == 0
    assert f_matrix(8).entry(0, 5) == 0


def test_entry_beyond_truncation_raises():
    p = pascal(4)
    with pytest.raises(IndexError):
        p.entry(4, 0)
    with pytest.raises(IndexError):
        p.entry(0, 4)


def test_f_matrix_entries_shifted_binomials():
    table = binomial_table(9)
    fm = f_matrix(8)
    for n in range(8):
        for k in range(n + 1):
            assert fm.entry(n, k) == table[n + 1][k + 1]


# -- matrix windows ----------------------------------------------------


def test_pascal_window():
    assert pascal(4).to_matrix(2) == ExactMatrix([[1, 0, 0], [1, 1, 0], [1, 2, 1]])


def test_f_matrix_window_rows_are_simplex_fvectors():
    # Row n holds the face counts of the solid n-simplex, zero padded.
    assert f_matrix(4).to_matrix(2) == ExactMatrix([[1, 0, 0], [2, 1, 0], [3, 3, 1]])


def test_identity_pair_window():
    assert identity_pair(4).to_matrix(1) == ExactMatrix.identity(2)


def test_window_beyond_truncation_raises():
    with pytest.raises(IndexError):
        pascal(4).to_matrix(4)


def test_deleting_pascal_first_row_and_column_gives_f_matrix():
    p = pascal(12).to_matrix(9)
    fm = f_matrix(12).to_matrix(8)
    trimmed = [row[1:] for row in p.entries[1:]]
    assert ExactMatrix(trimmed) == fm


# -- action ------------------------------------------------------------


def test_euler_column_identity():
    # Applying the f-vector triangle to the Euler weights 1/(1+x) gives
    # the all-ones series: every solid simplex has characteristic 1.
    weights = Series([1, 1], 24).invert()
    out = f_matrix(24).apply(weights)
    assert all(c == 1 for c in out.coeffs)


def test_apply_to_zero_is_zero():
    out = pascal(6).apply(Series.zero(6))
    assert all(c == 0 for c in out.coeffs)


def test_pascal_row_sums_double():
    # Pascal applied to the all-ones column sums each row: 2^n.
    table = binomial_table(9)
    ones = Series([1, -1], 10).invert()
    out = pascal(10).apply(ones)
    for n in range(10):
        assert out.coeff(n) == sum(table[n])
        assert out.coeff(n) == 2**n


def test_apply_agrees_with_matrix_times_column():
    t = RiordanPair(Series([2, 1, -1], 6), Series([1, 3, 0, 1], 6))
    g = Series([1, -2, 0, 5, 1, -1])
    applied = t.apply(g)
    window = t.to_matrix(5)
    for n in range(6):
        expected = sum(window.entry(n, k) * g.coeff(k) for k in range(n + 1))
        assert applied.coeff(n) == expected


# -- group structure ---------------------------------------------------


def test_pascal_squared():
    # Pascal^2 = T(1 | 1-2x) with entries C(n,k) * 2^(n-k).
    p = pascal(8)
    sq = p.multiply(p)
    assert sq.beta == Series.one(8)
    assert sq.alpha == Series([1, -2], 8)
    table = binomial_table(7)
    direct = matmul(p.to_matrix(7).entries, p.to_matrix(7).entries)
    for n in range(8):
        for k in range(n + 1):
            assert sq.entry(n, k) == table[n][k] * 2 ** (n - k)
            assert sq.entry(n, k) == direct[n][k]


def test_right_identity():
    t = RiordanPair(Series([1, 2, 3, 1], 4), Series([2, -1, 1, 0], 4))
    assert t.multiply(identity_pair(4)) == t


def test_f_matrix_times_its_known_inverse_is_identity():
    n = 12
    fm = f_matrix(n)
    one_plus_x = Series([1, 1], n)
    candidate = RiordanPair(one_plus_x.invert(), one_plus_x)
    assert fm.multiply(candidate) == identity_pair(n)


def test_inverse_of_f_matrix():
    fi = f_matrix(12).inverse()
    one_plus_x = Series([1, 1], 12)
    assert fi.beta == one_plus_x.invert()
    assert fi.alpha == one_plus_x


def test_inverse_of_identity():
    assert identity_pair(6).inverse() == identity_pair(6)


def test_inverse_of_pascal():
    pi = pascal(10).inverse()
    assert pi.beta == Series.one(10)
    assert pi.alpha == Series([1, 1], 10)
    table = binomial_table(9)
    for n in range(10):
        for k in range(n + 1):
            assert pi.entry(n, k) == (-1) ** (n - k) * table[n][k]
    assert pascal(10).multiply(pi) == identity_pair(10)


# -- randomized group laws ----------------------------------------------

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonzero_leading = st.fractions(min_value=1, max_value=6, max_denominator=3)


@st.composite
def admissible_pairs(draw, precision=7):
    beta = [draw(nonzero_leading)] + draw(
        st.lists(rationals, min_size=precision - 1, max_size=precision - 1)
    )
    alpha = [draw(nonzero_leading)] + draw(
        st.lists(rationals, min_size=precision - 1, max_size=precision - 1)
    )
    return RiordanPair(Series(beta), Series(alpha))


series_values = st.lists(rationals, min_size=7, max_size=7).map(Series)


@settings(max_examples=25, deadline=None)
@given(admissible_pairs(), admissible_pairs(), series_values)
def test_action_is_compatible_with_product(t1, t2, g):
    assert t1.multiply(t2).apply(g) == t1.apply(t2.apply(g))


@settings(max_examples=25, deadline=None)
@given(admissible_pairs(), admissible_pairs())
def test_window_of_product_is_product_of_windows(t1, t2):
    m = 6
    product = t1.multiply(t2).to_matrix(m)
    direct = matmul(t1.to_matrix(m).entries, t2.to_matrix(m).entries)
    assert product == ExactMatrix(direct)


@settings(max_examples=25, deadline=None)
@given(admissible_pairs())
def test_inverse_law_in_windows(t):
    assert t.multiply(t.inverse()).to_matrix(6) == ExactMatrix.identity(7)


@settings(max_examples=25, deadline=None)
@given(admissible_pairs(), series_values, series_values, rationals, rationals)
def test_action_is_linear(t, f, g, a, b):
    combined = t.apply(f * a + g * b)
    assert combined == t.apply(f) * a + t.apply(g) * b


def test_matrix_homomorphism_at_larger_window():
    # One deterministic pass at the full m = 16 window size.
    t1 = RiordanPair(Series([1, 1, 0, 2], 17), Series([2, -1], 17))
    t2 = RiordanPair(Series([3, 0, 1], 17), Series([1, 1, 1], 17))
    product = t1.multiply(t2).to_matrix(16)
    direct = matmul(t1.to_matrix(16).entries, t2.to_matrix(16).entries)
    assert product == ExactMatrix(direct)
    assert t1.multiply(t1.inverse()).to_matrix(16) == ExactMatrix.identity(17)
