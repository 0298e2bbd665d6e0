"""Exhaustive minor evaluation and the strict-total-positivity probe."""

import itertools
from fractions import Fraction
from math import comb

import pytest

from gaussdet.closedform import factored_determinant
from gaussdet.tpprobe import MinorIndex, all_minors_positive, minor_value

HALF = Fraction(1, 2)


# -- index validation -------------------------------------------------------------


def test_minor_index_accepts_valid_sets():
    idx = MinorIndex((1, 3), (2, 4))
    assert idx.order == 2
    idx.validate_for(4)


@pytest.mark.parametrize(
    "rows, cols",
    [
        ((), ()),
        ((1, 2), (1,)),
        ((2, 1), (1, 2)),
        ((1, 1), (1, 2)),
        ((0, 1), (1, 2)),
    ],
)
def test_minor_index_rejects_bad_sets(rows, cols):
    with pytest.raises(ValueError):
        MinorIndex(rows, cols)


def test_minor_index_range_check():
    idx = MinorIndex((1, 4), (2, 3))
    with pytest.raises(ValueError):
        idx.validate_for(3)
    with pytest.raises(ValueError):
        minor_value(3, HALF, idx)


# -- single minors ----------------------------------------------------------------


def test_two_by_two_minor_by_hand():
    # rows {1,2}, cols {2,3}: det [[1/2, 1/16], [1, 1/2]] = 1/4 - 1/16
    assert minor_value(3, HALF, MinorIndex((1, 2), (2, 3))) == Fraction(3, 16)


def test_diagonal_entry_minor():
    assert minor_value(3, HALF, MinorIndex((2,), (2,))) == 1


def test_full_minor_matches_factored_determinant():
    idx = MinorIndex((1, 2, 3), (1, 2, 3))
    assert minor_value(3, HALF, idx) == Fraction(135, 256)
    assert minor_value(3, HALF, idx) == factored_determinant(3).evaluate(HALF)


def test_minor_value_validates_eta_and_method():
    idx = MinorIndex((1,), (1,))
    with pytest.raises(ValueError):
        minor_value(2, Fraction(3, 2), idx)
    with pytest.raises(ValueError):
        minor_value(2, Fraction(0), idx)
    with pytest.raises(ValueError):
        minor_value(2, HALF, idx, method="cofactor")


@pytest.mark.parametrize("eta", [Fraction(1, 10), HALF, Fraction(9, 10)])
def test_leibniz_and_bareiss_agree_on_all_minors_up_to_five(eta):
    n = 5
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(1, n + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                idx = MinorIndex(rows, cols)
                assert minor_value(n, eta, idx, method="leibniz") == minor_value(
                    n, eta, idx, method="bareiss"
                )


def test_leibniz_and_bareiss_agree_on_larger_spot_checks():
    for idx in (
        MinorIndex((1, 2, 3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6, 7)),
        MinorIndex((1, 2, 4, 5, 6, 7), (2, 3, 4, 5, 6, 7)),
    ):
        assert minor_value(7, HALF, idx, method="leibniz") == minor_value(
            7, HALF, idx, method="bareiss"
        )


def test_bareiss_handles_a_zero_leading_pivot():
    # not a covariance matrix; exercises the row-swap path through minor internals
    from gaussdet.tpprobe import _det_bareiss

    assert _det_bareiss([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == -1
    assert _det_bareiss([[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]) == 0


# -- exhaustive sweeps ---------------------------------------------------------------


def test_two_point_report():
    report = all_minors_positive(2, HALF)
    assert report.all_positive
    assert report.minors_checked == 5  # four 1x1, one 2x2
    assert minor_value(2, HALF, MinorIndex((1, 2), (1, 2))) == Fraction(3, 4)
    idx, value = report.min_minor
    assert (idx.rows, idx.cols, value) == ((1,), (2,), HALF)


def test_three_point_report():
    report = all_minors_positive(3, HALF)
    assert report.all_positive
    assert report.minors_checked == 19
    idx, value = report.min_minor
    assert (idx.rows, idx.cols, value) == ((1,), (3,), Fraction(1, 16))


def test_single_point_report():
    report = all_minors_positive(1, HALF)
    assert report.all_positive
    assert report.minors_checked == 1
    assert report.min_minor[1] == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_minor_count_formula(n):
    report = all_minors_positive(n, HALF)
    assert report.minors_checked == sum(comb(n, k) ** 2 for k in range(1, n + 1))


def test_transpose_symmetry():
    n = 4
    eta = Fraction(1, 3)
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(1, n + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                assert minor_value(n, eta, MinorIndex(rows, cols)) == minor_value(
                    n, eta, MinorIndex(cols, rows)
                )


@pytest.mark.parametrize("eta", [HALF, Fraction(9, 10)])
def test_principal_minors_match_factored_truncations(eta):
    for n in range(1, 8):
        for m in range(1, n + 1):
            idx = MinorIndex(tuple(range(1, m + 1)), tuple(range(1, m + 1)))
            assert minor_value(n, eta, idx) == factored_determinant(m).evaluate(eta)


def test_all_minors_positive_validation():
    with pytest.raises(ValueError):
        all_minors_positive(0, HALF)
    with pytest.raises(ValueError):
        all_minors_positive(9, HALF)  # default bound is 8
    with pytest.raises(ValueError):
        all_minors_positive(3, Fraction(7, 5))


def test_bound_is_a_knob_not_a_hard_limit():
    report = all_minors_positive(3, HALF, bound=3)
    assert report.minors_checked == 19
    with pytest.raises(ValueError):
        all_minors_positive(4, HALF, bound=3)
