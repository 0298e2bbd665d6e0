"""Covariance construction, elimination traces, and determinant oracles."""

from fractions import Fraction

import pytest

from gaussdet.exact import EtaPoly, EtaRatFunc, poly_h
from gaussdet.neville import (
    CovarianceParams,
    SymMatrix,
    ZeroPivotError,
    brute_force_det,
    build_covariance,
    diagonal_product,
    neville_eliminate,
)

HALF = Fraction(1, 2)


def symbolic(n):
    return build_covariance(CovarianceParams(n=n))


def numeric(n, eta):
    return build_covariance(CovarianceParams(n=n, eta_value=Fraction(eta)))


def mono(k):
    return EtaRatFunc(EtaPoly.monomial(k))


# -- parameters and construction --------------------------------------------------


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=0),
        dict(n=-2),
        dict(n=3, sigma_z_sq=Fraction(0)),
        dict(n=3, sigma_z_sq=Fraction(-1)),
        dict(n=3, eta_value=Fraction(1)),
        dict(n=3, eta_value=Fraction(0)),
        dict(n=3, eta_value=Fraction(3, 2)),
    ],
)
def test_params_validation(kwargs):
    with pytest.raises(ValueError):
        CovarianceParams(**kwargs)


def test_build_two_points():
    v = symbolic(2)
    assert v.rows == ((mono(0), mono(1)), (mono(1), mono(0)))


def test_build_three_points():
    v = symbolic(3)
    assert v.entry(1, 3) == mono(4)
    assert v.entry(2, 3) == mono(1)
    assert v.entry(2, 2) == 1
    assert v.is_symmetric()


def test_build_three_points_numeric():
    v = numeric(3, HALF)
    assert v.rows == (
        (Fraction(1), HALF, Fraction(1, 16)),
        (HALF, Fraction(1), HALF),
        (Fraction(1, 16), HALF, Fraction(1)),
    )


def test_matrix_must_be_square():
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ValueError):
        SymMatrix([])


def test_entry_indexing_is_one_based():
    v = symbolic(2)
    assert v.entry(1, 2) == mono(1)
    with pytest.raises(IndexError):
        v.entry(0, 1)
    with pytest.raises(IndexError):
        v.entry(1, 3)


# -- elimination --------------------------------------------------------------------


def test_two_point_elimination():
    trace = neville_eliminate(symbolic(2))
    assert trace.n == 2
    assert trace.stage(2).entry(2, 2) == poly_h(1)
    assert trace.stage(2).entry(2, 1) == 0


def test_three_point_stage_two_off_diagonal():
    trace = neville_eliminate(symbolic(3))
    # hand application of the update: eta - eta^4 * eta / 1
    assert trace.stage(2).entry(3, 2) == EtaPoly((0, 1, 0, 0, 0, -1))


def test_three_point_final_pivot_factors():
    trace = neville_eliminate(symbolic(3))
    assert trace.stage(3).entry(3, 3) == poly_h(1) * poly_h(2)


def test_first_stage_is_the_input():
    v = symbolic(4)
    assert neville_eliminate(v).stage(1) == v


@pytest.mark.parametrize("n", range(1, 7))
def test_trace_shape(n):
    trace = neville_eliminate(symbolic(n))
    assert trace.n == n
    for s in range(1, n + 1):
        stage = trace.stage(s)
        for i in range(s, n + 1):
            for j in range(1, s):
                assert stage.entry(i, j) == 0
        if s > 1:
            prev = trace.stage(s - 1)
            for i in range(1, s):
                for j in range(1, n + 1):
                    assert stage.entry(i, j) == prev.entry(i, j)


def test_zero_pivot_is_reported_with_its_stage():
    singular = SymMatrix([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    with pytest.raises(ZeroPivotError) as excinfo:
        neville_eliminate(singular)
    assert excinfo.value.stage == 2

    leading_zero = SymMatrix([[0, 1], [1, 0]])
    with pytest.raises(ZeroPivotError) as excinfo:
        neville_eliminate(leading_zero)
    assert excinfo.value.stage == 1


# -- determinants ---------------------------------------------------------------------


def test_diagonal_product_small_cases():
    assert diagonal_product(neville_eliminate(symbolic(1))) == 1
    assert diagonal_product(neville_eliminate(symbolic(2))) == poly_h(1)
    assert diagonal_product(neville_eliminate(symbolic(3))) == EtaPoly(
        (1, 0, -2, 0, 0, 0, 2, 0, -1)
    )


def test_brute_force_small_cases():
    assert brute_force_det(symbolic(2)) == poly_h(1)
    assert brute_force_det(symbolic(3)) == poly_h(1) ** 2 * poly_h(2)
    assert brute_force_det(numeric(3, HALF)) == Fraction(135, 256)


def test_brute_force_respects_size_bound():
    with pytest.raises(ValueError):
        brute_force_det(symbolic(4), bound=3)
    assert brute_force_det(symbolic(4), bound=4) == diagonal_product(
        neville_eliminate(symbolic(4))
    )


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_agreement_symbolic(n):
    assert diagonal_product(neville_eliminate(symbolic(n))) == brute_force_det(symbolic(n))


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("eta", [Fraction(1, 10), HALF, Fraction(9, 10)])
def test_oracle_agreement_numeric(n, eta):
    v = numeric(n, eta)
    assert diagonal_product(neville_eliminate(v)) == brute_force_det(v)


@pytest.mark.parametrize("n", range(1, 9))
def test_symbolic_and_numeric_elimination_commute(n):
    eta = HALF
    sym = neville_eliminate(symbolic(n))
    num = neville_eliminate(numeric(n, eta))
    for s in range(1, n + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert sym.stage(s).entry(i, j)(eta) == num.stage(s).entry(i, j)


@pytest.mark.parametrize("n", range(1, 9))
def test_every_trace_entry_reduces_to_denominator_one(n):
    trace = neville_eliminate(symbolic(n))
    for stage in trace.stages:
        for row in stage.rows:
            for entry in row:
                assert entry.is_polynomial


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("eta", [Fraction(1, 10), HALF, Fraction(9, 10)])
def test_stabilized_pivots_are_positive(n, eta):
    trace = neville_eliminate(symbolic(n))
    for s in range(1, n + 1):
        assert trace.diagonal(s)(eta) > 0


def test_trace_dump_golden():
    dump = neville_eliminate(symbolic(3)).dump()
    assert dump == (
        "Stage 1:\n"
        "1 | eta | eta^4\n"
        "eta | 1 | eta\n"
        "eta^4 | eta | 1\n"
        "\n"
        "Stage 2:\n"
        "1 | eta | eta^4\n"
        "0 | 1 - eta^2 | eta - eta^5\n"
        "0 | eta - eta^5 | 1 - eta^8\n"
        "\n"
        "Stage 3:\n"
        "1 | eta | eta^4\n"
        "0 | 1 - eta^2 | eta - eta^5\n"
        "0 | 0 | 1 - eta^2 - eta^4 + eta^6"
    )
