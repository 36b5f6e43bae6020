import pytest

from icg2t import generator
from icg2t.corpus import split_matrix_corpus
from icg2t.errors import DegenerateError, DomainError, NonSplitError
from icg2t.generator import (
    GeneratorParams,
    ParityClass,
    closed_form_traj,
    iterate,
    matrix_from_params,
    mobius_apply,
    params_from_matrix,
    period,
    split_eigenvalues,
    sqrt_2adic,
    validate_matrix,
)

WORKED = validate_matrix(1, 0, 8, 5, 4)


def test_validate_matrix_parity_classes():
    assert WORKED.parity_class is ParityClass.IDENTITY_LIKE
    assert validate_matrix(0, 1, 1, 0, 4).parity_class is ParityClass.SWAP_LIKE
    with pytest.raises(DomainError):
        validate_matrix(1, 1, 0, 1, 4)  # wrong parity pattern
    with pytest.raises(DomainError):
        validate_matrix(2, 0, 0, 2, 4)  # even determinant


def test_mobius_apply_and_iterate():
    assert mobius_apply(WORKED, 15) == 11
    assert iterate(WORKED, 15, 0, 4).values == [15, 11, 7, 3]


def test_sqrt_2adic():
    for u in (1, 9, 17, 25, 33, 41):
        r = sqrt_2adic(u, 10)
        assert (r * r - u) % (1 << 10) == 0
        assert r % 4 == 1


def test_split_eigenvalues_worked_example():
    th1, th2 = split_eigenvalues(WORKED)
    m = 1 << (WORKED.t + 2)
    tr, det = WORKED.trace(), WORKED.det()
    for th in (th1, th2):
        assert (th * th - tr * th + det) % (1 << WORKED.t) == 0


def test_split_eigenvalues_nonsplit():
    # trace^2 - 4 det = 4 + 28 = 32: odd 2-adic valuation, no square root
    with pytest.raises(NonSplitError):
        split_eigenvalues(validate_matrix(1, 2, 4, 1, 5))


def test_params_from_matrix_worked_example():
    p = params_from_matrix(WORKED, 15)
    assert closed_form_traj(p, 0, 4).values == [15, 11, 7, 3]
    assert p.g == 5 and p.b % 2 == 0


def test_matrix_from_params_round_trip():
    p = GeneratorParams(g=5, a=1, b=2, c=0, t=4)
    mat = matrix_from_params(p)
    assert iterate(mat, 15, 0, 8).values == closed_form_traj(p, 0, 8).values


def test_round_trip_on_corpus():
    for mat, u0, p in split_matrix_corpus(11, 15, t_min=5, t_max=16):
        n = min(period(p).value, 256)
        assert closed_form_traj(p, 0, n).values == iterate(mat, u0, 0, n).values
        if p.a % 2 == 1:  # even-a orbits have no unit-Moebius matrix form
            mat2 = matrix_from_params(p)
            assert iterate(mat2, u0, 0, n).values == iterate(mat, u0, 0, n).values


def test_period_exactness():
    p = GeneratorParams(g=5, a=1, b=2, c=0, t=4)
    assert period(p) == (4, True)
    even_a = GeneratorParams(g=5, a=2, b=0, c=0, t=4)
    assert period(even_a).exact is False


def test_generator_params_validation():
    with pytest.raises(DomainError):
        GeneratorParams(g=4, a=1, b=0, c=0, t=5)  # even g
    with pytest.raises(DomainError):
        GeneratorParams(g=3, a=1, b=1, c=0, t=5)  # odd b


def test_degenerate_matrix_rejected():
    # scalar matrix: the map is x -> x + const shape with no split spectrum
    mat = validate_matrix(1, 0, 0, 1, 5)
    with pytest.raises((DegenerateError, NonSplitError)):
        params_from_matrix(mat, 7)
