import numpy as np
import pytest
from hypothesis import given, strategies as st

from reesalg import exactlin as el

P = 101


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, P - 1), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


@given(matrices())
def test_rank_plus_nullity_is_column_count(rows):
    m = np.array(rows, dtype=np.int64)
    assert el.rank(m, P) + len(el.kernel_basis(m, P)) == m.shape[1]


@given(matrices())
def test_kernel_vectors_are_killed(rows):
    m = np.array(rows, dtype=np.int64)
    for v in el.kernel_basis(m, P):
        assert not np.any(el.matmul(m, v.reshape(-1, 1), P))


@given(matrices())
def test_rref_rows_span_the_row_space(rows):
    m = np.array(rows, dtype=np.int64)
    r, red, pivots = el.rref(m, P)
    assert len(pivots) == r
    assert el.rank(np.vstack([m, red[:r]]), P) == r
    for k, c in enumerate(pivots):
        assert red[k, c] == 1


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(0, P - 1), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(st.integers(0, P - 1), min_size=n, max_size=n), min_size=n, max_size=n))))
def test_det_is_multiplicative(pair):
    a, b = (np.array(x, dtype=np.int64) for x in pair)
    assert el.det(el.matmul(a, b, P), P) == el.det(a, P) * el.det(b, P) % P


def test_det_of_singular_and_permutation():
    assert el.det(np.array([[1, 2], [2, 4]]), P) == 0
    assert el.det(np.array([[0, 1], [1, 0]]), P) == P - 1


def test_matmul_chunks_long_inner_dimension():
    p = 2**31 - 1
    n = 5
    a = np.full((1, n), p - 1, dtype=np.int64)
    b = np.full((n, 1), p - 1, dtype=np.int64)
    assert el.matmul(a, b, p)[0, 0] == n % p


@pytest.mark.parametrize("p", [101, 10007, 97, 13, 17])
def test_sqrt_mod_p_squares_back(p):
    for a in range(p):
        r = el.sqrt_mod_p(a, p)
        if el.legendre(a, p) == -1:
            assert r is None
        else:
            assert r * r % p == a


def test_solve_and_inconsistency():
    a = np.array([[1, 1], [0, 1]])
    x = el.solve(a, np.array([3, 1]), P)
    assert list(el.matmul(a, x.reshape(-1, 1), P).ravel()) == [3, 1]
    with pytest.raises(ValueError):
        el.solve(np.array([[1, 1], [1, 1]]), np.array([0, 1]), P)


def test_independent_rows_picks_a_basis():
    m = np.array([[1, 2], [2, 4], [0, 1]])
    assert el.independent_rows(m, P) == [0, 2]


def test_is_prime_and_inverse():
    assert [n for n in range(20) if el.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert el.inv_mod(3, P) * 3 % P == 1
    with pytest.raises(ZeroDivisionError):
        el.inv_mod(0, P)
