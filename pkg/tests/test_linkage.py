import random

import pytest
from hypothesis import given, settings, strategies as st

from reesalg import oracle
from reesalg.hb import random_hb
from reesalg.linkage import (
    delta_minors, lambda_matrix, row_basis_forms, span_dim_in_sym, sylvester_form, xi_matrix,
)
from reesalg.polyring import Poly, substitute_T

P = 101


def _row_times(row, mat, col):
    return sum((row[r] * mat[r][col] for r in range(len(row))), Poly.zero(P))


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_lambda_is_a_syzygy_of_the_monomial_row(l):
    row, lam = row_basis_forms(l, P), lambda_matrix(l, P)
    assert all(_row_times(row, lam, c).is_zero() for c in range(l))


def test_xi_factors_the_g_forms(ex1):
    for l in range(1, ex1.d1 + 1):
        row, xi = row_basis_forms(l, P), xi_matrix(ex1, l)
        assert _row_times(row, xi, 0) == ex1.g[0]
        assert _row_times(row, xi, 1) == ex1.g[1]


def test_delta_minor_ranges(ex1):
    with pytest.raises(ValueError):
        delta_minors(ex1, ex1.d2 - 2)
    for i in range(ex1.d2 - 1, ex1.delta + 1):
        ms = delta_minors(ex1, i)
        assert len(ms) == ex1.d - 1 - i
        assert all(f.bidegree() == (i, 2) for f in ms)


@settings(max_examples=8)
@given(st.integers(0, 10_000), st.sampled_from([(2, 3), (2, 4), (3, 3), (3, 4)]))
def test_delta_minors_lie_in_a_and_are_independent(seed, degs):
    hb = random_hb(*degs, P, random.Random(seed))
    for i in range(hb.d2 - 1, hb.delta + 1):
        ms = delta_minors(hb, i)
        assert all(substitute_T(f, *hb.h).is_zero() for f in ms)
        assert span_dim_in_sym(hb, ms, i, 2) == oracle.a_dim(hb, i, 2) == len(ms)


def test_sylvester_form_spans_top_strand(ex1, ex2):
    for hb in (ex1, ex2):
        f = sylvester_form(hb)
        assert f.bidegree() == (hb.delta, 2)
        assert span_dim_in_sym(hb, [f], hb.delta, 2) == oracle.a_dim(hb, hb.delta, 2) == 1
