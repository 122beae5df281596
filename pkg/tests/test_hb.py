import random

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from reesalg import exactlin as el
from reesalg.hb import (
    X2Y2_XY, Y2_X2, ExtensionRequired, Transform, ValidationError, apply_transform,
    canonical_shape, canonicalize_col1, coeff_C, generalized_zero_col1, mu_I1, mu_I2C,
    phi_from_C, random_hb, signed_minors, upsilon, validate,
)
from reesalg.polyring import Poly, tvar

P = 101


def test_minors_annihilate_phi(ex1, ex2):
    for hb in (ex1, ex2):
        for m in range(2):
            total = sum((hb.h[r] * hb.phi[r][m] for r in range(3)), Poly.zero(P))
            assert total.is_zero()
        assert all(f.bidegree() == (hb.d, 0) for f in hb.h)


def test_g_forms_and_coefficients(ex1):
    # g_m = sum_l c_{l,m} x^l y^(d_m - l); for EX1 column 1 is [x^2 + y^2, xy, 0]
    assert ex1.c(0, 1) == tvar(1, P)
    assert ex1.c(1, 1) == tvar(2, P)
    assert ex1.c(2, 1) == tvar(1, P)
    assert ex1.c(3, 1).is_zero() and ex1.c(-1, 2).is_zero()
    assert ex1.g[0].bidegree() == (2, 1) and ex1.g[1].bidegree() == (4, 1)


def test_columns_are_sorted_by_degree():
    raw = [[[0, 0, 0, 0, 0], [1, 0, 1]], [[1, 0, 0, 0, 0], [0, 1, 0]], [[1, 0, 0, 0, 1], [0, 0, 0]]]
    hb = validate(raw, P)
    assert hb.degs == (2, 4)


@pytest.mark.parametrize("raw, message", [
    ([[[1, 0], [1, 0]], [[0, 1], [0, 1]], [[0, 0], [0, 0]]], "vanishes"),
    ([[[1, 0]], [[0, 1]], [[0, 0]]], "3x2"),
    ([[[1, 0], [1, 0, 0]], [[0, 1, 1], [0, 1, 0]], [[0, 0], [0, 0, 1]]], "share one positive degree"),
])
def test_invalid_inputs_are_rejected(raw, message):
    with pytest.raises(ValidationError, match=message):
        validate(raw, P)


def test_non_prime_is_rejected(ex1):
    with pytest.raises(ValidationError):
        validate(ex1.to_json()["phi"], 100)


def test_common_factor_is_detected():
    # every entry divisible by x: minors share x^2
    raw = [[[0, 1], [0, 1, 0]], [[0, 0], [0, 0, 1]], [[0, 1], [0, 0, 0]]]
    with pytest.raises(ValidationError):
        validate(raw, P)


def test_upsilon_is_banded(ex1):
    mats = upsilon(ex1, 3, 2)
    assert mats[0].shape == (7, 3)
    for k in range(3):
        for c in range(1, 3):
            assert np.array_equal(mats[k][c:, c], mats[k][:7 - c, 0])


def test_generalized_zero_detection(ex1, ex2):
    assert generalized_zero_col1(ex1) == (True, 2)
    assert generalized_zero_col1(ex2)[0] is True   # [y^3, x^3, 0] spans two forms
    hb = random_hb(2, 4, P, random.Random(3))
    assert generalized_zero_col1(hb) == (False, 3)


def test_coefficient_matrix_roundtrip(ex2):
    C = coeff_C(ex2)
    assert phi_from_C(C, P).cols == ex2.cols
    assert (mu_I1(ex2), mu_I2C(ex2)) == (2, 1)


def test_canonical_examples(ex1):
    assert canonical_shape(ex1) == X2Y2_XY
    same, shape, t = canonicalize_col1(ex1)
    assert same is ex1 and shape == X2Y2_XY and t.L == ((1, 0), (0, 1))


def _invertible(draw_rows, n):
    m = np.array(draw_rows, dtype=np.int64).reshape(n, n)
    return m if el.det(m, P) else None


@settings(max_examples=25)
@given(st.lists(st.integers(0, P - 1), min_size=9, max_size=9),
       st.lists(st.integers(0, P - 1), min_size=4, max_size=4),
       st.sampled_from([X2Y2_XY, Y2_X2]))
def test_random_transforms_can_be_undone_to_either_shape(ex1, pm, lm, prefer):
    Pm, Lm = _invertible(pm, 3), _invertible(lm, 2)
    assume(Pm is not None and Lm is not None)
    t = Transform(tuple(tuple(int(a) for a in r) for r in Pm), tuple(tuple(int(a) for a in r) for r in Lm))
    moved = apply_transform(ex1, t)
    assume(canonical_shape(moved) is None)
    canon, shape, back = canonicalize_col1(moved, prefer)
    assert shape == prefer and canonical_shape(canon) == prefer
    assert apply_transform(moved, back).cols == canon.cols


def test_irrational_pencil_needs_extension():
    # degenerate members of <x^2 + 2y^2, xy> satisfy b^2 = 8a^2, and 8 is not a square mod 11
    raw = [[[2, 0, 1], [2, 9, 1, 4]], [[0, 1, 0], [1, 7, 7, 7]], [[0, 0, 0], [10, 6, 3, 1]]]
    hb = validate(raw, 11)
    with pytest.raises(ExtensionRequired):
        canonicalize_col1(hb)


def test_random_hb_is_seeded():
    a = random_hb(3, 3, P, random.Random(5))
    b = random_hb(3, 3, P, random.Random(5))
    assert a.cols == b.cols


def test_signed_minor_signs():
    x = Poly.var(0, P)
    y = Poly.var(1, P)
    z = Poly.zero(P)
    phi = [[x, z], [y, x], [z, y]]
    h = signed_minors(phi)
    assert h == (y * y - x * 0, -(x * y), x * x)
