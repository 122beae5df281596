import pytest
from hypothesis import given, strategies as st

from reesalg.polyring import (
    Poly, biform, biform_coeffs, coeff_vector, from_vector, gcd_biforms, poly_det,
    squarefree_multiplicities, strand, strand_dim, substitute_T, tvar, upoly_mul, xvar, yvar,
)

P = 101


def polys(max_terms=4, max_exp=2):
    term = st.tuples(st.tuples(*[st.integers(0, max_exp)] * 5), st.integers(1, P - 1))
    return st.lists(term, max_size=max_terms).map(lambda ts: Poly(dict(ts), P))


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == Poly.zero(P)


@given(st.integers(0, 3), st.integers(0, 3), st.lists(st.integers(0, P - 1), min_size=40, max_size=40))
def test_strand_vector_roundtrip(i, j, coeffs):
    s = strand(i, j)
    assert len(s) == strand_dim(i, j)
    f = from_vector(coeffs[:len(s)] + [0] * max(0, len(s) - 40), s, P)
    assert list(coeff_vector(f, s)) == [c % P for c in (coeffs[:len(s)] + [0] * max(0, len(s) - 40))]


def test_bidegree_and_formatting():
    f = xvar(P) ** 2 * tvar(1, P) + yvar(P) ** 2 * tvar(3, P)
    assert f.bidegree() == (2, 1)
    assert Poly.zero(P).bidegree() is None
    with pytest.raises(ValueError):
        (f + xvar(P)).bidegree()
    assert repr(Poly.zero(P)) == "Poly(0)"


def test_substitute_T_kills_the_minors_relation():
    x, y = xvar(P), yvar(P)
    f = tvar(1, P) * y - tvar(2, P) * x
    assert substitute_T(f, x, y, x * 0 + x).is_zero()
    with pytest.raises(ValueError):
        substitute_T(f, x, y * y, x)


def test_squarefree_decomposition():
    # (u - 1)^2 (u - 2) -> {2: u - 1, 1: u - 2}
    a = upoly_mul(upoly_mul([P - 1, 1], [P - 1, 1], P), [P - 2, 1], P)
    assert squarefree_multiplicities(a, P) == {1: [P - 2, 1], 2: [P - 1, 1]}


def test_gcd_of_binary_forms_tracks_powers_of_y():
    x, y = xvar(P), yvar(P)
    assert gcd_biforms([x * y, x * x]) == x
    assert gcd_biforms([x * y * y, y * y * (x + y)]) == y * y
    assert gcd_biforms([x * x, y * y]).bidegree() == (0, 0)


def test_biform_coefficient_order_is_by_x_exponent():
    f = biform([1, 2, 3], P)
    x, y = xvar(P), yvar(P)
    assert f == y * y + x * y * 2 + x * x * 3
    assert biform_coeffs(f, 2) == [1, 2, 3]


def test_poly_det_matches_two_by_two():
    a, b, c, d = (tvar(k, P) for k in (1, 2, 3, 1))
    assert poly_det([[a, b], [c, d]]) == a * d - b * c
    m = [[tvar(1, P), Poly.zero(P), Poly.zero(P)],
         [Poly.zero(P), tvar(2, P), Poly.zero(P)],
         [Poly.zero(P), Poly.zero(P), tvar(3, P)]]
    assert poly_det(m) == tvar(1, P) * tvar(2, P) * tvar(3, P)
