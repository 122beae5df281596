"""Oracle regressions: [DERIVED] values were produced by the oracle itself and frozen."""

import pytest

from reesalg import oracle
from reesalg.polyring import substitute_T, tvar

P = 101


def _t(a, b, c):
    return tvar(1, P) ** a * tvar(2, P) ** b * tvar(3, P) ** c


def test_ex1_implicit_equation(ex1):
    res = oracle.resultant(ex1)
    expected = (_t(4, 2, 0) + _t(4, 1, 1) * 4 + _t(4, 0, 2) * 4 - _t(2, 3, 1) * 4
                - _t(2, 2, 2) * 4 + _t(0, 5, 1) + _t(0, 4, 2))
    assert oracle.proportional(res.F, expected) is not None
    assert res.r == 1


def test_ex2_is_a_conic_cubed(ex2):
    res = oracle.resultant(ex2)
    assert oracle.proportional(res.F, _t(1, 0, 1) - _t(0, 2, 0)) is not None
    assert res.r == 3
    assert oracle.rth_power_degree(ex2) == 3


def test_ex1_generators(ex1):
    assert oracle.minimal_generators(ex1, "A_as_B", jmax=8) == {(0, 6): 1, (1, 3): 2, (2, 2): 1}
    assert oracle.minimal_generators(ex1, "J_as_B", jmax=8) == {
        (0, 6): 1, (1, 3): 2, (2, 1): 1, (2, 2): 1, (4, 1): 1}
    assert oracle.minimal_generators(ex1, "A_as_S_per_i", jmax=6) == {
        (0, 6): 1, (1, 3): 2, (2, 2): 1, (2, 3): 1, (3, 2): 2, (4, 2): 1}


def test_ex2_generators(ex2):
    assert oracle.minimal_generators(ex2, "A_as_B", jmax=8) == {(0, 2): 1}
    assert oracle.minimal_generators(ex2, "J_as_B", jmax=8) == {(0, 2): 1, (3, 1): 2}


@pytest.mark.parametrize("i, row", [
    (0, [0, 0, 0, 0, 0, 0, 1, 3, 6]),
    (1, [0, 0, 0, 2, 6, 12, 20, 30, 42]),
    (2, [0, 0, 1, 4, 9, 16, 25, 36, 49]),
    (4, [0, 0, 1, 3, 6, 10, 15, 21, 28]),
    (5, [0] * 9),
])
def test_ex1_a_dims(ex1, i, row):
    assert [oracle.a_dim(ex1, i, j) for j in range(9)] == row


def test_a_vanishes_above_delta(ex1, ex2):
    for hb in (ex1, ex2):
        assert all(oracle.a_dim(hb, hb.delta + 1, j) == 0 for j in range(7))


def test_a_is_zero_in_t_degree_one(ex1):
    # A_(i,1) is zero: Sym and Rees agree in T-degree one
    assert all(oracle.a_dim(ex1, i, 1) == 0 for i in range(ex1.delta + 2))


def test_a_lifts_vanish_under_substitution(ex1):
    h = ex1.h
    for f in oracle.a_lifts(ex1, 1, 3):
        assert substitute_T(f, *h).is_zero()


def test_pairing_is_injective(ex1, ex2):
    for hb in (ex1, ex2):
        for i in range(hb.delta + 1):
            assert oracle.pairing_injectivity(hb, i, 5)


def test_free_hilbert_function():
    assert oracle.free_hilbert_function([2, 2], 2) == 2
    assert oracle.free_hilbert_function([1], 3) == 6
    assert oracle.hilbert_series_check([1, 3], 4)
    assert not oracle.hilbert_series_check([1, 2], 4)


def test_manifest_pins_are_reproduced(manifest):
    # cheap subset of the manifest; the acceptance run covers every fixture
    for fx in manifest[:6]:
        res = oracle.resultant(fx.hb)
        assert res.r == fx.pinned["r"]
        got = oracle.multiset_to_list(oracle.minimal_generators(fx.hb, "A_as_B", jmax=8))
        assert got == fx.pinned["A_as_B"]


def test_generated_submodule_of_implicit_equation(ex2):
    dims, mingens = oracle.generated_submodule(ex2, [oracle.resultant(ex2).F], ex2.delta + 1, 6)
    assert mingens == {(0, 2): 1}
    assert all(dims[(i, j)] == oracle.a_dim(ex2, i, j) for (i, j) in dims)
