"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its runtime and budget,
then asserts.  Run with ``pytest tests/test_acceptance.py -v``.
"""

import time
from math import comb

import pytest

from reesalg import oracle
from reesalg.hb import generalized_zero_col1
from reesalg.linkage import delta_minors, span_dim_in_sym
from reesalg.morley import (
    SHAPE_A, SHAPE_FRAK_A, catalog_kernel_dims, catalog_is_exact, gens_bidegrees, goal5_generators,
    morley_delta_check, q_forms, q_forms_d1_2, syzygy_catalog,
)
from reesalg.polyring import substitute_T
from reesalg.structure import (
    allowed_pairs, andy_class, andy_resolution, claudia_degrees, noether_sum,
    resolution_hilbert_function, sextic_classify, suppressed_j_generators, table1,
)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, seconds, budget, note=""):
        status = "PASS" if ok and seconds < budget else "FAIL"
        extra = f" ({note})" if note else ""
        with capsys.disabled():
            print(f"\n{status} criterion {number}: {title} [{seconds:.1f}s / {budget}s]{extra}")
        return status == "PASS"
    return emit


def _timed(fn):
    start = time.perf_counter()
    failures = fn()
    return failures, time.perf_counter() - start


def _degree_table_fixtures(manifest, by_name):
    return [by_name["EX1"].hb] + [fx.hb for fx in manifest if fx.family == "degree_table"]


def test_criterion_1_linkage(report, ex1, ex2):
    def body():
        bad = []
        for hb in (ex1, ex2):
            for i in range(hb.d2 - 1, hb.delta + 1):
                ms = delta_minors(hb, i)
                n = hb.d - 1 - i
                if not (len(ms) == n and all(substitute_T(f, *hb.h).is_zero() for f in ms)
                        and span_dim_in_sym(hb, ms, i, 2) == n == oracle.a_dim(hb, i, 2)):
                    bad.append((hb.name, i))
        return bad
    bad, sec = _timed(body)
    assert report(1, "linkage minors span A_(i,2)", not bad, sec, 10, f"failures {bad}" if bad else "")


def test_criterion_2_degree_table(report, manifest, by_name):
    fixtures = _degree_table_fixtures(manifest, by_name)

    def body():
        bad = []
        for hb in fixtures:
            assert hb.d1 < hb.d2 and generalized_zero_col1(hb)[0]
            per_i = oracle.minimal_generators(hb, "A_as_S_per_i", imax=hb.d2 - 1, jmax=8)
            for i in range(hb.d1 - 1, hb.d2):
                tw = claudia_degrees(hb, i)
                got = {j: n for (a, j), n in per_i.items() if a == i}
                hf = all(oracle.a_dim(hb, i, j) == oracle.free_hilbert_function(
                    [b for b, m in tw.items() for _ in range(m)], j) for j in range(9))
                if got != tw or not hf:
                    bad.append((hb.name, i))
        return bad
    bad, sec = _timed(body)
    pairs = sorted({(hb.d1, hb.d2) for hb in fixtures})
    assert {(2, 4), (2, 5), (3, 5)} <= set(pairs) and len(fixtures) >= 3
    assert report(2, f"S-generator degrees of A_i on {len(fixtures)} fixtures {pairs}", not bad, sec, 120,
                  f"failures {bad}" if bad else "")


def test_criterion_3_b_generators(report, manifest, by_name):
    fixtures = _degree_table_fixtures(manifest, by_name)

    def body():
        bad = []
        for hb in fixtures:
            got = oracle.minimal_generators(hb, "A_as_B", jmax=8, imin=hb.d1 - 1)
            if table1(hb).b_generators != dict(got):
                bad.append(hb.name)
        return bad
    bad, sec = _timed(body)
    assert report(3, "predicted B-generator bidegrees equal the oracle on A_(>= d1-1)", not bad, sec, 60,
                  f"failures {bad}" if bad else "")


def test_criterion_4_syzygy_catalog(report):
    def body():
        bad = []
        for shape in (SHAPE_A, SHAPE_FRAK_A):
            for l in range(3, 13):
                cat = syzygy_catalog(l, shape, 101)
                tmax = max(cat.twists) + 2
                dims = catalog_kernel_dims(cat, 101, tmax)
                # kernel rank 2: dims grow like two free summands
                rank_two = dims[-1][0] - dims[-2][0] == 2
                if not (catalog_is_exact(cat, 101, tmax) and rank_two and sum(cat.twists) == l
                        and oracle.hilbert_series_check(list(cat.twists), l)):
                    bad.append((shape, l))
        return bad
    bad, sec = _timed(body)
    assert report(4, "syzygy catalogs exact for 3 <= l <= 12, both shapes", not bad, sec, 5,
                  "l = 3 uses the corrected column (0, T1, -T2)" + (f"; failures {bad}" if bad else ""))


def test_criterion_5_morley(report, by_name):
    names = ["EX1", "EX2", "random-2-4", "random-3-3"]

    def body():
        bad = []
        for n in names:
            hb = by_name[n].hb
            if not morley_delta_check(hb):
                bad.append((n, "det H"))
            if hb.d1 == 2:
                for i in range(1, hb.d2):
                    if q_forms(hb, i) != q_forms_d1_2(hb, i):
                        bad.append((n, i))
        return bad
    bad, sec = _timed(body)
    assert report(5, "Morley determinant identity and q-form agreement", not bad, sec, 30,
                  f"failures {bad}" if bad else "")


def test_criterion_6_explicit_generators(report, manifest):
    fixtures = [fx.hb for fx in manifest if fx.family == "explicit"]

    def body():
        bad = []
        for hb in fixtures:
            lit = goal5_generators(hb)
            if not all(substitute_T(g, *hb.h).is_zero() for _, _, g in lit.gens):
                bad.append((hb.name, "substitution"))
            gens = [oracle.resultant(hb).F] + [g for _, _, g in lit.gens] + delta_minors(hb, hb.d2 - 1)
            dims, mingens = oracle.generated_submodule(hb, gens, hb.delta + 1, 8)
            want = oracle.minimal_generators(hb, "A_as_B", jmax=8)
            expected = dict(gens_bidegrees(hb.d2))
            expected[(0, hb.d)] = 1
            if dict(mingens) != dict(want) or any(dims[k] != oracle.a_dim(hb, *k) for k in dims):
                bad.append((hb.name, "oracle"))
            if dict(want) != expected:
                bad.append((hb.name, "display"))
        return bad
    bad, sec = _timed(body)
    shapes = sorted({(fx.expect["shape"], fx.hb.d2) for fx in manifest if fx.family == "explicit"})
    assert len(shapes) == 6
    assert report(6, f"explicit generators reproduce A on {len(fixtures)} canonical fixtures", not bad, sec,
                  60, f"failures {bad}" if bad else "")


def test_criterion_7_balanced(report, manifest):
    fixtures = [fx for fx in manifest if fx.family == "balanced"]

    def body():
        bad = []
        for fx in fixtures:
            hb = fx.hb
            cls = andy_class(hb)
            gens, syz = andy_resolution(hb.d1, cls.pair)
            hf = all(oracle.a_dim(hb, hb.d1 - 2, j) == resolution_hilbert_function(gens, syz, j)
                     for j in range(9))
            if list(cls.pair) != fx.expect["pair"] or not hf:
                bad.append(fx.name)
        return bad
    bad, sec = _timed(body)
    covered = {d1: {tuple(fx.expect["pair"]) for fx in fixtures if fx.hb.d1 == d1} for d1 in (3, 4)}
    complete = all(covered[d1] == set(allowed_pairs(d1)) for d1 in (3, 4))
    assert report(7, f"balanced classes ({len(covered[3])} at d1=3, {len(covered[4])} at d1=4)",
                  not bad and complete, sec, 180, f"failures {bad}" if bad else "")


def test_criterion_8_sextics(report, manifest):
    fixtures = [fx for fx in manifest if fx.family == "sextic" or "sextic_row" in fx.expect]

    def body():
        bad, rows = [], set()
        for fx in fixtures:
            hb = fx.hb
            rep = sextic_classify(hb)
            rows.add(rep.row)
            if not (rep.r == 1 and rep.row == fx.expect["sextic_row"]
                    and rep.bidegrees == suppressed_j_generators(hb)
                    and noether_sum(rep.multiplicities) == 10):
                bad.append(fx.name)
        return bad, rows
    (bad, rows), sec = _timed(body)
    assert report(8, f"sextic table rows {sorted(rows)}", not bad and rows == set(range(1, 8)), sec, 300,
                  "row 3 checked with (3,2):2, one more than printed" + (f"; failures {bad}" if bad else ""))


def test_criterion_9_duality(report, manifest):
    def body():
        bad = []
        for fx in manifest:
            hb = fx.hb
            top = all(oracle.a_dim(hb, hb.delta, j) == comb(j, 2) for j in range(2, 7))
            above = all(oracle.a_dim(hb, hb.delta + 1, j) == 0 for j in range(7))
            inj = all(oracle.pairing_injectivity(hb, i, 6) for i in range(hb.delta + 1))
            if not (top and above and inj):
                bad.append(fx.name)
        return bad
    bad, sec = _timed(body)
    assert report(9, f"duality shadows on all {len(manifest)} fixtures", not bad, sec, 60,
                  f"failures {bad}" if bad else "")
