"""Closed-form predictions for the strands of A and their comparison hooks.

Everything here is a formula in (d1, d2, i) plus a few cheap invariants of
phi (generalized zero, mu(I1(phi)), mu(I2(C)), birationality); the oracle is
what these predictions are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import exactlin as el
from .hb import HBMatrix, generalized_zero_col1, mu_I1, mu_I2C, upsilon_poly
from .oracle import free_hilbert_function, minimal_generators, resultant
from .polyring import Poly, monomials_of_degree

Multiset = dict


# ------------------------------------------------------------------ strand ranks

@dataclass(frozen=True)
class ChartPrediction:
    i: int
    part: int                       # which range of i: 1, 2 or 3
    rank: int
    presentation: tuple             # rows of the matrix whose kernel (from S(-2)^n) is A_i; empty when free
    free_twists: tuple[int, ...]    # twists when A_i is known to be free, else ()


def chart_prediction(hb: HBMatrix, i: int) -> ChartPrediction:
    """Rank of A_i and the matrix presenting it, by range of i."""
    d1, d2, delta = hb.d1, hb.d2, hb.delta
    if not 0 <= i <= delta:
        raise ValueError("need 0 <= i <= delta")
    if d2 - 1 <= i:
        return ChartPrediction(i, 3, delta - i + 1, (), (2,) * (delta - i + 1))
    blocks = [upsilon_poly(hb, d2 - i - 1, 1)]
    part, rank = 2, d1
    if i <= d1 - 2:
        part, rank = 1, i + 1
        blocks.append(upsilon_poly(hb, d1 - i - 1, 2))
    # the map is (Upsilon blocks side by side)^T: one row per Upsilon column
    rows = []
    for b in blocks:
        ncols = len(b[0]) if b else 0
        for c in range(ncols):
            rows.append(tuple(b[r][c] for r in range(len(b))))
    return ChartPrediction(i, part, rank, tuple(rows), ())


def _linear_map_matrix(rows, j: int, p: int) -> np.ndarray:
    """Matrix of S(-2)^n -> S(-1)^m in degree j, for a matrix of linear forms in T."""
    src = monomials_of_degree(3, j - 2)
    tgt = monomials_of_degree(3, j - 1)
    tindex = {m: k for k, m in enumerate(tgt)}
    n = len(rows[0])
    M = np.zeros((len(rows) * len(tgt), n * len(src)), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, entry in enumerate(row):
            for e, coef in entry.terms.items():
                for s, mono in enumerate(src):
                    prod = tuple(a + b for a, b in zip(e[2:], mono))
                    M[r * len(tgt) + tindex[prod], c * len(src) + s] += coef
    return M % p


def chart_a_dim(hb: HBMatrix, i: int, j: int) -> int:
    """dim A_(i,j) read off the presentation of A_i."""
    pred = chart_prediction(hb, i)
    n = hb.delta - i + 1
    if j < 2:
        return 0
    nsrc = n * comb(j, 2)
    if not pred.presentation:
        return nsrc
    M = _linear_map_matrix(pred.presentation, j, hb.p)
    return nsrc - el.rank(M, hb.p)


# ------------------------------------------------------------------ generalized zero tables

def _check_claudia(hb: HBMatrix) -> None:
    if not hb.d1 < hb.d2:
        raise ValueError("the degree table needs d1 < d2")
    if not generalized_zero_col1(hb)[0]:
        raise ValueError("the degree table needs a generalized zero in column 1")


def claudia_twists(d: int, d1: int, i: int) -> dict[int, int]:
    """d + d1 - 1 - i = alpha d1 + beta gives {alpha: d1 - beta, alpha + 1: beta}."""
    alpha, beta = divmod(d + d1 - 1 - i, d1)
    out = {alpha: d1 - beta}
    if beta:
        out[alpha + 1] = beta
    return out


def claudia_degrees(hb: HBMatrix, i: int) -> dict[int, int]:
    """T-degrees (with multiplicity) of an S-basis of the free module A_i."""
    _check_claudia(hb)
    if not hb.d1 - 1 <= i <= hb.d2 - 1:
        raise ValueError("need d1-1 <= i <= d2-1")
    return claudia_twists(hb.d, hb.d1, i)


def twist_list(ms: dict[int, int]) -> list[int]:
    return [t for t in sorted(ms) for _ in range(ms[t])]


@dataclass(frozen=True)
class DegreePrediction:
    d1: int
    d2: int
    ranks: dict = field(default_factory=dict)          # i -> rank of A_i
    s_generators: dict = field(default_factory=dict)   # i -> {T-degree: multiplicity}
    corner_points: tuple = ()
    b_generators: dict = field(default_factory=dict)   # (i, j) -> multiplicity


def corner_points(d: int, d1: int) -> list[tuple[int, int]]:
    q, r = divmod(d, d1)
    return [(lam * d1 + r, q - lam) for lam in range(1, q - 1)]


def table1_numbers(d1: int, d2: int) -> DegreePrediction:
    d = d1 + d2
    delta = d - 2
    q, r = divmod(d, d1)
    s_gens, ranks = {}, {}
    for i in range(d1 - 1, delta + 1):
        ms = claudia_twists(d, d1, i) if i <= d2 - 1 else {2: delta - i + 1}
        s_gens[i] = ms
        ranks[i] = sum(ms.values())
    b_gens: dict[tuple[int, int], int] = {}
    if r:
        b_gens[(d1 - 1, q + 1)] = r
    b_gens[(d1 - 1, q)] = d1 - r
    cps = corner_points(d, d1)
    for cp in cps:
        b_gens[cp] = b_gens.get(cp, 0) + 1
    return DegreePrediction(d1, d2, ranks, s_gens, tuple(cps), b_gens)


def table1(hb: HBMatrix) -> DegreePrediction:
    """S-generator degrees of A_i for d1-1 <= i <= delta, corner points, and B-generators."""
    _check_claudia(hb)
    return table1_numbers(hb.d1, hb.d2)


def free_hilbert_matches(hb: HBMatrix, i: int, twists: dict[int, int], jmax: int, a_dim) -> bool:
    return all(a_dim(hb, i, j) == free_hilbert_function(twist_list(twists), j) for j in range(jmax + 1))


# ------------------------------------------------------------------ balanced case

# (mu(I1(phi)), mu(I2(C))) -> (generator twists, syzygy twists) of A_{d1-2};
# the twist 2 appears d1 - OFFSET times.
ANDY_CHART = {
    (6, 6): ((5, {3: 6}), {4: 2}),
    (5, 6): ((4, {3: 3, 4: 1}), {5: 1}),
    (5, 5): ((4, {3: 4}), {4: 1}),
    (4, 6): ((3, {4: 4}), {5: 2}),
    (4, 5): ((3, {3: 1, 4: 2}), {5: 1}),
    (4, 4): ((3, {3: 2}), {}),
    (3, 3): ((2, {4: 1}), {}),
    (2, 1): ((1, {}), {}),
}

ECP_LABELS = {
    (6, 6): ("(empty,mu6)",),
    (5, 6): ("(empty,mu5)",),
    (5, 5): ("(c,mu5)",),
    (4, 6): ("(empty,mu4)",),
    (4, 5): ("(c,mu4)",),
    (4, 4): ("(c,c)", "(c:c)"),
    (3, 3): ("(c,c,c)", "(c:c,c)", "(c:c:c)"),
    (2, 1): ("mu2",),
}


def allowed_pairs(d1: int) -> list[tuple[int, int]]:
    """Pairs permitted at this d1: mu(I1(phi)) can not exceed d1 + 1."""
    return [pr for pr in ANDY_CHART if pr[0] <= d1 + 1]


def andy_resolution(d1: int, pair: tuple[int, int]) -> tuple[dict[int, int], dict[int, int]]:
    if pair not in allowed_pairs(d1):
        raise ValueError(f"pair {pair} is not in the chart for d1 = {d1}")
    (offset, rest), syz = ANDY_CHART[pair]
    gens = dict(rest)
    if d1 - offset > 0:
        gens[2] = gens.get(2, 0) + d1 - offset
    return gens, dict(syz)


def resolution_hilbert_function(gens: dict[int, int], syz: dict[int, int], j: int) -> int:
    return free_hilbert_function(twist_list(gens), j) - free_hilbert_function(twist_list(syz), j)


@dataclass(frozen=True)
class AndyClass:
    d1: int
    pair: tuple[int, int]
    generators: dict
    syzygies: dict
    ecp_labels: tuple[str, ...]

    @property
    def free(self) -> bool:
        return not self.syzygies


def andy_class(hb: HBMatrix) -> AndyClass:
    """Class (mu(I1(phi)), mu(I2(C))) and the resolution shape of A_{d1-2}."""
    if hb.d1 != hb.d2:
        raise ValueError("the balanced classification needs d1 = d2")
    pair = (mu_I1(hb), mu_I2C(hb))
    if pair not in allowed_pairs(hb.d1):
        raise ValueError(f"pair {pair} is not in the chart for d1 = {hb.d1}")
    gens, syz = andy_resolution(hb.d1, pair)
    return AndyClass(hb.d1, pair, gens, syz, ECP_LABELS[pair])


# ------------------------------------------------------------------ sextics

@dataclass(frozen=True)
class SexticRow:
    d1: int
    d2: int
    bidegrees: dict
    multiplicities: tuple[int, ...]      # one entry per singular point on or near the curve
    text: str


SEXTIC_ROWS = (
    SexticRow(1, 5, {(1, 5): 1, (2, 4): 1, (3, 3): 1, (4, 2): 1}, (5,),
              "1 of multiplicity 5 on C"),
    SexticRow(2, 4, {(1, 3): 2, (2, 2): 1}, (4, 2, 2, 2, 2),
              "1 of multiplicity 4 on C, 4 double points on or near C"),
    # A_(2,2) = 0 here while A_(3,2) has dimension d - 1 - (d2 - 1) = 2, so
    # (3,2) carries two minimal generators; the printed table lists it once.
    SexticRow(2, 4, {(1, 4): 4, (2, 3): 3, (3, 2): 2}, (2,) * 10,
              "10 double points on or near C"),
    SexticRow(3, 3, {(1, 4): 4, (2, 2): 3}, (2,) * 10,
              "10 double points on or near C"),
    SexticRow(3, 3, {(1, 3): 1, (1, 4): 2, (2, 2): 3}, (3,) + (2,) * 7,
              "1 of multiplicity 3 on C, 7 double points on or near C"),
    SexticRow(3, 3, {(1, 3): 2, (2, 2): 3}, (3, 3) + (2,) * 4,
              "2 of multiplicity 3 and 4 double points on or near C"),
    SexticRow(3, 3, {(1, 2): 1, (1, 4): 1, (2, 2): 1}, (3, 3, 3, 2),
              "3 of multiplicity 3 and 1 double point on or near C"),
)


# The one entry of the printed table that the oracle contradicts.
PRINTED_ROW3_BIDEGREES = {(1, 4): 4, (2, 3): 3, (3, 2): 1}


def noether_sum(mults) -> int:
    return sum(comb(m, 2) for m in mults)


@dataclass(frozen=True)
class SexticReport:
    d1: int
    d2: int
    r: int
    row: int                 # 1-based row of the sextic table
    bidegrees: dict
    multiplicities: tuple[int, ...]
    configuration: str

    @property
    def noether_ok(self) -> bool:
        return noether_sum(self.multiplicities) == 10


def sextic_row_index(hb: HBMatrix) -> int:
    d1, d2 = hb.degs
    if (d1, d2) == (1, 5):
        return 0
    if (d1, d2) == (2, 4):
        return 1 if generalized_zero_col1(hb)[0] else 2
    t = 6 - mu_I2C(hb)
    if t not in (0, 1, 2, 3):
        raise ValueError(f"6 - mu(I2(C)) = {t} is outside 0..3")
    return 3 + t


def sextic_classify(hb: HBMatrix) -> SexticReport:
    """Sextic table row from (d1, d2), the generalized zero and mu(I2(C))."""
    if hb.d != 6:
        raise ValueError("sextic classification needs d = 6")
    r = resultant(hb).r
    if r != 1:
        raise ValueError(f"parameterization is not birational (r = {r})")
    k = sextic_row_index(hb)
    row = SEXTIC_ROWS[k]
    return SexticReport(row.d1, row.d2, r, k + 1, dict(row.bidegrees), row.multiplicities, row.text)


def suppressed_j_generators(hb: HBMatrix, jmax: int = 8) -> dict:
    """Oracle J_as_B generators without (d1,1), (d2,1) and the implicit equation at (0,6)."""
    ms = dict(minimal_generators(hb, "J_as_B", jmax=jmax))
    for bd in ((hb.d1, 1), (hb.d2, 1), (0, hb.d)):
        if ms.get(bd):
            ms[bd] -= 1
            if not ms[bd]:
                del ms[bd]
    return ms
